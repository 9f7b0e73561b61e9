#include "mindeg/exact_order.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mindeg {

int copies_for_cap(double c_k, int cap, int n) {
    double ln = std::log(std::max(n, 2));
    return std::max(1, static_cast<int>(std::ceil(c_k * cap * ln)));
}

void MinimizerTable::load(const SketchBank& bank, int first_copy, int last_copy, const ComponentGraph& cg) {
    for (int v = 0; v < cg.n(); ++v) {
        if (!live_[v]) continue;
        for (int i = first_copy; i < last_copy; ++i) add(v, bank.copy(i).query_owner(v));
    }
}

void MinimizerTable::apply(const std::vector<SketchBank::Change>& changes) {
    scratch_.clear();
    std::vector<char> mark(live_.size(), 0);
    for (const auto& ch : changes) {
        if (!mark[ch.v]) {
            mark[ch.v] = 1;
            scratch_.push_back(ch.v);
            unindex(ch.v);
        }
    }
    for (const auto& ch : changes) {
        remove(ch.v, ch.old_owner);
        add(ch.v, ch.new_owner);
    }
    for (int v : scratch_) index(v);
}

namespace {

struct ExactRun {
    ComponentGraph cg;
    SketchBank bank;
    MinimizerTable table;
    std::vector<SketchBank::Change> changes;

    ExactRun(const Graph& g, const ExactConfig& cfg)
        : cg(g), bank(cfg.seed, std::max(1, cfg.threads)), table(g.n) {
        for (int v = 0; v < g.n; ++v) table.track(v);
    }

    void grow(int target) {
        int have = bank.size();
        if (target <= have) return;
        bank.add_copies(cg, target - have);
        for (int v = 0; v < cg.n(); ++v)
            if (cg.is_remaining(v)) table.unindex(v);
        table.load(bank, have, target, cg);
        for (int v = 0; v < cg.n(); ++v)
            if (cg.is_remaining(v)) table.index(v);
    }

    void pivot(int u) {
        table.drop(u);
        bank.pivot(cg, u, changes);
        table.apply(changes);
    }
};

}  // namespace

OrderingResult delta_capped_min_degree(const Graph& g, int delta, const ExactConfig& cfg) {
    if (delta < 1) throw std::invalid_argument("delta must be at least 1");
    OrderingResult res;
    res.seed = cfg.seed;
    ExactRun run(g, cfg);
    run.grow(copies_for_cap(cfg.c_k, delta, g.n));
    while (!run.table.empty()) {
        auto [count, u] = run.table.min();
        res.order.push_back(u);
        res.degrees.push_back(count - 1);
        run.pivot(u);
    }
    res.audit.informs = run.bank.op_counter();
    res.audit.copies = run.bank.size();
    return res;
}

OrderingResult output_sensitive_min_degree(const Graph& g, const ExactConfig& cfg, std::vector<int>* caps) {
    OrderingResult res;
    res.seed = cfg.seed;
    ExactRun run(g, cfg);
    int cap = 2;
    run.grow(copies_for_cap(cfg.c_k, cap, g.n));
    if (caps) caps->clear();
    while (!run.table.empty()) {
        auto [count, u] = run.table.min();
        // Capped comparison: a minimum below C/2 is also the minimum of the
        // clamped counts, so the raw index already gives the clamped order.
        int capped = std::min(count - 1, cap);
        if (2 * capped > cap) {
            cap *= 2;
            run.grow(copies_for_cap(cfg.c_k, cap, g.n));
            continue;
        }
        res.order.push_back(u);
        res.degrees.push_back(count - 1);
        if (caps) caps->push_back(cap);
        run.pivot(u);
    }
    res.audit.informs = run.bank.op_counter();
    res.audit.copies = run.bank.size();
    return res;
}

}  // namespace mindeg
