#include "mindeg/sketch.hpp"

#include <algorithm>
#include <stdexcept>

#include "mindeg/parallel.hpp"
#include "mindeg/rng.hpp"

namespace mindeg {

double sketch_key(std::uint64_t seed, std::uint64_t copy_index, int v) {
    return to_unit(mix({seed, tag(Stream::sketch_key), copy_index, static_cast<std::uint64_t>(v)}));
}

MeldSide meld(const SketchKey& a_min, std::size_t a_size, const SketchKey& b_min, std::size_t b_size,
              std::int64_t& op_counter) {
    if (a_min.x < b_min.x) {
        op_counter += static_cast<std::int64_t>(b_size);
        return MeldSide::second;
    }
    if (b_min.x < a_min.x) {
        op_counter += static_cast<std::int64_t>(a_size);
        return MeldSide::first;
    }
    return MeldSide::none;
}

PivotPlan PivotPlan::before(const ComponentGraph& cg, int u) {
    if (u < 0 || u >= cg.n() || !cg.is_remaining(u)) throw std::logic_error("pivot: vertex is not remaining");
    PivotPlan p;
    p.u = u;
    p.comps = cg.component_neighbors(u);
    p.direct = cg.remaining_neighbors(u);
    std::vector<int> acc = p.direct;
    for (int w : p.comps) {
        const auto& s = cg.remaining_neighbors(w);
        p.comp_size.push_back(s.size() - 1);  // u is always a member
        p.acc_size.push_back(acc.size());
        std::vector<int> merged;
        merged.reserve(acc.size() + s.size());
        std::set_union(acc.begin(), acc.end(), s.begin(), s.end(), std::back_inserter(merged));
        merged.erase(std::remove(merged.begin(), merged.end(), u), merged.end());
        acc.swap(merged);
    }
    return p;
}

void PivotPlan::after(const ComponentGraph& cg, int merged_id) {
    merged = merged_id;
    touched = &cg.remaining_neighbors(merged_id);
}

SketchCopy::SketchCopy(const ComponentGraph& cg, std::uint64_t seed, std::uint64_t copy_index)
    : key_(static_cast<std::size_t>(cg.n())) {
    for (int v = 0; v < cg.n(); ++v) key_[v] = sketch_key(seed, copy_index, v);
    rebuild(cg);
}

SketchCopy::SketchCopy(const ComponentGraph& cg, std::vector<double> keys) : key_(std::move(keys)) {
    if (static_cast<int>(key_.size()) != cg.n()) throw std::invalid_argument("sketch: key count mismatch");
    rebuild(cg);
}

int SketchCopy::scan_set(const std::vector<int>& s, int skip) const {
    int best = -1;
    for (int x : s)
        if (x != skip && less(x, best)) best = x;
    return best;
}

int SketchCopy::scan_fill(const ComponentGraph& cg, int v) const {
    int best = v;
    for (int x : cg.remaining_neighbors(v))
        if (less(x, best)) best = x;
    for (int c : cg.component_neighbors(v))
        if (less(cmin_[c], best)) best = cmin_[c];
    return best;
}

void SketchCopy::rebuild(const ComponentGraph& cg) {
    const int n = cg.n();
    cmin_.assign(static_cast<std::size_t>(n), -1);
    qmin_.assign(static_cast<std::size_t>(n), -1);
    for (int c : cg.components()) cmin_[c] = scan_set(cg.remaining_neighbors(c), -1);

    // Visit vertices by increasing key; the first visitor that reaches an
    // unassigned vertex is its minimum. Each component is expanded once, by
    // its own minimum, and the sweep stops when everyone is assigned.
    std::vector<int> heap = cg.remaining_vertices();
    int left = static_cast<int>(heap.size());
    auto greater = [this](int a, int b) { return less(b, a); };
    std::make_heap(heap.begin(), heap.end(), greater);
    auto assign = [&](int y, int v) {
        if (qmin_[y] < 0) {
            qmin_[y] = v;
            --left;
        }
    };
    while (left > 0 && !heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), greater);
        int v = heap.back();
        heap.pop_back();
        assign(v, v);
        for (int y : cg.remaining_neighbors(v)) assign(y, v);
        for (int c : cg.component_neighbors(v))
            if (cmin_[c] == v)
                for (int y : cg.remaining_neighbors(c)) assign(y, v);
    }
}

SketchKey SketchCopy::query_min(const ComponentGraph& cg, int u) const {
    if (!cg.is_remaining(u)) throw std::logic_error("query_min: vertex is eliminated");
    return at(qmin_[u]);
}

SketchKey SketchCopy::recompute_min(const ComponentGraph& cg, int u) const {
    int best = u;
    for (int y : cg.fill_neighbors(u))
        if (less(y, best)) best = y;
    return at(best);
}

void SketchCopy::prepare_pivot(const ComponentGraph& cg, const PivotPlan& plan) {
    const int u = plan.u;
    int acc = scan_set(plan.direct, -1);
    for (std::size_t j = 0; j < plan.comps.size(); ++j) {
        int w = plan.comps[j];
        int mw = cmin_[w];
        if (mw == u) {
            // u was the component's minimum: its neighbors must hear about the new one.
            mw = scan_set(cg.remaining_neighbors(w), u);
            ops_ += static_cast<std::int64_t>(plan.comp_size[j]);
        }
        meld(at(acc), plan.acc_size[j], at(mw), plan.comp_size[j], ops_);
        if (less(mw, acc)) acc = mw;
    }
    pending_ = acc;
}

std::vector<int> SketchCopy::inform_remaining(const ComponentGraph& cg, int w, const SketchKey& x_old,
                                              const SketchKey& x_new) {
    if (!cg.is_component(w)) throw std::logic_error("inform_remaining: not a component");
    cmin_[w] = x_new.owner;
    std::vector<int> changed;
    const auto& nb = cg.remaining_neighbors(w);
    ops_ += static_cast<std::int64_t>(nb.size());
    for (int v : nb) {
        int old = qmin_[v];
        int now = old;
        if (old == x_old.owner && x_old.owner >= 0 && less(x_old.owner, x_new.owner))
            now = scan_fill(cg, v);  // the departing entry may have been the minimum
        else if (less(x_new.owner, old))
            now = x_new.owner;
        if (now != old) {
            qmin_[v] = now;
            changed.push_back(v);
        }
    }
    return changed;
}

std::vector<int> pivot_vertex(ComponentGraph& cg, SketchCopy& s, int u) {
    PivotPlan plan = PivotPlan::before(cg, u);
    s.prepare_pivot(cg, plan);
    plan.after(cg, cg.pivot(u));
    std::vector<int> changed;
    s.finish_pivot(cg, plan, [&](int v, int, int) { changed.push_back(v); });
    return changed;
}

void SketchBank::add_copies(const ComponentGraph& cg, int count) {
    const int base = size();
    copies_.reserve(static_cast<std::size_t>(base + count));
    for (int i = 0; i < count; ++i) copies_.emplace_back(cg, seed_, static_cast<std::uint64_t>(base + i));
}

std::int64_t SketchBank::op_counter() const {
    std::int64_t t = 0;
    for (const auto& c : copies_) t += c.op_counter();
    return t;
}

int SketchBank::pivot(ComponentGraph& cg, int u, std::vector<Change>& changes) {
    PivotPlan plan = PivotPlan::before(cg, u);
    const int k = size();
    parallel_for(k, threads_, [&](int b, int e, int) {
        for (int i = b; i < e; ++i) copies_[i].prepare_pivot(cg, plan);
    });
    plan.after(cg, cg.pivot(u));
    int workers = std::max(1, std::min(threads_, k));
    std::vector<std::vector<Change>> out(static_cast<std::size_t>(workers));
    parallel_for(k, threads_, [&](int b, int e, int t) {
        auto& o = out[t];
        for (int i = b; i < e; ++i)
            copies_[i].finish_pivot(cg, plan, [&](int v, int old, int now) { o.push_back({i, v, old, now}); });
    });
    changes.clear();
    for (auto& o : out) changes.insert(changes.end(), o.begin(), o.end());
    return plan.merged;
}

}  // namespace mindeg
