#include "mindeg/decorrelate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "mindeg/approx_bucket.hpp"
#include "mindeg/parallel.hpp"

namespace mindeg {

double eps_hat_for(double eps, int n, double c1) {
    double ln = std::max(1.0, std::log(static_cast<double>(std::max(n, 1))));
    return eps / (c1 * ln);
}

std::vector<double> sample_decreasing_exponentials(int k, double c2, Rng& rng, bool full) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!(c2 > 0)) throw std::invalid_argument("c2 must be positive");
    // Invert the CDF of the maximum, (1 - e^{-x})^k, by bisection.
    const double u = uniform01(rng);
    double lo = 0.0, hi = 60.0;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        double cdf = std::exp(k * std::log1p(-std::exp(-mid)));
        (cdf < u ? lo : hi) = mid;
    }
    const double top = 0.5 * (lo + hi);
    std::vector<double> out{top};
    double cur = top;
    // Given X_(j+1) = x, X_(j) is the largest of j exponentials truncated to
    // [0, x]; its CDF ((1 - e^{-y}) / (1 - e^{-x}))^j inverts in closed form.
    // For large k the spacings approach independent Exp(i) gaps.
    for (int j = k - 1; j >= 1; --j) {
        double v = 1.0 - uniform01(rng);
        cur = -std::log1p(std::expm1(-cur) * std::pow(v, 1.0 / j));
        if (!full && cur < top - c2) break;
        out.push_back(cur);
    }
    return out;
}

std::vector<DecayedCandidate> exp_decayed_candidates(int size, const std::function<int(int)>& member,
                                                     int bucket_index, double eps_hat, double c2, Rng& chain,
                                                     Rng& assign, bool full) {
    if (size < 1) throw std::invalid_argument("empty candidate set");
    auto xs = sample_decreasing_exponentials(size, c2, chain, full);
    const int m = std::min<int>(size, static_cast<int>(xs.size()));
    // Partial Fisher-Yates with virtual swaps: distinct uniform members.
    std::unordered_map<int, int> swapped;
    auto at = [&](int i) {
        auto it = swapped.find(i);
        return it == swapped.end() ? i : it->second;
    };
    std::vector<DecayedCandidate> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int j = i + static_cast<int>(uniform_below(assign, static_cast<std::uint64_t>(size - i)));
        int pick = at(j);
        swapped[j] = at(i);
        out.push_back({std::max(0.0, eps_hat * xs[i]), member(pick), bucket_index});
    }
    return out;
}

std::vector<DecayedCandidate> exp_decayed_candidates(const std::vector<int>& s, int bucket_index, double eps_hat,
                                                     double c2, Rng& rng) {
    Rng chain(rng()), assign(rng());
    return exp_decayed_candidates(
        static_cast<int>(s.size()), [&](int i) { return s[i]; }, bucket_index, eps_hat, c2, chain, assign);
}

namespace {

enum Purpose : std::uint64_t { chain_stream = 1, assign_stream = 2, estimate_stream = 3 };

}  // namespace

OrderingResult approx_min_degree_sequence(const Graph& g, double eps, std::uint64_t seed,
                                          const DecorrelateConfig& cfg, DecorrelateAudit* audit) {
    if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2]");
    const int n = g.n;
    const double eh = eps_hat_for(eps, n, cfg.c1);
    const double est_eps = cfg.estimate_eps > 0 ? cfg.estimate_eps : eps;
    ApproxConfig acfg;
    acfg.c_q = cfg.c_q;
    acfg.threads = cfg.threads;
    ApproxDegreeDS ds(g, eh, seed, acfg);
    const auto& cg = ds.graph();
    const double ln = std::max(1.0, std::log(static_cast<double>(std::max(n, 2))));
    const int scan = static_cast<int>(std::ceil(cfg.c_scan * ln / eh));
    const double window = std::pow(1.0 + eh, 7);

    OrderingResult res;
    res.seed = seed;
    res.order.reserve(static_cast<std::size_t>(n));
    res.degrees.reserve(static_cast<std::size_t>(n));
    std::vector<int> best_of(static_cast<std::size_t>(n), -1);
    DecorrelateAudit local;
    OracleCounter total_calls;

    for (int step = 0; step < n; ++step) {
        const auto s = static_cast<std::uint64_t>(step);
        auto rep = ds.report();
        const int first = rep.first_nonempty();
        const int last = std::min(rep.size() - 1, first + scan);
        std::vector<DecayedCandidate> cands;
        for (int i = first; i <= last; ++i) {
            const auto& b = rep.bucket(i);
            if (b.empty()) continue;
            const auto bi = static_cast<std::uint64_t>(i);
            Rng chain = make_rng({seed, tag(Stream::decay), s, bi, chain_stream});
            Rng assign = make_rng({seed, tag(Stream::decay), s, bi, assign_stream});
            auto part = exp_decayed_candidates(
                b.size(), [&](int r) { return b.at(r); }, i, eh, cfg.c2, chain, assign);
            cands.insert(cands.end(), part.begin(), part.end());
        }
        // One entry per vertex, keeping the larger perturbation.
        std::vector<DecayedCandidate> uniq;
        for (const auto& c : cands) {
            int& slot = best_of[c.vertex];
            if (slot < 0) {
                slot = static_cast<int>(uniq.size());
                uniq.push_back(c);
            } else if (c.delta > uniq[slot].delta) {
                uniq[slot] = c;
            }
        }
        for (const auto& c : uniq) best_of[c.vertex] = -1;

        auto bucket_score = [&](const DecayedCandidate& c) { return (1.0 - c.delta) * std::pow(1.0 + eh, c.bucket_index); };
        double floor_score = std::numeric_limits<double>::infinity();
        for (const auto& c : uniq) floor_score = std::min(floor_score, bucket_score(c));
        std::vector<DecayedCandidate> kept;
        for (const auto& c : uniq)
            if (bucket_score(c) <= std::max(window * floor_score, floor_score)) kept.push_back(c);

        std::vector<double> est(kept.size());
        std::vector<std::int64_t> calls(static_cast<std::size_t>(std::max(1, cfg.threads)), 0);
        parallel_for(static_cast<int>(kept.size()), cfg.threads, [&](int b, int e, int t) {
            OracleCounter oc;
            for (int i = b; i < e; ++i) {
                auto v = static_cast<std::uint64_t>(kept[i].vertex);
                est[i] = estimate_degree(cg, kept[i].vertex, est_eps,
                                         mix({seed, tag(Stream::estimate), s, v, estimate_stream}), &oc,
                                         cfg.estimator);
            }
            calls[t] = oc.calls;
        });
        for (auto c : calls) total_calls.calls += c;

        int chosen = -1;
        double chosen_score = 0, chosen_est = 0;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            double sc = (1.0 - kept[i].delta) * est[i];
            if (chosen < 0 || sc < chosen_score || (sc == chosen_score && kept[i].vertex < chosen)) {
                chosen = kept[i].vertex;
                chosen_score = sc;
                chosen_est = est[i];
            }
        }

        ++local.steps;
        local.candidates += static_cast<std::int64_t>(uniq.size());
        local.estimate_calls += static_cast<std::int64_t>(kept.size());
        if (cfg.audit) {
            // The decayed minimum by true degree among all candidates must
            // survive trimming.
            int arg = -1;
            double best = 0;
            for (const auto& c : uniq) {
                double sc = (1.0 - c.delta) * cg.fill_degree(c.vertex);
                if (arg < 0 || sc < best || (sc == best && c.vertex < arg)) {
                    arg = c.vertex;
                    best = sc;
                }
            }
            ++local.trim_checks;
            for (const auto& c : kept)
                if (c.vertex == arg) {
                    ++local.trim_kept_argmin;
                    break;
                }
        }

        res.order.push_back(chosen);
        res.degrees.push_back(chosen_est);
        ds.pivot(chosen);
    }
    res.audit.informs = ds.informs();
    res.audit.oracle_calls = total_calls.calls;
    res.audit.copies = ds.copies();
    if (audit) *audit = local;
    return res;
}

}  // namespace mindeg
