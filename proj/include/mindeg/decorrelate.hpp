#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mindeg/estimator.hpp"
#include "mindeg/graph.hpp"
#include "mindeg/rng.hpp"

namespace mindeg {

struct DecayedCandidate {
    double delta = 0;  // eps_hat * X
    int vertex = -1;
    int bucket_index = 0;
};

// eps / (c1 * ln n), with ln n floored at 1 for tiny graphs.
double eps_hat_for(double eps, int n, double c1 = 3.0);

// Largest order statistics X_(k) >= X_(k-1) >= ... of k i.i.d. Exp(1)
// variables, stopping before the first value below X_(k) - c2. With
// `full`, the chain continues down to X_(1) (the coupled continuation).
std::vector<double> sample_decreasing_exponentials(int k, double c2, Rng& rng, bool full = false);

// Candidates for the decayed minimum of a set of `size` elements, accessed
// by rank through `member`. The chain and the assignment use separate
// streams so that `full` extends the truncated output as a prefix.
std::vector<DecayedCandidate> exp_decayed_candidates(int size, const std::function<int(int)>& member,
                                                     int bucket_index, double eps_hat, double c2, Rng& chain,
                                                     Rng& assign, bool full = false);

std::vector<DecayedCandidate> exp_decayed_candidates(const std::vector<int>& s, int bucket_index, double eps_hat,
                                                     double c2, Rng& rng);

struct DecorrelateConfig {
    // Per-step decay failure is about n^{1-c1}; c1 = 3 keeps the union over
    // all n steps small, c1 = 2 would only bound a single step.
    double c1 = 3.0;
    double c2 = 7.0;
    double c_scan = 2.0;
    double c_q = 8.0;
    // Accuracy passed to the degree estimator; 0 means eps itself.
    double estimate_eps = 0.0;
    int threads = 1;
    bool audit = false;  // exact fill-degree checks per step (slow)
    EstimatorConfig estimator;
};

struct DecorrelateAudit {
    std::int64_t steps = 0;
    std::int64_t candidates = 0;      // before trimming
    std::int64_t estimate_calls = 0;  // after trimming
    std::int64_t trim_checks = 0;
    std::int64_t trim_kept_argmin = 0;
};

OrderingResult approx_min_degree_sequence(const Graph& g, double eps, std::uint64_t seed,
                                          const DecorrelateConfig& cfg = {}, DecorrelateAudit* audit = nullptr);

}  // namespace mindeg
