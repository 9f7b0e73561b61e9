#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mindeg/graph.hpp"

namespace mindeg {

// --- standard families -----------------------------------------------------

Graph grid_graph(int k);  // k x k, id = row * k + col
Graph erdos_renyi(int n, double p, std::uint64_t seed);
Graph clique_graph(int n);
Graph star_graph(int n);  // vertex 0 is the center, 1..n-1 leaves
Graph path_graph(int n);

// family: grid | erdos_renyi | clique | star | path. `size` is k for grid
// and n otherwise; `p` only matters for erdos_renyi.
Graph generate(const std::string& family, int size, double p, std::uint64_t seed);

// --- covering set systems --------------------------------------------------

bool is_prime(long long x);
long long next_prime(long long x);  // smallest prime >= x

struct CoveringSetSystem {
    int n = 0;
    int p = 0;
    std::vector<std::vector<int>> sets;  // subsets of {1..n}, each ascending
};

// Lines y = ax + b and rows x = a of a p x p array holding 1..p^2, cut down
// to [n]; p is the smallest prime >= ceil(sqrt(n)).
CoveringSetSystem covering_set_system(int n);

struct CoverCheck {
    int k = 0;
    int max_size = 0;
    bool all_pairs_covered = false;
    bool size_bound = false;   // every |I_j| <= 10 sqrt(n)
    bool count_bound = false;  // k <= 6n (p < 2 ceil(sqrt n) gives k <= p^2 + p)
    bool ok() const { return all_pairs_covered && size_bound && count_bound; }
};

// Exhaustive pair check, O(sum |I_j|^2 + n^2) time, n^2 bits of memory.
CoverCheck verify_covering(const CoveringSetSystem& cs);

// --- orthogonal vectors reduction ------------------------------------------

using BitVectors = std::vector<std::vector<int>>;

struct OVInstance {
    BitVectors vectors;
    int d = 0;
    int pad = 0;  // |V_pad| = 20 ceil(sqrt n)
    Graph graph;
    std::vector<int> vec_ids, dim_ids, pad_ids;
};

OVInstance ov_reduction_graph(const BitVectors& vectors);

bool has_orthogonal_pair(const BitVectors& vectors);  // direct O(n^2 d) scan

struct OVDecision {
    bool orthogonal = false;  // next pivot degree < pad + n - 1
    int next_degree = 0;
    int threshold = 0;
    bool dim_first = false;   // every V_dim vertex pivoted before V_vec/V_pad
};

// Runs the brute-force greedy ordering for |V_dim| + 1 steps and reads off the
// fill degree of the first non-V_dim pivot.
OVDecision ov_decide_bruteforce(const OVInstance& inst);

BitVectors random_bit_vectors(int n, int d, double density, std::uint64_t seed);

// --- adaptive correlation demonstration ------------------------------------

struct CorrelationReport {
    int n = 0;
    int key_set_size = 0;
    int final_set_size = 0;       // |S_2| after the adaptive loop
    double oblivious_max_error = 0;  // max |estimate - |S_2|| along a fixed random deletion sequence
};

// Sets S_1, S_2 over {1..n}; the structure only sees S_i ∩ K for a random K
// of ceil(c ln n / eps^2) elements and answers "smallest set" with ties to
// S_1. The adaptive loop deletes x from S_2 and re-inserts it whenever S_2
// becomes the reported minimum.
CorrelationReport adversarial_correlation_demo(int n, double eps, std::uint64_t seed, double c = 1.0);

}  // namespace mindeg
