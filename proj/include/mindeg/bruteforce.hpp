#pragma once

#include <cstdint>
#include <vector>

#include "mindeg/graph.hpp"

namespace mindeg {

// Search-based fill computation: from v, walk through eliminated vertices
// only and collect every remaining endpoint reached. Buffers are reused
// across calls, so one oracle per thread.
class FillOracle {
public:
    explicit FillOracle(const Graph& g);

    // eliminated[v] != 0 marks v eliminated. Throws if v itself is eliminated.
    int degree(const std::vector<char>& eliminated, int v);
    std::vector<int> neighbors(const std::vector<char>& eliminated, int v);

private:
    template <class F>
    void walk(const std::vector<char>& eliminated, int v, F&& on_remaining);

    const Graph& g_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t epoch_ = 0;
    std::vector<int> stack_;
};

int fill_degree_bruteforce(const Graph& g, const std::vector<char>& eliminated, int v);

// Fill graph by repeated clique insertion. Keeps the original vertex ids;
// eliminated vertices come out isolated.
Graph fill_graph_bruteforce(const Graph& g, const std::vector<char>& eliminated);

// Greedy minimum fill-degree ordering, ties to the smallest id.
OrderingResult mindeg_ordering_bruteforce(const Graph& g);

// Same greedy rule driven by the quotient graph: after a pivot only its fill
// neighbors change degree, so only they are re-measured. Reference for
// graphs too large for the search-based oracle.
OrderingResult mindeg_ordering_quotient(const Graph& g);

// Sum of fill degrees of the pivots at their elimination times.
std::int64_t total_fill(const Graph& g, const std::vector<int>& perm);

struct VerifyReport {
    double max_ratio = 1.0;  // pivot degree / true minimum; 0/0 = 1, d/0 = inf
    int violating_steps = 0;  // steps with degree > (1 + eps) * minimum
    std::vector<int> degrees, minima;
};

// Step-by-step check of an ordering against the true minimum fill degree.
VerifyReport verify_ordering(const Graph& g, const std::vector<int>& perm, double eps);

}  // namespace mindeg
