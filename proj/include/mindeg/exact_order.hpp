#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mindeg/graph.hpp"
#include "mindeg/minimizers.hpp"
#include "mindeg/sketch.hpp"

namespace mindeg {

struct ExactConfig {
    std::uint64_t seed = 1;
    double c_k = 4.0;  // copies = ceil(c_k * cap * ln n)
    int threads = 1;
};

int copies_for_cap(double c_k, int cap, int n);

// Distinct minimizer owners per remaining vertex plus an ordered index on
// (count, id). u's own key is always counted, so count = |N_fill(u) ∪ {u}|
// whenever every owner was collected.
class MinimizerTable {
public:
    explicit MinimizerTable(int n) : owners_(n), live_(static_cast<std::size_t>(n), 0) {}

    void track(int v) { live_[v] = 1; }
    void add(int v, int owner) { owners_.add(v, owner); }
    void remove(int v, int owner) { owners_.remove(v, owner); }

    int distinct(int v) const { return owners_.distinct(v) + (owners_.count(v, v) > 0 ? 0 : 1); }
    int reported_degree(int v) const { return distinct(v) - 1; }

    void index(int v) { bst_.emplace(distinct(v), v); }
    void unindex(int v) { bst_.erase({distinct(v), v}); }
    void drop(int v) {
        unindex(v);
        owners_.clear(v);
        live_[v] = 0;
    }
    bool empty() const { return bst_.empty(); }
    std::pair<int, int> min() const { return *bst_.begin(); }
    const std::set<std::pair<int, int>>& ordered() const { return bst_; }

    // Load every copy's current minimizers for all live vertices.
    void load(const SketchBank& bank, int first_copy, int last_copy, const ComponentGraph& cg);
    // Apply a pivot's change list (index kept consistent).
    void apply(const std::vector<SketchBank::Change>& changes);

private:
    OwnerCounter owners_;
    std::vector<char> live_;
    std::set<std::pair<int, int>> bst_;
    std::vector<int> scratch_;
};

// Pivots the vertex with the smallest distinct-minimizer count each step,
// with k = ceil(c_k * delta * ln n) copies. Exact w.h.p. while the step
// minimum stays within delta.
OrderingResult delta_capped_min_degree(const Graph& g, int delta, const ExactConfig& cfg = {});

// Doubling cap C (starting at 2); copies are topped up on the current graph
// whenever the capped minimum exceeds C/2. `caps`, if given, receives the
// cap in force at each pivot.
OrderingResult output_sensitive_min_degree(const Graph& g, const ExactConfig& cfg = {},
                                           std::vector<int>* caps = nullptr);

}  // namespace mindeg
