#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mindeg/component_graph.hpp"

namespace mindeg {

struct SketchKey {
    double x = std::numeric_limits<double>::infinity();
    int owner = -1;  // -1: empty heap

    bool empty() const { return owner < 0; }
    // Total order; owner breaks exact ties so minima are deterministic.
    friend bool operator<(const SketchKey& a, const SketchKey& b) {
        return a.x < b.x || (a.x == b.x && a.owner < b.owner);
    }
    friend bool operator==(const SketchKey& a, const SketchKey& b) { return a.x == b.x && a.owner == b.owner; }
};

// x-value of vertex v in copy `copy_index`: a pure function of the triple.
double sketch_key(std::uint64_t seed, std::uint64_t copy_index, int v);

enum class MeldSide { none, first, second };

// Meld decision: the side whose remaining-min is strictly larger gets informed
// of the other's min (cost = its remaining-set size). Equal x informs no one.
MeldSide meld(const SketchKey& a_min, std::size_t a_size, const SketchKey& b_min, std::size_t b_size,
              std::int64_t& op_counter);

// Copy-independent view of one pivot, shared by every sketch copy.
struct PivotPlan {
    int u = -1;
    std::vector<int> comps;              // N_component(u), ascending
    std::vector<int> direct;             // N_remaining(u) before the pivot
    std::vector<std::size_t> comp_size;  // |N_remaining(w)| once u is removed
    std::vector<std::size_t> acc_size;   // size of the melded set before each meld
    int merged = -1;                     // component id after the pivot
    const std::vector<int>* touched = nullptr;  // N_remaining(merged) after the pivot

    static PivotPlan before(const ComponentGraph& cg, int u);
    void after(const ComponentGraph& cg, int merged_id);
};

// One dynamic l0-sketch copy. Each heap of the classic formulation is kept
// as its minimum only; a heap whose minimum leaves is recomputed by scanning
// the (shared) neighbor set in the component graph. State is a function of
// the current graph and the keys, which is what the rebuild check relies on.
class SketchCopy {
public:
    SketchCopy(const ComponentGraph& cg, std::uint64_t seed, std::uint64_t copy_index);
    SketchCopy(const ComponentGraph& cg, std::vector<double> keys);  // forced keys (tests)

    SketchKey key_of(int v) const { return {key_[v], v}; }
    SketchKey query_min(const ComponentGraph& cg, int u) const;
    int query_owner(int u) const { return qmin_[u]; }
    SketchKey component_min(int c) const { return at(cmin_[c]); }
    std::int64_t op_counter() const { return ops_; }

    void prepare_pivot(const ComponentGraph& cg, const PivotPlan& plan);
    // Records (v, old owner) for every remaining vertex whose minimum changed.
    template <class Sink>
    void finish_pivot(const ComponentGraph& cg, const PivotPlan& plan, Sink&& sink);

    std::vector<int> inform_remaining(const ComponentGraph& cg, int w, const SketchKey& x_old,
                                      const SketchKey& x_new);

    void rebuild(const ComponentGraph& cg);

    // Brute-force min over N_fill(u) ∪ {u}, for tests.
    SketchKey recompute_min(const ComponentGraph& cg, int u) const;

private:
    SketchKey at(int owner) const { return owner < 0 ? SketchKey{} : SketchKey{key_[owner], owner}; }
    bool less(int a, int b) const {
        if (b < 0) return a >= 0;
        if (a < 0) return false;
        return key_[a] < key_[b] || (key_[a] == key_[b] && a < b);
    }
    int scan_fill(const ComponentGraph& cg, int v) const;
    int scan_set(const std::vector<int>& s, int skip) const;

    std::vector<double> key_;
    std::vector<int> cmin_;  // per component id: owner of min over N_remaining(c)
    std::vector<int> qmin_;  // per remaining vertex: owner of min over N_fill ∪ {self}
    int pending_ = -1;
    std::int64_t ops_ = 0;
};

template <class Sink>
void SketchCopy::finish_pivot(const ComponentGraph& cg, const PivotPlan& plan, Sink&& sink) {
    const int u = plan.u;
    for (int w : plan.comps)
        if (w != plan.merged) cmin_[w] = -1;
    cmin_[plan.merged] = pending_;
    for (int v : *plan.touched) {
        int old = qmin_[v];
        int now = (old == u) ? scan_fill(cg, v) : (less(pending_, old) ? pending_ : old);
        if (now != old) {
            qmin_[v] = now;
            sink(v, old, now);
        }
    }
    qmin_[u] = -1;
}

// Single-copy lockstep pivot; returns the ascending changed list.
std::vector<int> pivot_vertex(ComponentGraph& cg, SketchCopy& s, int u);

// A bank of independent copies updated together (optionally in parallel).
class SketchBank {
public:
    struct Change {
        int copy;
        int v;
        int old_owner;
        int new_owner;
    };

    SketchBank(std::uint64_t seed, int threads = 1) : seed_(seed), threads_(threads) {}

    void add_copies(const ComponentGraph& cg, int count);
    int size() const { return static_cast<int>(copies_.size()); }
    const SketchCopy& copy(int i) const { return copies_[i]; }
    std::int64_t op_counter() const;

    // Pivots u in the graph and every copy; changes are ordered by copy.
    int pivot(ComponentGraph& cg, int u, std::vector<Change>& changes);

private:
    std::uint64_t seed_;
    int threads_;
    std::vector<SketchCopy> copies_;
};

}  // namespace mindeg
