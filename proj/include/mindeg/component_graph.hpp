#pragma once

#include <cstdint>
#include <vector>

#include "mindeg/graph.hpp"
#include "mindeg/rng.hpp"

namespace mindeg {

enum class VertexState : std::uint8_t { remaining, eliminated };

// Quotient graph of a partially eliminated graph. Connected eliminated
// vertices are contracted into a component; components only ever neighbor
// remaining vertices. A component is identified by one of its member vertex
// ids, so per-vertex arrays double as per-component arrays.
//
// All neighbor sets are sorted vectors: uniform sampling is O(1), membership
// O(log n), and structural comparison is a plain vector compare.
class ComponentGraph {
public:
    explicit ComponentGraph(const Graph& g);

    int n() const { return n_; }
    int remaining_count() const { return remaining_; }

    VertexState state_of(int v) const { return state_[v]; }
    bool is_remaining(int v) const { return state_[v] == VertexState::remaining; }
    bool is_component(int c) const { return is_comp_[c] != 0; }

    // Component containing eliminated vertex v.
    int component_of(int v) const;

    // N_remaining(x) for a remaining vertex or a component id.
    const std::vector<int>& remaining_neighbors(int x) const { return nrem_[x]; }
    // N_component(u) for a remaining vertex.
    const std::vector<int>& component_neighbors(int u) const { return ncomp_[u]; }

    int d_remain(int x) const { return static_cast<int>(nrem_[x].size()); }
    int d_component(int u) const { return static_cast<int>(ncomp_[u].size()); }

    const std::vector<int>& components() const { return comps_; }
    std::vector<int> remaining_vertices() const;

    int sample_remaining_neighbor(int x, Rng& rng) const;
    int sample_component_vertex(Rng& rng) const;
    bool has_edge_component_remaining(int c, int u) const;

    // Eliminates u; returns the id of the component that now contains u.
    int pivot(int u);

    // Exact N_fill(u) \ {u}, sorted. Reporting/testing helper, O(fill).
    std::vector<int> fill_neighbors(int u) const;
    int fill_degree(int u) const { return static_cast<int>(fill_neighbors(u).size()); }

    // Equality up to the choice of component representative.
    bool structurally_equal(const ComponentGraph& o) const;

    // Throws std::logic_error on any broken invariant.
    void check_invariants() const;

    // Smallest member vertex of a component (canonical name).
    int min_member(int c) const { return min_member_[c]; }

private:
    int find(int v) const;

    int n_ = 0;
    int remaining_ = 0;
    std::vector<VertexState> state_;
    std::vector<char> is_comp_;
    std::vector<std::vector<int>> nrem_;
    std::vector<std::vector<int>> ncomp_;
    std::vector<int> comps_;
    std::vector<int> min_member_;
    mutable std::vector<int> parent_;  // union-find over eliminated vertices
    std::vector<int> label_;           // root -> component id
    std::int64_t m_ = 0;
};

}  // namespace mindeg
