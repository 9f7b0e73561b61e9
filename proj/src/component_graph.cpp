#include "mindeg/component_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace mindeg {

namespace {

void erase_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

void insert_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

bool contains_sorted(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

ComponentGraph::ComponentGraph(const Graph& g)
    : n_(g.n),
      remaining_(g.n),
      state_(static_cast<std::size_t>(g.n), VertexState::remaining),
      is_comp_(static_cast<std::size_t>(g.n), 0),
      nrem_(g.adj),
      ncomp_(static_cast<std::size_t>(g.n)),
      min_member_(static_cast<std::size_t>(g.n)),
      parent_(static_cast<std::size_t>(g.n)),
      label_(static_cast<std::size_t>(g.n), -1),
      m_(g.m) {
    for (int v = 0; v < n_; ++v) {
        parent_[v] = v;
        min_member_[v] = v;
    }
}

int ComponentGraph::find(int v) const {
    int r = v;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[v] != r) {
        int nx = parent_[v];
        parent_[v] = r;
        v = nx;
    }
    return r;
}

int ComponentGraph::component_of(int v) const {
    if (state_[v] != VertexState::eliminated) throw std::logic_error("component_of: vertex is remaining");
    return label_[find(v)];
}

std::vector<int> ComponentGraph::remaining_vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(remaining_));
    for (int v = 0; v < n_; ++v)
        if (is_remaining(v)) out.push_back(v);
    return out;
}

int ComponentGraph::sample_remaining_neighbor(int x, Rng& rng) const {
    const auto& s = nrem_[x];
    if (s.empty()) throw std::logic_error("sample_remaining_neighbor: empty neighbor set");
    return s[uniform_below(rng, s.size())];
}

int ComponentGraph::sample_component_vertex(Rng& rng) const {
    if (comps_.empty()) throw std::logic_error("sample_component_vertex: no components");
    return comps_[uniform_below(rng, comps_.size())];
}

bool ComponentGraph::has_edge_component_remaining(int c, int u) const {
    if (!is_comp_[c]) throw std::logic_error("has_edge_component_remaining: not a component");
    if (!is_remaining(u)) throw std::logic_error("has_edge_component_remaining: vertex is not remaining");
    // Probe whichever side is smaller; component lists of a vertex are short.
    if (ncomp_[u].size() <= nrem_[c].size()) return contains_sorted(ncomp_[u], c);
    return contains_sorted(nrem_[c], u);
}

int ComponentGraph::pivot(int u) {
    if (u < 0 || u >= n_) throw std::out_of_range("pivot: vertex id out of range");
    if (!is_remaining(u)) throw std::logic_error("pivot: vertex " + std::to_string(u) + " is already eliminated");

    const std::vector<int> W = ncomp_[u];
    std::vector<int> R0 = std::move(nrem_[u]);
    nrem_[u].clear();

    for (int w : W) erase_sorted(nrem_[w], u);
    for (int v : R0) erase_sorted(nrem_[v], u);

    // Survivor: the largest remaining-set, ties to the smaller id.
    int C = u;
    std::size_t best = R0.size();
    for (int w : W) {
        if (nrem_[w].size() > best || (nrem_[w].size() == best && w < C)) {
            best = nrem_[w].size();
            C = w;
        }
    }

    // Union of all remaining-sets (already sorted individually).
    std::vector<int> U = std::move(R0);
    for (int w : W) {
        std::vector<int> merged;
        merged.reserve(U.size() + nrem_[w].size());
        std::set_union(U.begin(), U.end(), nrem_[w].begin(), nrem_[w].end(), std::back_inserter(merged));
        U.swap(merged);
    }

    // Redirect component adjacency of every vertex in the union to C.
    for (int v : U) {
        auto& nc = ncomp_[v];
        if (!W.empty())
            nc.erase(std::remove_if(nc.begin(), nc.end(), [&](int c) { return contains_sorted(W, c); }), nc.end());
        insert_sorted(nc, C);
    }

    int mm = u;
    for (int w : W) {
        mm = std::min(mm, min_member_[w]);
        if (w != C) {
            is_comp_[w] = 0;
            nrem_[w].clear();
            nrem_[w].shrink_to_fit();
        }
    }
    ncomp_[u].clear();
    nrem_[C] = std::move(U);
    if (C != u) nrem_[u].clear();
    is_comp_[C] = 1;
    min_member_[C] = mm;

    // Union-find: u and all absorbed components share one root labelled C.
    state_[u] = VertexState::eliminated;
    int root = u;
    for (int w : W) {
        int r = find(w);
        parent_[r] = root;
    }
    label_[root] = C;

    std::vector<int> nc;
    nc.reserve(comps_.size() + 1);
    for (int c : comps_)
        if (!contains_sorted(W, c) || c == C) nc.push_back(c);
    comps_.swap(nc);
    insert_sorted(comps_, C);

    --remaining_;
    return C;
}

std::vector<int> ComponentGraph::fill_neighbors(int u) const {
    if (!is_remaining(u)) throw std::logic_error("fill_neighbors: vertex is eliminated");
    std::vector<int> out = nrem_[u];
    for (int c : ncomp_[u]) out.insert(out.end(), nrem_[c].begin(), nrem_[c].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    erase_sorted(out, u);
    return out;
}

bool ComponentGraph::structurally_equal(const ComponentGraph& o) const {
    if (n_ != o.n_ || state_ != o.state_) return false;
    auto canon = [](const ComponentGraph& g, const std::vector<int>& cs) {
        std::vector<int> out;
        out.reserve(cs.size());
        for (int c : cs) out.push_back(g.min_member_[c]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (int v = 0; v < n_; ++v) {
        if (is_remaining(v)) {
            if (nrem_[v] != o.nrem_[v]) return false;
            if (canon(*this, ncomp_[v]) != canon(o, o.ncomp_[v])) return false;
        } else if (min_member_[component_of(v)] != o.min_member_[o.component_of(v)]) {
            return false;
        }
    }
    std::map<int, std::vector<int>> a, b;
    for (int c : comps_) a[min_member_[c]] = nrem_[c];
    for (int c : o.comps_) b[o.min_member_[c]] = o.nrem_[c];
    return a == b;
}

void ComponentGraph::check_invariants() const {
    auto fail = [](const std::string& s) { throw std::logic_error("component graph invariant: " + s); };
    std::int64_t total = 0;
    int rem = 0;
    for (int v = 0; v < n_; ++v) {
        if (!std::is_sorted(nrem_[v].begin(), nrem_[v].end()) ||
            std::adjacent_find(nrem_[v].begin(), nrem_[v].end()) != nrem_[v].end())
            fail("unsorted neighbor set");
        if (is_remaining(v)) {
            ++rem;
            if (is_comp_[v]) fail("remaining vertex flagged as component");
            for (int w : nrem_[v]) {
                if (!is_remaining(w)) fail("remaining neighbor is eliminated");
                if (!contains_sorted(nrem_[w], v)) fail("asymmetric remaining adjacency");
            }
            for (int c : ncomp_[v]) {
                if (!is_comp_[c]) fail("component neighbor is not a component");
                if (!contains_sorted(nrem_[c], v)) fail("component adjacency not mirrored");
            }
        } else {
            if (!ncomp_[v].empty()) fail("eliminated vertex has component neighbors");
            if (!is_comp_[component_of(v)]) fail("eliminated vertex maps to dead component");
            if (is_comp_[v]) {
                total += static_cast<std::int64_t>(nrem_[v].size());
                for (int w : nrem_[v]) {
                    if (!is_remaining(w)) fail("component neighbors an eliminated vertex");
                    if (!contains_sorted(ncomp_[w], v)) fail("component adjacency not mirrored");
                }
            } else if (!nrem_[v].empty()) {
                fail("absorbed vertex keeps a neighbor set");
            }
        }
    }
    if (rem != remaining_) fail("remaining count mismatch");
    if (total > m_) fail("sum of component degrees exceeds m");
    for (int c : comps_)
        if (!is_comp_[c]) fail("stale component id");
}

}  // namespace mindeg
