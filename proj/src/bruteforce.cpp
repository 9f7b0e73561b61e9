#include "mindeg/bruteforce.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "mindeg/component_graph.hpp"

namespace mindeg {

FillOracle::FillOracle(const Graph& g) : g_(g), seen_(static_cast<std::size_t>(g.n), 0) {}

template <class F>
void FillOracle::walk(const std::vector<char>& eliminated, int v, F&& on_remaining) {
    if (v < 0 || v >= g_.n) throw std::out_of_range("fill oracle: vertex out of range");
    if (eliminated[v]) throw std::logic_error("fill oracle: vertex is eliminated");
    if (++epoch_ == 0) {
        std::fill(seen_.begin(), seen_.end(), 0);
        epoch_ = 1;
    }
    seen_[v] = epoch_;
    stack_.assign(1, v);
    while (!stack_.empty()) {
        int x = stack_.back();
        stack_.pop_back();
        for (int w : g_.adj[x]) {
            if (seen_[w] == epoch_) continue;
            seen_[w] = epoch_;
            if (eliminated[w])
                stack_.push_back(w);
            else
                on_remaining(w);
        }
    }
}

int FillOracle::degree(const std::vector<char>& eliminated, int v) {
    int count = 0;
    walk(eliminated, v, [&](int) { ++count; });
    return count;
}

std::vector<int> FillOracle::neighbors(const std::vector<char>& eliminated, int v) {
    std::vector<int> out;
    walk(eliminated, v, [&](int w) { out.push_back(w); });
    std::sort(out.begin(), out.end());
    return out;
}

int fill_degree_bruteforce(const Graph& g, const std::vector<char>& eliminated, int v) {
    FillOracle o(g);
    return o.degree(eliminated, v);
}

Graph fill_graph_bruteforce(const Graph& g, const std::vector<char>& eliminated) {
    // Dense adjacency; the oracle is only meant for small graphs.
    const int n = g.n;
    std::vector<std::vector<char>> a(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[u]) a[u][v] = 1;
    for (int w = 0; w < n; ++w) {
        if (!eliminated[w]) continue;
        std::vector<int> nb;
        for (int x = 0; x < n; ++x)
            if (a[w][x]) nb.push_back(x);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) a[nb[i]][nb[j]] = a[nb[j]][nb[i]] = 1;
        for (int x : nb) a[w][x] = a[x][w] = 0;
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a[u][v]) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

OrderingResult mindeg_ordering_bruteforce(const Graph& g) {
    OrderingResult res;
    FillOracle oracle(g);
    std::vector<char> elim(static_cast<std::size_t>(g.n), 0);
    for (int step = 0; step < g.n; ++step) {
        int best = -1, best_deg = std::numeric_limits<int>::max();
        for (int v = 0; v < g.n; ++v) {
            if (elim[v]) continue;
            int d = oracle.degree(elim, v);
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        elim[best] = 1;
        res.order.push_back(best);
        res.degrees.push_back(best_deg);
    }
    return res;
}

std::int64_t total_fill(const Graph& g, const std::vector<int>& perm) {
    if (!is_permutation(perm, g.n)) throw std::invalid_argument("total_fill: not a permutation");
    FillOracle oracle(g);
    std::vector<char> elim(static_cast<std::size_t>(g.n), 0);
    std::int64_t total = 0;
    for (int v : perm) {
        total += oracle.degree(elim, v);
        elim[v] = 1;
    }
    return total;
}

OrderingResult mindeg_ordering_quotient(const Graph& g) {
    ComponentGraph cg(g);
    std::vector<int> deg(static_cast<std::size_t>(g.n));
    std::set<std::pair<int, int>> order;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        order.insert({deg[v], v});
    }
    OrderingResult r;
    while (!order.empty()) {
        auto [d, u] = *order.begin();
        order.erase(order.begin());
        r.order.push_back(u);
        r.degrees.push_back(d);
        auto nb = cg.fill_neighbors(u);
        cg.pivot(u);
        for (int v : nb) {
            order.erase({deg[v], v});
            deg[v] = cg.fill_degree(v);
            order.insert({deg[v], v});
        }
    }
    return r;
}

VerifyReport verify_ordering(const Graph& g, const std::vector<int>& perm, double eps) {
    if (!is_permutation(perm, g.n)) throw std::invalid_argument("verify: not a permutation");
    FillOracle oracle(g);
    std::vector<char> elim(static_cast<std::size_t>(g.n), 0);
    VerifyReport r;
    for (int u : perm) {
        int mn = g.n;
        for (int v = 0; v < g.n; ++v)
            if (!elim[v]) mn = std::min(mn, oracle.degree(elim, v));
        int d = oracle.degree(elim, u);
        double ratio = mn > 0 ? static_cast<double>(d) / mn : (d == 0 ? 1.0 : std::numeric_limits<double>::infinity());
        r.max_ratio = std::max(r.max_ratio, ratio);
        if (d > (1.0 + eps) * mn) ++r.violating_steps;
        r.degrees.push_back(d);
        r.minima.push_back(mn);
        elim[u] = 1;
    }
    return r;
}

}  // namespace mindeg
