#include "mindeg/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mindeg/bruteforce.hpp"
#include "mindeg/rng.hpp"

namespace mindeg {

Graph grid_graph(int k) {
    if (k < 0) throw std::invalid_argument("grid: negative size");
    std::vector<std::pair<int, int>> e;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            int v = r * k + c;
            if (c + 1 < k) e.emplace_back(v, v + 1);
            if (r + 1 < k) e.emplace_back(v, v + k);
        }
    return Graph::from_edges(k * k, e);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: bad parameters");
    Rng rng = make_rng({seed, tag(Stream::generator), static_cast<std::uint64_t>(n)});
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph clique_graph(int n) {
    if (n < 0) throw std::invalid_argument("clique: negative size");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph star_graph(int n) {
    if (n < 0) throw std::invalid_argument("star: negative size");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
    if (n < 0) throw std::invalid_argument("path: negative size");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph generate(const std::string& family, int size, double p, std::uint64_t seed) {
    if (size < 0) throw std::invalid_argument("generate: negative size");
    if (family == "grid") return grid_graph(size);
    if (family == "erdos_renyi" || family == "er" || family == "gnp") return erdos_renyi(size, p, seed);
    if (family == "clique") return clique_graph(size);
    if (family == "star") return star_graph(size);
    if (family == "path") return path_graph(size);
    throw std::invalid_argument("unknown family '" + family + "'");
}

bool is_prime(long long x) {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (long long d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

long long next_prime(long long x) {
    if (x <= 2) return 2;
    while (!is_prime(x)) ++x;
    return x;
}

namespace {
int ceil_sqrt(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    return static_cast<int>(r);
}
}  // namespace

CoveringSetSystem covering_set_system(int n) {
    if (n < 1) throw std::invalid_argument("covering set system: n must be >= 1");
    CoveringSetSystem cs;
    cs.n = n;
    const int p = static_cast<int>(next_prime(ceil_sqrt(n)));
    cs.p = p;
    // Element e (1-based) sits at (x, y) = ((e-1) / p, (e-1) % p).
    auto elem = [p](int x, int y) { return x * p + y + 1; };
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            std::vector<int> s;
            for (int x = 0; x < p; ++x) {
                int e = elem(x, static_cast<int>((static_cast<long long>(a) * x + b) % p));
                if (e <= n) s.push_back(e);
            }
            if (!s.empty()) cs.sets.push_back(std::move(s));
        }
    for (int a = 0; a < p; ++a) {
        std::vector<int> s;
        for (int y = 0; y < p; ++y)
            if (elem(a, y) <= n) s.push_back(elem(a, y));
        if (!s.empty()) cs.sets.push_back(std::move(s));
    }
    for (auto& s : cs.sets) std::sort(s.begin(), s.end());
    // Cutting to [n] can make lines coincide; keep one copy of each.
    std::sort(cs.sets.begin(), cs.sets.end());
    cs.sets.erase(std::unique(cs.sets.begin(), cs.sets.end()), cs.sets.end());
    return cs;
}

CoverCheck verify_covering(const CoveringSetSystem& cs) {
    CoverCheck r;
    const int n = cs.n;
    r.k = static_cast<int>(cs.sets.size());
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(n) * n, 0);
    bool in_range = true;
    for (const auto& s : cs.sets) {
        r.max_size = std::max(r.max_size, static_cast<int>(s.size()));
        for (int a : s) {
            if (a < 1 || a > n) {
                in_range = false;
                continue;
            }
            std::uint8_t* row = &covered[static_cast<std::size_t>(a - 1) * n];
            for (int b : s)
                if (b >= 1 && b <= n) row[b - 1] = 1;
        }
    }
    r.all_pairs_covered = in_range && std::all_of(covered.begin(), covered.end(), [](std::uint8_t c) { return c != 0; });
    r.size_bound = r.max_size <= 10.0 * std::sqrt(static_cast<double>(n));
    r.count_bound = r.k <= 6LL * n;
    return r;
}

OVInstance ov_reduction_graph(const BitVectors& vectors) {
    if (vectors.empty()) throw std::invalid_argument("ov: need at least one vector");
    OVInstance inst;
    inst.vectors = vectors;
    const int n = static_cast<int>(vectors.size());
    const int d = static_cast<int>(vectors[0].size());
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != d) throw std::invalid_argument("ov: inconsistent dimensions");
        for (int b : v)
            if (b != 0 && b != 1) throw std::invalid_argument("ov: entries must be 0/1");
    }
    inst.d = d;
    inst.pad = 20 * ceil_sqrt(n);
    const CoveringSetSystem cs = covering_set_system(n);

    int next = 0;
    for (int i = 0; i < n; ++i) inst.vec_ids.push_back(next++);
    std::vector<std::pair<int, int>> e;
    for (int j = 0; j < d; ++j)
        for (const auto& s : cs.sets) {
            int dv = next++;
            inst.dim_ids.push_back(dv);
            for (int i1 : s)
                if (vectors[i1 - 1][j]) e.emplace_back(inst.vec_ids[i1 - 1], dv);
        }
    for (int t = 0; t < inst.pad; ++t) inst.pad_ids.push_back(next++);
    for (std::size_t a = 0; a < inst.pad_ids.size(); ++a) {
        for (std::size_t b = a + 1; b < inst.pad_ids.size(); ++b) e.emplace_back(inst.pad_ids[a], inst.pad_ids[b]);
        for (int v : inst.vec_ids) e.emplace_back(inst.pad_ids[a], v);
    }
    inst.graph = Graph::from_edges(next, e);
    return inst;
}

bool has_orthogonal_pair(const BitVectors& vectors) {
    const std::size_t n = vectors.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            bool orth = true;
            for (std::size_t j = 0; j < vectors[a].size() && orth; ++j)
                if (vectors[a][j] && vectors[b][j]) orth = false;
            if (orth) return true;
        }
    return false;
}

OVDecision ov_decide_bruteforce(const OVInstance& inst) {
    OVDecision r;
    const Graph& g = inst.graph;
    const int n = static_cast<int>(inst.vectors.size());
    r.threshold = inst.pad + n - 1;
    std::vector<char> is_dim(static_cast<std::size_t>(g.n), 0);
    for (int v : inst.dim_ids) is_dim[v] = 1;

    // Greedy min-degree prefix, identical to the full brute-force ordering.
    FillOracle oracle(g);
    std::vector<char> elim(static_cast<std::size_t>(g.n), 0);
    const std::size_t steps = inst.dim_ids.size() + 1;
    r.dim_first = true;
    for (std::size_t t = 0; t < steps && t < static_cast<std::size_t>(g.n); ++t) {
        int best = -1, best_deg = 0;
        for (int v = 0; v < g.n; ++v) {
            if (elim[v]) continue;
            int dv = oracle.degree(elim, v);
            if (best < 0 || dv < best_deg) {
                best = v;
                best_deg = dv;
            }
        }
        if (t < inst.dim_ids.size()) {
            if (!is_dim[best]) r.dim_first = false;
        } else {
            r.next_degree = best_deg;
        }
        elim[best] = 1;
    }
    r.orthogonal = r.next_degree < r.threshold;
    return r;
}

BitVectors random_bit_vectors(int n, int d, double density, std::uint64_t seed) {
    Rng rng = make_rng({seed, tag(Stream::generator), 0x0a11ULL});
    BitVectors out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(d), 0));
    for (auto& v : out)
        for (auto& b : v) b = uniform01(rng) < density ? 1 : 0;
    return out;
}

CorrelationReport adversarial_correlation_demo(int n, double eps, std::uint64_t seed, double c) {
    if (n < 1 || !(eps > 0)) throw std::invalid_argument("demo: bad parameters");
    CorrelationReport r;
    r.n = n;
    Rng rng = make_rng({seed, tag(Stream::demo)});
    int ksize = static_cast<int>(std::ceil(c * std::log(static_cast<double>(n)) / (eps * eps)));
    ksize = std::clamp(ksize, 1, n);
    r.key_set_size = ksize;

    // K: uniform ksize-subset via partial Fisher-Yates.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = 0; i < ksize; ++i) std::swap(perm[i], perm[i + uniform_below(rng, n - i)]);
    std::vector<char> in_k(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < ksize; ++i) in_k[perm[i]] = 1;

    // Adaptive loop. Only |S_i ∩ K| is visible; ties go to S_1.
    int k1 = ksize, k2 = ksize, s2 = n, deletions = 0;
    for (int x = 1; x <= n; ++x) {
        --s2;
        if (in_k[x]) --k2;
        bool s2_is_min = k2 < k1;
        if (s2_is_min) {
            ++s2;
            if (in_k[x]) ++k2;
        } else {
            ++deletions;
        }
    }
    r.final_set_size = s2;

    // Oblivious control: the same number of deletions in an order fixed in
    // advance; track the scaled estimate against the true size.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    int size = n, kin = ksize;
    double worst = 0;
    for (int t = 0; t < deletions; ++t) {
        --size;
        if (in_k[order[t]]) --kin;
        double est = static_cast<double>(kin) * n / ksize;
        worst = std::max(worst, std::abs(est - size));
    }
    r.oblivious_max_error = worst;
    return r;
}

}  // namespace mindeg
