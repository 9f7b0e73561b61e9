#include "mindeg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mindeg {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("vertex id out of range");
        if (u == v) continue;
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    std::int64_t total = 0;
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        total += static_cast<std::int64_t>(a.size());
    }
    g.m = total / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_permutation(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

namespace {

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool parse_long(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

Graph load_mm(std::istream& in, const std::string& first_line) {
    int lineno = 1;
    std::istringstream hs(first_line);
    std::string banner, object, layout, field, symmetry;
    hs >> banner >> object >> layout >> field >> symmetry;
    if (lower(banner) != "%%matrixmarket" || lower(object) != "matrix")
        throw ParseError(lineno, "bad Matrix Market banner");
    if (lower(layout) != "coordinate") throw ParseError(lineno, "only coordinate layout is supported");
    field = lower(field);
    if (field != "pattern" && field != "real" && field != "integer" && field != "double")
        throw ParseError(lineno, "unsupported field '" + field + "'");
    symmetry = lower(symmetry);
    if (symmetry != "symmetric" && symmetry != "general")
        throw ParseError(lineno, "unsupported symmetry '" + symmetry + "'");

    std::string line;
    long long rows = -1, cols = -1, nnz = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '%') continue;
        std::istringstream ls(line);
        std::string a, b, c, extra;
        ls >> a >> b >> c;
        if (!parse_long(a, rows) || !parse_long(b, cols) || !parse_long(c, nnz) || (ls >> extra))
            throw ParseError(lineno, "bad size line");
        break;
    }
    if (rows < 0) throw ParseError(lineno, "missing size line");
    if (rows != cols) throw ParseError(lineno, "matrix is not square");
    if (rows > (1LL << 30)) throw ParseError(lineno, "matrix too large");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(std::max(0LL, nnz)));
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '%') continue;
        std::istringstream ls(line);
        std::string a, b;
        ls >> a >> b;
        long long i, j;
        if (!parse_long(a, i) || !parse_long(b, j)) throw ParseError(lineno, "bad entry");
        if (i < 1 || j < 1 || i > rows || j > cols) throw ParseError(lineno, "vertex id out of range");
        ++seen;
        edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
    }
    if (seen != nnz)
        throw ParseError(lineno, "expected " + std::to_string(nnz) + " entries, found " + std::to_string(seen));
    return Graph::from_edges(static_cast<int>(rows), edges);
}

Graph load_edges(std::istream& in, const std::string& first_line, bool have_first) {
    int lineno = 0;
    long long declared_n = -1;
    long long max_id = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    auto handle = [&](const std::string& l) {
        ++lineno;
        auto p = l.find_first_not_of(" \t\r");
        if (p == std::string::npos) return;
        if (l[p] == '#') {
            std::istringstream cs(l.substr(p + 1));
            std::string tok;
            while (cs >> tok) {
                if (tok.rfind("n=", 0) == 0) {
                    long long v;
                    if (!parse_long(tok.substr(2), v) || v < 0) throw ParseError(lineno, "bad vertex count");
                    declared_n = v;
                }
            }
            return;
        }
        std::istringstream ls(l);
        std::string a, b, extra;
        ls >> a >> b;
        long long u, v;
        if (!parse_long(a, u) || !parse_long(b, v) || (ls >> extra)) throw ParseError(lineno, "expected two vertex ids");
        if (u < 0 || v < 0) throw ParseError(lineno, "vertex id out of range");
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) throw ParseError(lineno, "vertex id out of range");
        if (u >= (1LL << 30) || v >= (1LL << 30)) throw ParseError(lineno, "vertex id out of range");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    };
    if (have_first) handle(first_line);
    while (std::getline(in, line)) handle(line);
    long long n = std::max(declared_n, max_id + 1);
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

GraphFormat format_from_name(const std::string& name) {
    auto s = lower(name);
    if (s == "mm" || s == "mtx" || s == "matrix-market") return GraphFormat::matrix_market;
    if (s == "edges" || s == "edge-list" || s == "edgelist" || s == "el") return GraphFormat::edge_list;
    if (s == "auto" || s == "detect") return GraphFormat::detect;
    throw std::invalid_argument("unknown graph format '" + name + "'");
}

Graph load_graph(std::istream& in, GraphFormat fmt) {
    std::string first;
    bool have = static_cast<bool>(std::getline(in, first));
    if (fmt == GraphFormat::detect)
        fmt = (have && first.rfind("%%", 0) == 0) ? GraphFormat::matrix_market : GraphFormat::edge_list;
    if (fmt == GraphFormat::matrix_market) {
        if (!have) throw ParseError(1, "empty input");
        return load_mm(in, first);
    }
    return load_edges(in, first, have);
}

Graph load_graph_file(const std::string& path, GraphFormat fmt) {
    if (path == "-") return load_graph(std::cin, fmt);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    if (fmt == GraphFormat::detect) {
        auto dot = path.rfind('.');
        if (dot != std::string::npos) {
            auto ext = lower(path.substr(dot + 1));
            if (ext == "mtx" || ext == "mm") fmt = GraphFormat::matrix_market;
        }
    }
    return load_graph(f, fmt);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n=" << g.n << " m=" << g.m << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_matrix_market(std::ostream& out, const Graph& g) {
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    out << g.n << ' ' << g.n << ' ' << g.m << '\n';
    // lower triangle, column-major-ish: (row > col)
    for (auto [u, v] : g.edges()) out << (v + 1) << ' ' << (u + 1) << '\n';
}

}  // namespace mindeg
