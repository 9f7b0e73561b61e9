#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mindeg {

// Simple undirected graph; adjacency lists strictly sorted, no self-loops.
struct Graph {
    int n = 0;
    std::int64_t m = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(static_cast<std::size_t>(n_)) {}

    // Self-loops and duplicate pairs are dropped.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

enum class GraphFormat { detect, matrix_market, edge_list };

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Matrix Market ids are 1-based; edge lists are 0-based. An edge list may
// carry a "# n=<count>" comment to fix the vertex count (isolated tail).
Graph load_graph(std::istream& in, GraphFormat fmt = GraphFormat::detect);
Graph load_graph_file(const std::string& path, GraphFormat fmt = GraphFormat::detect);

void write_edge_list(std::ostream& out, const Graph& g);
void write_matrix_market(std::ostream& out, const Graph& g);

GraphFormat format_from_name(const std::string& name);

// Per-step reported degrees are doubles so the approximate method can log
// its estimates; exact methods store integers.
struct Audit {
    std::int64_t informs = 0;
    std::int64_t oracle_calls = 0;
    std::int64_t copies = 0;
};

struct OrderingResult {
    std::vector<int> order;
    std::vector<double> degrees;
    std::uint64_t seed = 0;
    Audit audit;
};

bool is_permutation(const std::vector<int>& perm, int n);

}  // namespace mindeg
