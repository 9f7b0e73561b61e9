#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mindeg/bruteforce.hpp"
#include "mindeg/decorrelate.hpp"
#include "mindeg/exact_order.hpp"
#include "mindeg/graph.hpp"
#include "mindeg/instances.hpp"
#include "mindeg/parallel.hpp"

using namespace mindeg;

namespace {

enum Exit : int { ok = 0, verify_failed = 1, io_error = 2, usage = 64, not_permutation = 65 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PermError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

// Output sink: "-" is stdout, anything else a file opened for writing.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    }
    std::ostream& out() { return file_ ? *file_ : std::cout; }
    bool is_stdout() const { return !file_; }

private:
    std::unique_ptr<std::ofstream> file_;
};

Graph read_graph(const std::string& path, const std::string& format) {
    GraphFormat f = format.empty() ? GraphFormat::detect : format_from_name(format);
    try {
        return load_graph_file(path, f);
    } catch (const ParseError& e) {
        throw IoError(path + ": " + e.what());
    } catch (const std::ios_base::failure& e) {
        throw IoError(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw IoError(path + ": " + e.what());
    }
}

// One vertex id per line; anything after the first token is ignored.
std::vector<int> read_perm(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw IoError("cannot open '" + path + "'");
        in = &file;
    }
    std::vector<int> perm;
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        int v = 0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw IoError(path + ": line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
        perm.push_back(v);
    }
    return perm;
}

struct OrderOpts {
    std::string input, output = "-", method = "sketch-exact", format;
    double eps = 0;
    int delta = 0;
    std::uint64_t seed = 1;
    int threads = default_threads();
    bool audit = false, log_degrees = false;
    double c_k = 4, c_q = 8, c_sigma = 5, c1 = 3, c2 = 7, c_scan = 2, c_lim = 4;
};

int cmd_order(const OrderOpts& o, const CLI::App& sub) {
    auto given = [&](const char* name) { return sub.count(name) > 0; };
    if (o.threads < 1) throw UsageError("--threads must be at least 1");
    if (o.method == "capped" && !given("--delta")) throw UsageError("method 'capped' needs --delta");
    if (o.method == "approx" && !given("--epsilon")) throw UsageError("method 'approx' needs --epsilon");
    if (given("--delta") && o.delta < 1) throw UsageError("--delta must be at least 1");
    if (o.method == "approx" && !(o.eps > 0 && o.eps <= 0.5)) throw UsageError("--epsilon must lie in (0, 0.5]");

    Graph g = read_graph(o.input, o.format);
    OrderingResult r;
    ExactConfig ec;
    ec.seed = o.seed;
    ec.c_k = o.c_k;
    ec.threads = o.threads;
    if (o.method == "brute") {
        r = mindeg_ordering_bruteforce(g);
    } else if (o.method == "sketch-exact" || o.method == "capped") {
        int delta = given("--delta") ? o.delta : std::max(1, g.n - 1);
        r = delta_capped_min_degree(g, delta, ec);
    } else if (o.method == "output-sensitive") {
        r = output_sensitive_min_degree(g, ec);
    } else if (o.method == "approx") {
        DecorrelateConfig dc;
        dc.c1 = o.c1;
        dc.c2 = o.c2;
        dc.c_scan = o.c_scan;
        dc.c_q = o.c_q;
        dc.threads = o.threads;
        dc.estimator.c_sigma = o.c_sigma;
        dc.estimator.c_lim = o.c_lim;
        r = approx_min_degree_sequence(g, o.eps, o.seed, dc);
    } else {
        throw UsageError("unknown method '" + o.method + "'");
    }

    Sink sink(o.output);
    auto& out = sink.out();
    for (std::size_t i = 0; i < r.order.size(); ++i) {
        out << r.order[i];
        if (o.log_degrees) out << ' ' << fmt(r.degrees[i]);
        out << '\n';
    }
    out.flush();
    if (!out) throw IoError("write to '" + o.output + "' failed");
    if (o.audit) {
        std::cout << "{\"informs\": " << r.audit.informs << ", \"oracle_calls\": " << r.audit.oracle_calls
                  << ", \"copies\": " << r.audit.copies << "}\n";
    }
    return ok;
}

int cmd_verify(const std::string& graph, const std::string& perm_path, double eps, const std::string& format) {
    if (eps < 0) throw UsageError("--epsilon must be non-negative");
    Graph g = read_graph(graph, format);
    auto perm = read_perm(perm_path);
    if (!is_permutation(perm, g.n)) throw PermError("ordering is not a permutation of 0.." + std::to_string(g.n - 1));
    auto rep = verify_ordering(g, perm, eps);
    std::cout << "max_ratio " << fmt(rep.max_ratio) << "\nviolating_steps " << rep.violating_steps << '\n';
    return rep.violating_steps == 0 ? ok : verify_failed;
}

int cmd_fill(const std::string& graph, const std::string& perm_path, const std::string& format) {
    Graph g = read_graph(graph, format);
    auto perm = read_perm(perm_path);
    if (!is_permutation(perm, g.n)) throw PermError("ordering is not a permutation of 0.." + std::to_string(g.n - 1));
    std::cout << total_fill(g, perm) << '\n';
    return ok;
}

struct GenOpts {
    std::string family, output = "-", format = "edgelist", vectors;
    int size = 10, dim = 9;
    double p = 0.1, density = 0.5;
    std::uint64_t seed = 1;
};

int cmd_gen(const GenOpts& o) {
    Graph g;
    BitVectors vecs;
    bool ov = o.family == "ov";
    try {
        if (ov) {
            if (o.size < 1 || o.dim < 1) throw std::invalid_argument("ov needs --size >= 1 and --dim >= 1");
            vecs = random_bit_vectors(o.size, o.dim, o.density, o.seed);
            g = ov_reduction_graph(vecs).graph;
        } else {
            g = generate(o.family, o.size, o.p, o.seed);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    GraphFormat f = format_from_name(o.format);
    Sink sink(o.output);
    if (f == GraphFormat::matrix_market)
        write_matrix_market(sink.out(), g);
    else
        write_edge_list(sink.out(), g);
    if (ov) {
        std::string vpath = !o.vectors.empty() ? o.vectors : (sink.is_stdout() ? "" : o.output + ".vectors");
        if (!vpath.empty()) {
            Sink vs(vpath);
            for (const auto& v : vecs) {
                for (int b : v) vs.out() << b;
                vs.out() << '\n';
            }
        }
    }
    return ok;
}

int cmd_cover_check(int n) {
    if (n < 1) throw UsageError("n must be at least 1");
    auto cs = covering_set_system(n);
    auto chk = verify_covering(cs);
    std::cout << "n " << n << "\np " << cs.p << "\nk " << chk.k << "\nmax_size " << chk.max_size << '\n';
    std::cout << (chk.all_pairs_covered ? "all pairs covered" : "uncovered pairs found") << '\n';
    std::cout << "size_bound " << (chk.size_bound ? "ok" : "violated") << "\ncount_bound "
              << (chk.count_bound ? "ok" : "violated") << '\n';
    return chk.ok() ? ok : verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-degree elimination orderings: exact, capped, output-sensitive and approximate.\n"
                 "Exit codes: 0 ok, 1 verification failed, 2 I/O or parse error, 64 usage, 65 not a permutation."};
    app.require_subcommand(1);

    OrderOpts oo;
    auto* order = app.add_subcommand("order", "compute an elimination ordering");
    order->add_option("input", oo.input, "graph file (.mtx or edge list), '-' for stdin")->required();
    order->add_option("-o,--output", oo.output, "ordering file, '-' for stdout");
    order->add_option("-m,--method", oo.method, "brute | sketch-exact | capped | output-sensitive | approx")
        ->check(CLI::IsMember({"brute", "sketch-exact", "capped", "output-sensitive", "approx"}));
    order->add_option("-e,--epsilon", oo.eps, "approximation error for approx, in (0, 0.5]");
    order->add_option("-d,--delta", oo.delta, "degree cap (capped; optional for sketch-exact)");
    order->add_option("-s,--seed", oo.seed, "random seed");
    order->add_option("-t,--threads", oo.threads, "worker threads");
    order->add_option("-f,--format", oo.format, "input format: mtx | edgelist (default: detect)");
    order->add_flag("--audit", oo.audit, "print audit counters as a JSON line");
    order->add_flag("--log-degrees", oo.log_degrees, "second column: reported degree at pivot");
    order->add_option("--c-k", oo.c_k, "sketch copies per Delta ln n");
    order->add_option("--c-q", oo.c_q, "approx copies per ln n / eps_hat^2");
    order->add_option("--c-sigma", oo.c_sigma, "estimator stopping constant");
    order->add_option("--c-lim", oo.c_lim, "estimator truncation constant");
    order->add_option("--c1", oo.c1, "eps_hat = eps / (c1 ln n)");
    order->add_option("--c2", oo.c2, "order-statistic window");
    order->add_option("--c-scan", oo.c_scan, "buckets scanned per step, in ln n / eps_hat");

    std::string vgraph, vperm, vformat;
    double veps = 0;
    auto* verify = app.add_subcommand("verify", "check an ordering against the greedy rule");
    verify->add_option("graph", vgraph, "graph file")->required();
    verify->add_option("perm", vperm, "ordering file")->required();
    verify->add_option("-e,--epsilon", veps, "allowed slack: degree <= (1+eps) * minimum");
    verify->add_option("-f,--format", vformat, "input format");

    std::string fgraph, fperm, fformat;
    auto* fill = app.add_subcommand("fill", "total fill of an ordering");
    fill->add_option("graph", fgraph, "graph file")->required();
    fill->add_option("perm", fperm, "ordering file")->required();
    fill->add_option("-f,--format", fformat, "input format");

    GenOpts go;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("family", go.family, "grid | erdos_renyi | clique | star | path | ov")->required();
    gen->add_option("-n,--size", go.size, "k for grid, vertex or vector count otherwise");
    gen->add_option("-p,--prob", go.p, "edge probability for erdos_renyi");
    gen->add_option("--dim", go.dim, "vector dimension for ov");
    gen->add_option("--density", go.density, "bit density for ov");
    gen->add_option("--vectors", go.vectors, "ov sidecar file (default: <output>.vectors)");
    gen->add_option("-s,--seed", go.seed, "random seed");
    gen->add_option("-o,--output", go.output, "output file, '-' for stdout");
    gen->add_option("-f,--format", go.format, "edgelist | mtx")->check(CLI::IsMember({"edgelist", "mtx"}));

    int cover_n = 0;
    auto* cover = app.add_subcommand("cover-check", "build and verify a covering set system");
    cover->add_option("n", cover_n, "universe size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*order) return cmd_order(oo, *order);
        if (*verify) return cmd_verify(vgraph, vperm, veps, vformat);
        if (*fill) return cmd_fill(fgraph, fperm, fformat);
        if (*gen) return cmd_gen(go);
        if (*cover) return cmd_cover_check(cover_n);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io_error;
    } catch (const PermError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return not_permutation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
