#include "mindeg/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace mindeg {

std::int64_t ImplicitMatrix::nnz() const {
    std::int64_t t = 0;
    for (int i = 0; i < rows(); ++i) t += row_size(i);
    return t;
}

DenseMatrix::DenseMatrix(int rows, int cols)
    : r_(rows), c_(cols), bits_(static_cast<std::size_t>(rows) * cols, 0), nz_(static_cast<std::size_t>(rows)) {}

DenseMatrix DenseMatrix::random(int rows, int cols, double density, std::uint64_t seed) {
    DenseMatrix m(rows, cols);
    Rng rng = make_rng({seed, tag(Stream::generator)});
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (uniform01(rng) < density) m.set(i, j);
    return m;
}

void DenseMatrix::set(int i, int j) {
    char& b = bits_[static_cast<std::size_t>(i) * c_ + j];
    if (b) return;
    b = 1;
    auto& row = nz_[i];
    row.insert(std::lower_bound(row.begin(), row.end(), j), j);
}

int DenseMatrix::sample_from_row(int i, Rng& rng) const {
    const auto& row = nz_[i];
    return row[uniform_below(rng, row.size())];
}

int DenseMatrix::column_sum(int j) const {
    int s = 0;
    for (int i = 0; i < r_; ++i) s += query_value(i, j);
    return s;
}

int DenseMatrix::nonzero_columns() const {
    int t = 0;
    for (int j = 0; j < c_; ++j) t += column_sum(j) > 0;
    return t;
}

namespace {

double log_n(const ImplicitMatrix& a, const EstimatorConfig& cfg) {
    int n = cfg.log_n > 0 ? cfg.log_n : std::max({a.rows(), a.columns(), 2});
    return std::log(static_cast<double>(std::max(n, 2)));
}

// Uniform non-zero entry: row by size, then a uniform entry of that row.
template <class M>
class EntrySampler {
public:
    explicit EntrySampler(const M& a) : a_(a), prefix_(static_cast<std::size_t>(a.rows()) + 1, 0) {
        for (int i = 0; i < a.rows(); ++i) prefix_[i + 1] = prefix_[i] + a.row_size(i);
    }
    std::int64_t nnz() const { return prefix_.back(); }
    std::pair<int, int> draw(Rng& rng, OracleCounter* counter) const {
        auto t = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(nnz())));
        int i = static_cast<int>(std::upper_bound(prefix_.begin(), prefix_.end(), t) - prefix_.begin()) - 1;
        if (counter) ++counter->calls;
        return {i, a_.sample_from_row(i, rng)};
    }

private:
    const M& a_;
    std::vector<std::int64_t> prefix_;
};

template <class F>
double mean_until(F&& draw, double sigma, Rng& rng) {
    if (!(sigma > 0)) throw std::invalid_argument("sigma must be positive");
    double sum = 0;
    std::int64_t count = 0;
    while (sum < sigma) {
        double x = draw(rng);
        if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("sample outside [0,1]");
        sum += x;
        ++count;
    }
    return sigma / static_cast<double>(count);
}

// Templated on the matrix so the hot loop avoids virtual dispatch.
template <class M>
double nonzero_columns_fast(const M& a, double eps, std::uint64_t seed, OracleCounter* counter,
                            const EstimatorConfig& cfg) {
    EntrySampler<M> entries(a);
    if (entries.nnz() == 0) return 0.0;
    Rng rng = make_rng({seed, tag(Stream::estimate), 3});
    const int r = a.rows();
    const double ln = log_n(a, cfg);
    const auto lim = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(cfg.c_lim * r * ln)));
    const double sigma = std::ceil(cfg.c_sigma * ln * ln / (eps * eps));
    // Combined distribution: a uniform non-zero (i, j), then uniform rows until
    // one hits column j, capped at lim; the statistic is trials / lim.
    double mean = mean_until(
        [&](Rng& g) {
            int j = entries.draw(g, counter).second;
            std::int64_t trials = 0;
            while (trials < lim) {
                ++trials;
                if (a.query_value(static_cast<int>(uniform_below(g, static_cast<std::uint64_t>(r))), j)) break;
            }
            if (counter) counter->calls += trials;
            return static_cast<double>(trials) / static_cast<double>(lim);
        },
        sigma, rng);
    // E[trials] ~ r / ColumnSum(j), so E[statistic] ~ (r / lim) * #columns / nnz.
    return static_cast<double>(entries.nnz()) * static_cast<double>(lim) / r * mean;
}

}  // namespace

double estimate_mean(const std::function<double(Rng&)>& draw, double sigma, Rng& rng) {
    return mean_until(draw, sigma, rng);
}

double approx_column_sum(const ImplicitMatrix& a, int j, double eps, double delta_fail, Rng& rng,
                         OracleCounter* counter, const EstimatorConfig& cfg) {
    const int r = a.rows();
    if (r == 0) throw std::invalid_argument("matrix has no rows");
    const double sigma = std::ceil(cfg.c_sigma * std::log(1.0 / delta_fail) / (eps * eps));
    const auto cap = static_cast<std::int64_t>(std::ceil(cfg.c_cap * r * sigma));
    std::int64_t used = 0;
    double mean = estimate_mean(
        [&](Rng& g) {
            if (++used > cap) throw std::runtime_error("column sum did not converge (all-zero column?)");
            if (counter) ++counter->calls;
            return a.query_value(static_cast<int>(uniform_below(g, static_cast<std::uint64_t>(r))), j) ? 1.0 : 0.0;
        },
        sigma, rng);
    return r * mean;
}

double count_nonzero_columns_slow(const ImplicitMatrix& a, double eps, std::uint64_t seed, OracleCounter* counter,
                                  const EstimatorConfig& cfg) {
    EntrySampler<ImplicitMatrix> entries(a);
    if (entries.nnz() == 0) return 0.0;
    Rng rng = make_rng({seed, tag(Stream::estimate), 1});
    const double ln = log_n(a, cfg);
    const double half = eps / 2;
    const double sigma = std::ceil(cfg.c_sigma * ln / (half * half));
    const double delta_fail = std::exp(-2.0 * ln);
    // Each column's sum is estimated once and reused.
    std::unordered_map<int, double> memo;
    double mean = estimate_mean(
        [&](Rng& g) {
            int j = entries.draw(g, counter).second;
            auto it = memo.find(j);
            if (it == memo.end()) {
                Rng col = make_rng({seed, tag(Stream::estimate), 2, static_cast<std::uint64_t>(j)});
                double s = approx_column_sum(a, j, half, delta_fail, col, counter, cfg);
                it = memo.emplace(j, s).first;
            }
            return std::min(1.0, 1.0 / it->second);
        },
        sigma, rng);
    return static_cast<double>(entries.nnz()) * mean;
}

double count_nonzero_columns(const ImplicitMatrix& a, double eps, std::uint64_t seed, OracleCounter* counter,
                             const EstimatorConfig& cfg) {
    return nonzero_columns_fast(a, eps, seed, counter, cfg);
}

namespace {

class FillMatrix final : public ImplicitMatrix {
public:
    FillMatrix(const ComponentGraph& cg, int u) : cg_(cg), u_(u), comps_(cg.component_neighbors(u)) {
        virtual_row_ = cg.d_remain(u) > 0;
    }
    int rows() const override { return static_cast<int>(comps_.size()) + (virtual_row_ ? 1 : 0); }
    int columns() const override { return cg_.n(); }
    std::int64_t row_size(int i) const override { return cg_.d_remain(owner(i)); }
    int sample_from_row(int i, Rng& rng) const override { return cg_.sample_remaining_neighbor(owner(i), rng); }
    bool query_value(int i, int j) const override {
        if (i < static_cast<int>(comps_.size())) return cg_.has_edge_component_remaining(comps_[i], j);
        const auto& nb = cg_.remaining_neighbors(u_);
        return std::binary_search(nb.begin(), nb.end(), j);
    }

private:
    int owner(int i) const { return i < static_cast<int>(comps_.size()) ? comps_[i] : u_; }
    const ComponentGraph& cg_;
    int u_;
    const std::vector<int>& comps_;
    bool virtual_row_ = false;
};

}  // namespace

double estimate_degree(const ComponentGraph& cg, int u, double eps, std::uint64_t seed, OracleCounter* counter,
                       const EstimatorConfig& cfg) {
    if (u < 0 || u >= cg.n() || !cg.is_remaining(u)) throw std::logic_error("vertex is not remaining");
    if (cg.d_component(u) == 0) return cg.d_remain(u);
    FillMatrix a(cg, u);
    EstimatorConfig c = cfg;
    if (c.log_n == 0) c.log_n = cg.n();
    // u itself is a column of every component row.
    return nonzero_columns_fast(a, eps, seed, counter, c) - 1.0;
}

}  // namespace mindeg
