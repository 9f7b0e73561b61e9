#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mindeg/component_graph.hpp"
#include "mindeg/rng.hpp"

namespace mindeg {

// 0/1 matrix reachable only through row-level oracles.
class ImplicitMatrix {
public:
    virtual ~ImplicitMatrix() = default;
    virtual int rows() const = 0;
    virtual int columns() const = 0;  // column ids lie in [0, columns)
    virtual std::int64_t row_size(int i) const = 0;
    virtual int sample_from_row(int i, Rng& rng) const = 0;
    virtual bool query_value(int i, int j) const = 0;
    std::int64_t nnz() const;
};

// Row-major dense 0/1 matrix for tests and experiments.
class DenseMatrix : public ImplicitMatrix {
public:
    DenseMatrix(int rows, int cols);
    static DenseMatrix random(int rows, int cols, double density, std::uint64_t seed);

    void set(int i, int j);
    int rows() const override { return r_; }
    int columns() const override { return c_; }
    std::int64_t row_size(int i) const override { return static_cast<std::int64_t>(nz_[i].size()); }
    int sample_from_row(int i, Rng& rng) const override;
    bool query_value(int i, int j) const override { return bits_[static_cast<std::size_t>(i) * c_ + j] != 0; }

    int column_sum(int j) const;
    int nonzero_columns() const;

private:
    int r_, c_;
    std::vector<char> bits_;
    std::vector<std::vector<int>> nz_;
};

struct EstimatorConfig {
    double c_sigma = 5.0;
    double c_lim = 4.0;
    double c_cap = 20.0;  // column-sum give-up point, in multiples of r * sigma
    int log_n = 0;        // n in the ln n terms; 0 = max(rows, columns, 2)
};

// Counts every row sample and every entry query.
struct OracleCounter {
    std::int64_t calls = 0;
};

// Draws from `draw` until the running sum reaches sigma; returns sigma / draws.
double estimate_mean(const std::function<double(Rng&)>& draw, double sigma, Rng& rng);

double approx_column_sum(const ImplicitMatrix& a, int j, double eps, double delta_fail, Rng& rng,
                         OracleCounter* counter = nullptr, const EstimatorConfig& cfg = {});

double count_nonzero_columns_slow(const ImplicitMatrix& a, double eps, std::uint64_t seed,
                                  OracleCounter* counter = nullptr, const EstimatorConfig& cfg = {});

double count_nonzero_columns(const ImplicitMatrix& a, double eps, std::uint64_t seed,
                             OracleCounter* counter = nullptr, const EstimatorConfig& cfg = {});

// Fill-degree estimate of remaining u. Rows: u's component neighbors plus one
// row for u's direct remaining neighbors; columns: remaining vertices.
double estimate_degree(const ComponentGraph& cg, int u, double eps, std::uint64_t seed,
                       OracleCounter* counter = nullptr, const EstimatorConfig& cfg = {});

}  // namespace mindeg
