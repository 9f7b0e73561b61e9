#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <ext/pb_ds/assoc_container.hpp>
#include <ext/pb_ds/tree_policy.hpp>

#include "mindeg/component_graph.hpp"
#include "mindeg/minimizers.hpp"
#include "mindeg/sketch.hpp"

namespace mindeg {

using BucketIndex = __gnu_pbds::tree<std::pair<int, int>, __gnu_pbds::null_type, std::less<std::pair<int, int>>,
                                     __gnu_pbds::rb_tree_tag, __gnu_pbds::tree_order_statistics_node_update>;

class ApproxDegreeDS;

// Zero-copy view of one bucket; every access checks that the structure has
// not been pivoted since the report was taken.
class BucketView {
public:
    BucketView(const ApproxDegreeDS* ds, std::uint64_t version, int index, int first, int count)
        : ds_(ds), version_(version), index_(index), first_(first), count_(count) {}

    int index() const { return index_; }
    int size() const;
    bool empty() const { return size() == 0; }
    int at(int rank) const;  // rank-th vertex by id
    std::vector<int> vertices() const;

private:
    void check() const;
    const ApproxDegreeDS* ds_;
    std::uint64_t version_;
    int index_, first_, count_;
};

class BucketReport {
public:
    BucketReport(const ApproxDegreeDS* ds, std::uint64_t version, std::vector<BucketView> views)
        : ds_(ds), version_(version), views_(std::move(views)) {}

    int size() const;  // number of buckets B
    const BucketView& bucket(int i) const;
    int first_nonempty() const;  // -1 when nothing remains
    bool valid() const;

private:
    const ApproxDegreeDS* ds_;
    std::uint64_t version_;
    std::vector<BucketView> views_;
};

struct ApproxConfig {
    double c_q = 8.0;  // copies = ceil(c_q ln n / eps_hat^2), at least 3
    int threads = 1;
};

class ApproxDegreeDS {
public:
    ApproxDegreeDS(const Graph& g, double eps_hat, std::uint64_t seed, const ApproxConfig& cfg = {});

    const ComponentGraph& graph() const { return cg_; }
    double eps_hat() const { return eps_hat_; }
    int copies() const { return k_; }
    int rank() const { return rank_; }  // 1-based rank of the quantile
    int bucket_count() const { return buckets_; }
    std::int64_t informs() const { return bank_.op_counter(); }
    std::uint64_t version() const { return version_; }

    double quantile(int u) const;  // q(u)
    int distinct(int u) const;     // distinct minimizer owners, u included
    double value(int u) const;     // the size estimate used for bucketing
    int bucket_of(int u) const;
    std::vector<double> minimizer_keys(int u) const;

    // Bucket whose range [(1+e)^i, (1+e)^(i+1)] holds `val`; boundaries go down.
    int bucket_for_value(double val) const;

    void pivot(int u);
    BucketReport report() const;

    // internal, for views
    const BucketIndex& index() const { return bst_; }

private:
    void require_remaining(int u) const;
    void refresh(int u);

    ComponentGraph cg_;
    double eps_hat_;
    int k_, rank_, buckets_;
    double log_base_;
    SketchBank bank_;
    OwnerCounter owners_;
    std::vector<double> mkeys_;  // n x k
    mutable std::vector<double> q_;
    mutable std::vector<char> q_dirty_;
    std::vector<int> bucket_;
    BucketIndex bst_;
    std::uint64_t version_ = 0;
    std::vector<SketchBank::Change> changes_;
    std::vector<char> mark_;
};

int approx_copies(double c_q, double eps_hat, int n);

// Set size x whose expected number of distinct minimizer owners over k
// copies equals `distinct`.
double coupon_inverse(int distinct, int k);

}  // namespace mindeg
