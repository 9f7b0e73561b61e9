#include "mindeg/approx_bucket.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mindeg {

int approx_copies(double c_q, double eps_hat, int n) {
    double k = std::ceil(c_q * std::log(static_cast<double>(std::max(n, 1))) / (eps_hat * eps_hat));
    return std::max(3, static_cast<int>(k));
}

int BucketView::size() const {
    check();
    return count_;
}

int BucketView::at(int rank) const {
    check();
    if (rank < 0 || rank >= count_) throw std::out_of_range("bucket rank out of range");
    return ds_->index().find_by_order(static_cast<std::size_t>(first_ + rank))->second;
}

std::vector<int> BucketView::vertices() const {
    check();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count_));
    auto it = ds_->index().find_by_order(static_cast<std::size_t>(first_));
    for (int i = 0; i < count_; ++i, ++it) out.push_back(it->second);
    return out;
}

void BucketView::check() const {
    if (ds_->version() != version_) throw std::logic_error("bucket view used after a pivot");
}

int BucketReport::size() const { return static_cast<int>(views_.size()); }

const BucketView& BucketReport::bucket(int i) const {
    if (!valid()) throw std::logic_error("bucket report used after a pivot");
    return views_.at(static_cast<std::size_t>(i));
}

int BucketReport::first_nonempty() const {
    for (int i = 0; i < size(); ++i)
        if (!bucket(i).empty()) return i;
    return -1;
}

bool BucketReport::valid() const { return ds_->version() == version_; }

ApproxDegreeDS::ApproxDegreeDS(const Graph& g, double eps_hat, std::uint64_t seed, const ApproxConfig& cfg)
    : cg_(g), eps_hat_(eps_hat), bank_(seed, std::max(1, cfg.threads)), owners_(g.n) {
    if (!(eps_hat > 0.0 && eps_hat <= 0.5)) throw std::invalid_argument("eps_hat must lie in (0, 1/2]");
    const int n = g.n;
    k_ = approx_copies(cfg.c_q, eps_hat, n);
    rank_ = std::max(1, static_cast<int>(std::floor(k_ * (1.0 - std::exp(-1.0)))));
    log_base_ = std::log1p(eps_hat);
    buckets_ = bucket_for_value(std::max(1, n)) + 1;
    bank_.add_copies(cg_, k_);

    mkeys_.assign(static_cast<std::size_t>(n) * k_, 0.0);
    q_.assign(static_cast<std::size_t>(n), 0.0);
    q_dirty_.assign(static_cast<std::size_t>(n), 1);
    bucket_.assign(static_cast<std::size_t>(n), 0);
    mark_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k_; ++i) {
        const SketchCopy& c = bank_.copy(i);
        for (int v = 0; v < n; ++v) {
            int o = c.query_owner(v);
            owners_.add(v, o);
            mkeys_[static_cast<std::size_t>(v) * k_ + i] = c.key_of(o).x;
        }
    }
    for (int v = 0; v < n; ++v) {
        bucket_[v] = bucket_for_value(value(v));
        bst_.insert({bucket_[v], v});
    }
}

void ApproxDegreeDS::require_remaining(int u) const {
    if (u < 0 || u >= cg_.n() || !cg_.is_remaining(u)) throw std::logic_error("vertex is not remaining");
}

double ApproxDegreeDS::quantile(int u) const {
    require_remaining(u);
    if (q_dirty_[u]) {
        std::vector<double> tmp(mkeys_.begin() + static_cast<std::ptrdiff_t>(u) * k_,
                                mkeys_.begin() + static_cast<std::ptrdiff_t>(u + 1) * k_);
        std::nth_element(tmp.begin(), tmp.begin() + (rank_ - 1), tmp.end());
        q_[u] = tmp[rank_ - 1];
        q_dirty_[u] = 0;
    }
    return q_[u];
}

int ApproxDegreeDS::distinct(int u) const {
    require_remaining(u);
    return owners_.distinct(u) + (owners_.count(u, u) > 0 ? 0 : 1);
}

double coupon_inverse(int distinct, int k) {
    if (distinct <= 1) return 1.0;
    // Expected distinct owners over k copies of a set of size x.
    auto seen = [k](double x) { return x * -std::expm1(k * std::log1p(-1.0 / x)); };
    double lo = distinct, hi = distinct;
    while (seen(hi) < distinct) hi *= 2.0;
    for (int it = 0; it < 100 && hi - lo > 1e-9 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (seen(mid) < distinct ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double ApproxDegreeDS::value(int u) const {
    int d = distinct(u);
    // Coupon-collector regime: small sets are counted (nearly) exactly; the
    // inversion corrects owners not yet seen when the set approaches k.
    if (d < k_ * (1.0 - std::exp(-1.0))) return coupon_inverse(d, k_);
    return 1.0 / quantile(u);
}

int ApproxDegreeDS::bucket_for_value(double val) const {
    if (!(val > 1.0)) return 0;
    int i = static_cast<int>(std::ceil(std::log(val) / log_base_)) - 1;
    return std::max(0, i);
}

int ApproxDegreeDS::bucket_of(int u) const {
    require_remaining(u);
    return bucket_[u];
}

std::vector<double> ApproxDegreeDS::minimizer_keys(int u) const {
    require_remaining(u);
    return {mkeys_.begin() + static_cast<std::ptrdiff_t>(u) * k_,
            mkeys_.begin() + static_cast<std::ptrdiff_t>(u + 1) * k_};
}

void ApproxDegreeDS::refresh(int u) {
    bst_.erase({bucket_[u], u});
    bucket_[u] = bucket_for_value(value(u));
    bst_.insert({bucket_[u], u});
}

void ApproxDegreeDS::pivot(int u) {
    require_remaining(u);
    bst_.erase({bucket_[u], u});
    owners_.clear(u);
    bank_.pivot(cg_, u, changes_);
    std::vector<int> touched;
    for (const auto& ch : changes_) {
        owners_.remove(ch.v, ch.old_owner);
        owners_.add(ch.v, ch.new_owner);
        mkeys_[static_cast<std::size_t>(ch.v) * k_ + ch.copy] = bank_.copy(ch.copy).key_of(ch.new_owner).x;
        if (!mark_[ch.v]) {
            mark_[ch.v] = 1;
            touched.push_back(ch.v);
        }
    }
    for (int v : touched) {
        mark_[v] = 0;
        q_dirty_[v] = 1;
        refresh(v);
    }
    ++version_;
}

BucketReport ApproxDegreeDS::report() const {
    std::vector<BucketView> views;
    views.reserve(static_cast<std::size_t>(buckets_));
    for (int i = 0; i < buckets_; ++i) {
        int first = static_cast<int>(bst_.order_of_key({i, -1}));
        int last = static_cast<int>(bst_.order_of_key({i + 1, -1}));
        views.emplace_back(this, version_, i, first, last - first);
    }
    return BucketReport(this, version_, std::move(views));
}

}  // namespace mindeg
