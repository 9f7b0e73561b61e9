#include "mindeg/minimizers.hpp"

#include <algorithm>
#include <stdexcept>

namespace mindeg {

namespace {
constexpr long long kDenseLimit = 1LL << 22;  // cells
}

OwnerCounter::OwnerCounter(int n)
    : n_(n), dense_(static_cast<long long>(n) * n <= kDenseLimit), distinct_(static_cast<std::size_t>(n), 0) {
    if (dense_)
        cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    else
        maps_.resize(static_cast<std::size_t>(n));
}

void OwnerCounter::add(int v, int owner) {
    if (dense_) {
        if (cells_[static_cast<std::size_t>(v) * n_ + owner]++ == 0) ++distinct_[v];
    } else if (maps_[v][owner]++ == 0) {
        ++distinct_[v];
    }
}

void OwnerCounter::remove(int v, int owner) {
    if (dense_) {
        int& c = cells_[static_cast<std::size_t>(v) * n_ + owner];
        if (c <= 0) throw std::logic_error("owner counter underflow");
        if (--c == 0) --distinct_[v];
        return;
    }
    auto it = maps_[v].find(owner);
    if (it == maps_[v].end()) throw std::logic_error("owner counter underflow");
    if (--it->second == 0) {
        maps_[v].erase(it);
        --distinct_[v];
    }
}

void OwnerCounter::clear(int v) {
    if (dense_) {
        std::fill(cells_.begin() + static_cast<std::ptrdiff_t>(v) * n_,
                  cells_.begin() + static_cast<std::ptrdiff_t>(v + 1) * n_, 0);
    } else {
        maps_[v].clear();
    }
    distinct_[v] = 0;
}

int OwnerCounter::count(int v, int owner) const {
    if (dense_) return cells_[static_cast<std::size_t>(v) * n_ + owner];
    auto it = maps_[v].find(owner);
    return it == maps_[v].end() ? 0 : it->second;
}

}  // namespace mindeg
