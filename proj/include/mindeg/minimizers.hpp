#pragma once

#include <unordered_map>
#include <vector>

namespace mindeg {

// Per-vertex multiset of minimizer owners across sketch copies. Dense
// counters for small n, hashed otherwise.
class OwnerCounter {
public:
    explicit OwnerCounter(int n);

    void add(int v, int owner);
    void remove(int v, int owner);
    void clear(int v);
    int count(int v, int owner) const;
    int distinct(int v) const { return distinct_[v]; }

private:
    int n_;
    bool dense_;
    std::vector<int> cells_;  // n*n when dense
    std::vector<std::unordered_map<int, int>> maps_;
    std::vector<int> distinct_;
};

}  // namespace mindeg
