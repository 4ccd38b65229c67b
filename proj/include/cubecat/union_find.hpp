#pragma once

#include <numeric>
#include <vector>

namespace cubecat {

// Union-find keeping the least element of each class as its root, so class
// representatives are canonical (lexicographically least in insertion order).
class UnionFind {
public:
    explicit UnionFind(size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    size_t find(size_t a) const {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]]; // path halving
            a = parent_[a];
        }
        return a;
    }

    // Returns true when the two classes were distinct and are now merged.
    bool unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

    size_t size() const { return parent_.size(); }

private:
    mutable std::vector<size_t> parent_;
};

} // namespace cubecat
