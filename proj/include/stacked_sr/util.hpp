#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stacked_sr {

// Thrown when an operation's stated precondition is violated (bad labels,
// invalid partitions, dependent blocks, ...). The CLI maps this to exit 3.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration exceeds its configured size cap. CLI exit 4.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline void sort_unique(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Index of `s` in the sorted vector `v`, or -1.
inline int index_in(const std::vector<std::string>& v, const std::string& s) {
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) return -1;
    return static_cast<int>(it - v.begin());
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), count_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    // Returns true if a and b were in distinct classes.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;  // smaller index wins, keeps representatives stable
        --count_;
        return true;
    }
    bool same(int a, int b) { return find(a) == find(b); }
    int components() const { return count_; }
    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    int count_;
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace stacked_sr
