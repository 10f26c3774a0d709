#pragma once

#include <algorithm>
#include <vector>

namespace fraccover {

// Vertex/edge sets are kept as strictly increasing vectors of host indices,
// so every iteration order in the library is reproducible.
using IdSet = std::vector<int>;

inline IdSet set_union(const IdSet& a, const IdSet& b) {
    IdSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IdSet set_intersection(const IdSet& a, const IdSet& b) {
    IdSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IdSet set_difference(const IdSet& a, const IdSet& b) {
    IdSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool set_contains(const IdSet& a, int x) {
    return std::binary_search(a.begin(), a.end(), x);
}

inline bool is_subset(const IdSet& a, const IdSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IdSet sorted_unique(IdSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace fraccover
