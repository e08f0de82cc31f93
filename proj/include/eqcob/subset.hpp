#ifndef EQCOB_SUBSET_HPP
#define EQCOB_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqcob {

// Subsets of {1..r} are bitmasks: bit (i-1) stands for element i.
inline constexpr int kMaxRank = 32;

inline std::uint32_t mask_from_elements(const std::vector<int>& elems) {
    std::uint32_t m = 0;
    for (int e : elems) {
        if (e < 1 || e > kMaxRank)
            throw std::invalid_argument("subset element out of range: " + std::to_string(e));
        m |= std::uint32_t{1} << (e - 1);
    }
    return m;
}

inline std::vector<int> elements_of(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 1; i <= kMaxRank; ++i)
        if (mask & (std::uint32_t{1} << (i - 1)))
            out.push_back(i);
    return out;
}

inline int subset_size(std::uint32_t mask) { return std::popcount(mask); }

// Canonical order on nonempty subsets: by size, then lexicographically on the
// sorted element lists. The lex step reduces to locating the smallest element
// contained in exactly one of the two sets.
inline bool support_less(std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    const std::uint32_t d = a ^ b;
    return (d & -d) & a;
}

struct SupportLess {
    bool operator()(std::uint32_t a, std::uint32_t b) const { return support_less(a, b); }
};

inline std::string support_str(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int e : elements_of(mask)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

// All nonempty subsets of {lo..hi} in (size, element-lex) order.
inline std::vector<std::uint32_t> subsets_in_order(int lo, int hi) {
    if (lo < 1 || hi > kMaxRank) throw std::invalid_argument("subset range out of bounds");
    std::vector<std::uint32_t> out;
    if (hi < lo) return out;
    const int width = hi - lo + 1;
    for (int size = 1; size <= width; ++size) {
        // combinations of {lo..hi} of the given size, lexicographic
        std::vector<int> idx(size);
        for (int t = 0; t < size; ++t) idx[t] = lo + t;
        while (true) {
            std::uint32_t m = 0;
            for (int e : idx) m |= std::uint32_t{1} << (e - 1);
            out.push_back(m);
            int t = size - 1;
            while (t >= 0 && idx[t] == hi - (size - 1 - t)) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < size; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    return out;
}

}  // namespace eqcob

#endif
