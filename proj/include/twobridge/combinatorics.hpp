#pragma once

// Generators for the two combinatorial factors of a stratum: compositions of
// the magnitude total, and sign patterns with a fixed number of changes.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "twobridge/error.hpp"

namespace twobridge {

/// Visits every list of `parts` positive integers summing to `total`, in
/// lexicographic order. Visits nothing when total < parts.
template <class Visitor>
void for_each_composition(long total, long parts, Visitor&& visit)
{
    if (parts < 1)
        throw error(errc::out_of_range, "compositions need at least one part");
    if (total < parts)
        return;
    std::vector<long> b(static_cast<std::size_t>(parts), 1);
    b.back() = total - parts + 1;
    const std::size_t n = b.size();
    while (true) {
        visit(static_cast<const std::vector<long>&>(b));
        if (n == 1)
            return;
        // Successor: grow the rightmost b[i] (i < n-1) whose suffix holds more
        // than its minimum mass, then push the remaining suffix mass to the end.
        std::size_t i = n - 2;
        long suffix = b[n - 1];
        while (true) {
            long suffix_len = static_cast<long>(n - 1 - i);
            if (suffix > suffix_len)
                break;
            if (i == 0)
                return;
            suffix += b[i];
            --i;
        }
        ++b[i];
        --suffix;
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            b[j] = 1;
            --suffix;
        }
        b[n - 1] = suffix;
    }
}

inline std::vector<std::vector<long>> compositions(long total, long parts)
{
    std::vector<std::vector<long>> out;
    for_each_composition(total, parts, [&](const std::vector<long>& b) { out.push_back(b); });
    return out;
}

/// Every +-1 list of the given length with exactly `changes` adjacent sign
/// changes, ordered lexicographically with + before -. There are
/// 2 * C(length-1, changes) of them.
inline std::vector<std::vector<int>> sign_patterns(long length, long changes)
{
    if (length < 1 || changes < 0 || changes > length - 1)
        throw error(errc::out_of_range, "sign pattern needs 0 <= changes <= length - 1");
    const std::size_t n = static_cast<std::size_t>(length);
    std::vector<std::vector<int>> out;
    // Change positions as a bitmask over the n-1 gaps; choose-k subsets.
    std::vector<bool> gap(n - 1, false);
    std::fill(gap.begin(), gap.begin() + changes, true);
    // prev_permutation walks all arrangements of `changes` trues.
    do {
        for (int first : {1, -1}) {
            std::vector<int> p(n);
            p[0] = first;
            for (std::size_t i = 1; i < n; ++i)
                p[i] = gap[i - 1] ? -p[i - 1] : p[i - 1];
            out.push_back(std::move(p));
        }
    } while (std::prev_permutation(gap.begin(), gap.end()));
    // + sorts before -.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](int x, int y) { return x > y; });
    });
    return out;
}

} // namespace twobridge
