#pragma once

// Test-only reference routines. They share no code path with the library:
// plain 64-bit fractions, exhaustive search, explicit orbit sets.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using seq = std::vector<long>;

struct fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const fraction&, const fraction&) = default;
};

inline fraction reduce(std::int64_t num, std::int64_t den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0)
        g = 1;
    return {num / g, den / g};
}

/// 1/(e_1 + 1/(e_2 + ... + 1/e_n)) by left-to-right descent on (num, den)
/// pairs: builds the value from the innermost term outward.
inline fraction nested_value(const seq& s)
{
    // value of tail = p/q; start with tail = 0/1.
    std::int64_t p = 0, q = 1;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        // 1 / (e + p/q) = q / (e*q + p)
        std::int64_t np = q;
        std::int64_t nq = *it * q + p;
        p = np;
        q = nq;
    }
    return reduce(p, q);
}

inline long sign_changes(const seq& s)
{
    long n = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        n += (s[i - 1] < 0) != (s[i] < 0);
    return n;
}

inline long crossings(const seq& s)
{
    long total = 0;
    for (long e : s)
        total += e < 0 ? -e : e;
    return total - sign_changes(s);
}

/// Every even-length sequence of nonzero even entries with sum |e| <= max_abs_sum.
inline std::vector<seq> all_even_sequences(long max_abs_sum)
{
    std::vector<seq> out;
    seq cur;
    auto rec = [&](auto& self, long budget) -> void {
        if (!cur.empty() && cur.size() % 2 == 0)
            out.push_back(cur);
        for (long mag = 2; mag <= budget; mag += 2)
            for (long sign : {1L, -1L}) {
                cur.push_back(sign * mag);
                self(self, budget - mag);
                cur.pop_back();
            }
    };
    rec(rec, max_abs_sum);
    return out;
}

/// Every even sequence with the given crossing number, by exhaustive search.
inline std::set<seq> sequences_with_crossings(long c)
{
    std::set<seq> out;
    // sum |e| = c + ell <= c + (c - 2)
    for (const auto& s : all_even_sequences(2 * c - 2))
        if (crossings(s) == c)
            out.insert(s);
    return out;
}

inline seq rev(const seq& s) { return seq(s.rbegin(), s.rend()); }

inline seq neg(const seq& s)
{
    seq r = s;
    for (auto& e : r)
        e = -e;
    return r;
}

/// Knot classes as explicit orbit sets.
inline std::set<std::set<seq>> classes(const std::set<seq>& seqs, bool collapse_mirror)
{
    std::set<std::set<seq>> out;
    for (const auto& s : seqs) {
        std::set<seq> orbit{s, neg(rev(s))};
        if (collapse_mirror) {
            orbit.insert(neg(s));
            orbit.insert(rev(s));
        }
        out.insert(orbit);
    }
    return out;
}

} // namespace oracle
