#pragma once

// Knot identity for even continued fractions.
//
// K(s) = K(reverse_negated(s)) always; negated(s) is the mirror image. A
// class is represented by the lexicographic minimum of its orbit.

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "twobridge/arith.hpp"
#include "twobridge/combinatorics.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

enum class mirror_mode {
    distinct,  ///< a knot and its mirror image are counted separately
    collapsed, ///< a knot is identified with its mirror image
};

constexpr char mode_letter(mirror_mode m) noexcept { return m == mirror_mode::distinct ? 'D' : 'C'; }

inline mirror_mode parse_mode(std::string_view s)
{
    if (s == "D" || s == "d")
        return mirror_mode::distinct;
    if (s == "C" || s == "c")
        return mirror_mode::collapsed;
    throw error(errc::parse_error, "mode must be D or C, got '" + std::string(s) + "'");
}

template <class Int>
struct basic_knot_class {
    basic_even_sequence<Int> canonical;
    mirror_mode mode;

    friend bool operator==(const basic_knot_class& a, const basic_knot_class& b)
    {
        return a.mode == b.mode && a.canonical == b.canonical;
    }
    friend bool operator<(const basic_knot_class& a, const basic_knot_class& b)
    {
        if (a.mode != b.mode)
            return a.mode < b.mode;
        return a.canonical < b.canonical;
    }
};

using knot_class = basic_knot_class<integer>;

/// Orbit minimum of s: over {s, reverse-negate} in distinct mode, and over
/// {s, negate, reverse, reverse-negate} in collapsed mode.
template <class Int>
basic_knot_class<Int> canonicalize(const basic_even_sequence<Int>& s, mirror_mode mode)
{
    std::span<const Int> e = s.span();
    struct image {
        bool reverse, negate;
    };
    image best{false, false};
    const image distinct_maps[] = {{true, true}};
    const image collapsed_maps[] = {{true, true}, {false, true}, {true, false}};
    std::span<const image> maps = mode == mirror_mode::distinct ? std::span<const image>(distinct_maps)
                                                                : std::span<const image>(collapsed_maps);
    // Images are compared entrywise without materializing them.
    for (const image& g : maps) {
        const std::size_t n = e.size();
        int cmp = 0;
        for (std::size_t i = 0; i < n && cmp == 0; ++i) {
            Int x = best.reverse ? e[n - 1 - i] : e[i];
            if (best.negate)
                x = -x;
            Int y = g.reverse ? e[n - 1 - i] : e[i];
            if (g.negate)
                y = -y;
            if (y < x)
                cmp = -1;
            else if (x < y)
                cmp = 1;
        }
        if (cmp < 0)
            best = g;
    }
    if (!best.reverse && !best.negate)
        return {s, mode};
    if (best.reverse && best.negate)
        return {reverse_negated(s), mode};
    if (best.negate)
        return {negated(s), mode};
    return {reversed(s), mode};
}

/// True iff the knot equals its mirror image.
template <class Int>
bool is_amphichiral(const basic_even_sequence<Int>& s)
{
    return canonicalize(s, mirror_mode::distinct) == canonicalize(negated(s), mirror_mode::distinct);
}

/// "D:-2,-4" / "C:-2,2".
template <class Int>
std::string to_string(const basic_knot_class<Int>& k)
{
    return std::string(1, mode_letter(k.mode)) + ":" + to_string(k.canonical);
}

inline knot_class parse_knot_class(std::string_view text)
{
    if (text.size() < 3 || text[1] != ':')
        throw error(errc::parse_error, "expected <D|C>:<sequence>, got '" + std::string(text) + "'");
    mirror_mode mode = parse_mode(text.substr(0, 1));
    return canonicalize(parse_sequence(text.substr(2)), mode);
}

// --- Strata ----------------------------------------------------------------

/// Magnitude vector b (b_i = |entry_i| / 2) and sign-change count.
struct stratum_key {
    std::vector<long> b;
    long ell = 0;

    friend bool operator==(const stratum_key&, const stratum_key&) = default;
};

inline void check_stratum(const stratum_key& key)
{
    if (key.b.size() < 2 || key.b.size() % 2 != 0)
        throw error(errc::invalid_stratum, "b must have even length >= 2");
    for (long v : key.b)
        if (v < 1)
            throw error(errc::invalid_stratum, "every b_i must be >= 1");
    if (key.ell < 0 || key.ell > static_cast<long>(key.b.size()) - 1)
        throw error(errc::invalid_stratum, "ell must satisfy 0 <= ell <= length - 1");
}

template <class Int>
stratum_key stratum_of(const basic_even_sequence<Int>& s)
{
    stratum_key key;
    key.b.reserve(s.size());
    for (const auto& e : s.entries()) {
        if constexpr (std::is_same_v<Int, integer>) {
            integer m = abs(e) / 2;
            if (!m.fits_slong_p())
                throw error(errc::out_of_range, "entry too large for a stratum key");
            key.b.push_back(m.get_si());
        } else {
            key.b.push_back(detail::abs_value(e) / 2);
        }
    }
    key.ell = sign_changes(s);
    return key;
}

/// Distinct knot classes realized by magnitudes b with exactly ell sign
/// changes. The result is the same for b and reverse(b).
inline std::set<knot_class> stratum_members(const stratum_key& key, mirror_mode mode)
{
    check_stratum(key);
    std::set<knot_class> out;
    const long n = static_cast<long>(key.b.size());
    for (const auto& pattern : sign_patterns(n, key.ell)) {
        std::vector<integer> v;
        v.reserve(key.b.size());
        for (std::size_t i = 0; i < key.b.size(); ++i)
            v.emplace_back(2 * key.b[i] * pattern[i]);
        out.insert(canonicalize(even_sequence::from_trusted(std::move(v)), mode));
    }
    return out;
}

} // namespace twobridge
