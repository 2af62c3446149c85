#pragma once

// Even continued fractions [2a_1, ..., 2a_2m] and their elementary invariants.
//
// The value of a sequence is 1/(e_1 + 1/(e_2 + ... + 1/e_n)), never the
// a_0 + 1/(...) convention.

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "twobridge/arith.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

namespace detail {

inline int sign_of(int v) noexcept { return (v > 0) - (v < 0); }
inline int sign_of(long v) noexcept { return (v > 0) - (v < 0); }
inline int sign_of(const integer& v) noexcept { return sgn(v); }

inline bool is_odd(int v) noexcept { return (v & 1) != 0; }
inline bool is_odd(long v) noexcept { return (v & 1) != 0; }
inline bool is_odd(const integer& v) noexcept { return mpz_odd_p(v.get_mpz_t()) != 0; }

inline long abs_value(int v) noexcept { return v < 0 ? -static_cast<long>(v) : v; }
inline long abs_value(long v) noexcept { return v < 0 ? -v : v; }
inline integer abs_value(const integer& v) { return abs(v); }

template <class Int>
std::string entry_string(const Int& v)
{
    if constexpr (std::is_same_v<Int, integer>)
        return v.get_str();
    else
        return std::to_string(v);
}

} // namespace detail

/// A sequence of nonzero even integers of even length >= 2.
///
/// Int is the entry type: `integer` for arbitrary fractions, `int` for the
/// compact sequences produced by enumeration (entries there are bounded by 2c).
template <class Int>
class basic_even_sequence {
public:
    using value_type = Int;

    /// Checks the entry constraints and throws `error` naming the first violation.
    static basic_even_sequence validate(std::vector<Int> entries)
    {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i] == 0)
                throw error(errc::reject_zero_entry,
                            "entry " + std::to_string(i + 1) + " is zero; entries must be nonzero");
            if (detail::is_odd(entries[i]))
                throw error(errc::reject_odd_entry, "entry " + std::to_string(i + 1) + " (" +
                                                        detail::entry_string(entries[i]) +
                                                        ") is odd; entries must be even");
        }
        if (entries.size() < 2 || entries.size() % 2 != 0)
            throw error(errc::reject_odd_length,
                        "length " + std::to_string(entries.size()) + " must be even and at least 2");
        return basic_even_sequence(std::move(entries));
    }

    /// For callers that construct valid sequences by design (enumeration).
    static basic_even_sequence from_trusted(std::vector<Int> entries)
    {
        return basic_even_sequence(std::move(entries));
    }

    const std::vector<Int>& entries() const noexcept { return entries_; }
    std::span<const Int> span() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const Int& operator[](std::size_t i) const noexcept { return entries_[i]; }

    friend bool operator==(const basic_even_sequence& a, const basic_even_sequence& b)
    {
        return a.entries_ == b.entries_;
    }

    friend bool operator<(const basic_even_sequence& a, const basic_even_sequence& b)
    {
        return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                            b.entries_.begin(), b.entries_.end());
    }

private:
    explicit basic_even_sequence(std::vector<Int> entries) : entries_(std::move(entries)) {}

    std::vector<Int> entries_;
};

using even_sequence = basic_even_sequence<integer>;
using compact_sequence = basic_even_sequence<int>;

inline even_sequence validate(std::vector<integer> entries)
{
    return even_sequence::validate(std::move(entries));
}

template <class To, class From>
basic_even_sequence<To> sequence_cast(const basic_even_sequence<From>& s)
{
    std::vector<To> out;
    out.reserve(s.size());
    for (const auto& e : s.entries()) {
        if constexpr (std::is_same_v<To, integer>) {
            out.emplace_back(static_cast<long>(e));
        } else if constexpr (std::is_same_v<From, integer>) {
            if (!e.fits_sint_p())
                throw error(errc::out_of_range, "entry " + e.get_str() + " does not fit");
            out.push_back(static_cast<To>(e.get_si()));
        } else {
            out.push_back(static_cast<To>(e));
        }
    }
    return basic_even_sequence<To>::from_trusted(std::move(out));
}

// --- Orbit operations ------------------------------------------------------

template <class Int>
basic_even_sequence<Int> reversed(const basic_even_sequence<Int>& s)
{
    std::vector<Int> v(s.entries().rbegin(), s.entries().rend());
    return basic_even_sequence<Int>::from_trusted(std::move(v));
}

template <class Int>
basic_even_sequence<Int> negated(const basic_even_sequence<Int>& s)
{
    std::vector<Int> v;
    v.reserve(s.size());
    for (const auto& e : s.entries())
        v.push_back(-e);
    return basic_even_sequence<Int>::from_trusted(std::move(v));
}

template <class Int>
basic_even_sequence<Int> reverse_negated(const basic_even_sequence<Int>& s)
{
    return negated(reversed(s));
}

// --- Invariants ------------------------------------------------------------

/// Number of adjacent pairs with opposite signs.
template <class Int>
long sign_changes(const basic_even_sequence<Int>& s)
{
    long changes = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (detail::sign_of(s[i - 1]) != detail::sign_of(s[i]))
            ++changes;
    return changes;
}

/// Sum of |entries| minus the number of sign changes.
template <class Int>
auto crossing_number(const basic_even_sequence<Int>& s)
{
    using sum_type = std::conditional_t<std::is_same_v<Int, integer>, integer, long>;
    sum_type total = 0;
    for (const auto& e : s.entries())
        total += detail::abs_value(e);
    return sum_type(total - sign_changes(s));
}

/// Half the length.
template <class Int>
long genus(const basic_even_sequence<Int>& s)
{
    return static_cast<long>(s.size() / 2);
}

// --- Fraction value --------------------------------------------------------

/// Right-to-left nested evaluation.
template <class Int>
rational cf_value(const basic_even_sequence<Int>& s)
{
    rational tail = 0;
    for (auto it = s.entries().rbegin(); it != s.entries().rend(); ++it) {
        rational denom = rational(integer(*it)) + tail;
        if (denom == 0)
            throw error(errc::degenerate_tail, "zero intermediate denominator");
        tail = 1 / denom;
    }
    return tail;
}

/// 2x2 product of [[e_i, 1], [1, 0]]; returns {p_n, p_{n-1}, q_n, q_{n-1}}.
template <class Int>
std::array<integer, 4> convergent_matrix(const basic_even_sequence<Int>& s)
{
    integer p = 1, p_prev = 0, q = 0, q_prev = 1;
    for (const auto& e : s.entries()) {
        integer a(e);
        integer p_next = a * p + p_prev;
        integer q_next = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    return {p, p_prev, q, q_prev};
}

/// Same value as cf_value, computed from the matrix product.
template <class Int>
rational cf_value_matrix(const basic_even_sequence<Int>& s)
{
    auto m = convergent_matrix(s);
    // The product gives e_1 + 1/(e_2 + ...) = p_n / q_n; our value is its reciprocal.
    if (m[0] == 0)
        throw error(errc::degenerate_tail, "zero matrix numerator");
    return make_rational(m[2], m[0]);
}

/// The unique even continued fraction of x with 0 < |x| < 1.
///
/// Requires an odd denominator (knot, not link) and an even numerator; each
/// step picks the even quotient e with |den - e*num| < |num|.
inline even_sequence even_expansion(const rational& x)
{
    if (x == 0 || abs(x) >= 1)
        throw error(errc::out_of_range, to_string(x) + " is not in 0 < |x| < 1");
    integer num = x.get_num();
    integer den = x.get_den();
    if (mpz_even_p(den.get_mpz_t()))
        throw error(errc::not_a_knot_fraction, to_string(x) + " has an even denominator");
    if (mpz_odd_p(num.get_mpz_t()))
        throw error(errc::no_even_expansion,
                    to_string(x) + " has an odd numerator; no even-length even expansion exists");

    std::vector<integer> out;
    while (num != 0) {
        // Nearest even integer to den/num: 2 * floor((den + num) / (2 num)).
        // Numerator/denominator parities alternate, so |r| == |num| never occurs.
        integer t;
        mpz_fdiv_q(t.get_mpz_t(), integer(den + num).get_mpz_t(), integer(2 * num).get_mpz_t());
        integer e = 2 * t;
        integer r = den - e * num;
        if (abs(r) >= abs(num))
            throw error(errc::no_even_expansion, "tie in even division at " + to_string(x));
        out.push_back(e);
        den = num;
        num = r;
    }
    return even_sequence::validate(std::move(out));
}

// --- Text format -----------------------------------------------------------

template <class Int>
std::string to_string(const basic_even_sequence<Int>& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += detail::entry_string(s[i]);
    }
    return out;
}

/// Comma-separated signed integers; whitespace is ignored.
inline std::vector<integer> parse_entries(std::string_view text)
{
    std::vector<integer> out;
    std::string cleaned;
    for (char ch : text)
        if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r')
            cleaned += ch;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = cleaned.find(',', start);
        std::string_view token = std::string_view(cleaned).substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty())
            throw error(errc::parse_error, "empty entry in '" + std::string(text) + "'");
        out.push_back(detail::parse_integer(token));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline even_sequence parse_sequence(std::string_view text)
{
    return validate(parse_entries(text));
}

} // namespace twobridge
