#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "twobridge/error.hpp"

namespace twobridge {

using integer = mpz_class;

// Always canonical: lowest terms, positive denominator.
using rational = mpq_class;

inline rational make_rational(const integer& num, const integer& den)
{
    if (den == 0)
        throw error(errc::out_of_range, "zero denominator");
    rational r(num, den);
    r.canonicalize();
    return r;
}

inline integer pow2(unsigned long e)
{
    integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/// 2^e for any integer exponent; negative exponents give 1/2^-e.
inline rational pow2q(long e)
{
    if (e >= 0)
        return rational(pow2(static_cast<unsigned long>(e)));
    return make_rational(1, pow2(static_cast<unsigned long>(-e)));
}

/// Binomial coefficient with the vanishing convention outside 0 <= k <= n.
inline integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline integer exact_div(const integer& a, const integer& b)
{
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw error(errc::inexact_division, a.get_str() + " / " + b.get_str());
    integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// In-place a /= d for a small positive divisor, throwing if inexact.
inline void exact_div_inplace(integer& a, unsigned long d)
{
    if (d == 0 || mpz_tdiv_q_ui(a.get_mpz_t(), a.get_mpz_t(), d) != 0)
        throw error(errc::inexact_division, "division by " + std::to_string(d));
}

inline bool is_integer(const rational& r) { return r.get_den() == 1; }

inline integer to_integer(const rational& r)
{
    if (!is_integer(r))
        throw error(errc::non_integer_result, r.get_str());
    return r.get_num();
}

inline std::string to_string(const integer& z) { return z.get_str(); }

/// "p/q" with q > 0, also for integral values.
inline std::string to_string(const rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace detail {

inline integer parse_integer(std::string_view s)
{
    std::string t(s);
    std::size_t b = t.find_first_not_of(" \t");
    std::size_t e = t.find_last_not_of(" \t");
    if (b == std::string::npos)
        throw error(errc::parse_error, "empty integer token");
    t = t.substr(b, e - b + 1);
    std::string_view digits = t;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw error(errc::parse_error, "bad integer token '" + std::string(s) + "'");
    if (t.front() == '+')
        t.erase(0, 1);
    return integer(t);
}

} // namespace detail

inline rational parse_rational(std::string_view s)
{
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return rational(detail::parse_integer(s));
    integer num = detail::parse_integer(s.substr(0, slash));
    integer den = detail::parse_integer(s.substr(slash + 1));
    return make_rational(num, den);
}

} // namespace twobridge
