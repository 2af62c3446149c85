#pragma once

// Closed forms for the number of 2-bridge knots TK(c), their total genus
// TG(c) and average genus, with and without identifying mirror images, and
// the per-stratum quantities A_l (knot count) and B_l (genus sum) for a
// fixed number of sign changes.
//
// All arithmetic is exact; every division by a constant must be exact and
// throws errc::inexact_division otherwise.

#include <string>

#include "twobridge/arith.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

/// Case selector for the mirror-distinct formulas (even c is one branch).
enum class chiral_residue { mod2_0, mod4_1, mod4_3 };

/// Case selector for the mirror-collapsed formulas.
enum class mirror_residue { mod4_0, mod4_1, mod4_2, mod4_3 };

enum class crossing_parity { even, odd };

struct crossing_class {
    long c;
    chiral_residue chiral;
    mirror_residue mirror;
};

inline void check_formula_crossings(long c)
{
    if (c < 3)
        throw error(errc::out_of_range, "crossing number must be >= 3, got " + std::to_string(c));
}

inline crossing_class classify(long c)
{
    check_formula_crossings(c);
    const long r = c % 4;
    chiral_residue chiral = (c % 2 == 0) ? chiral_residue::mod2_0
                            : (r == 1)   ? chiral_residue::mod4_1
                                         : chiral_residue::mod4_3;
    mirror_residue mirror = static_cast<mirror_residue>(r);
    return {c, chiral, mirror};
}

namespace detail {

inline unsigned long ul(long v) { return static_cast<unsigned long>(v); }

} // namespace detail

// --- Mirror-distinct --------------------------------------------------------

/// Number of 2-bridge knots with c crossings (mirror images counted separately).
inline integer tk_closed(long c)
{
    using detail::ul;
    const auto cls = classify(c);
    switch (cls.chiral) {
    case chiral_residue::mod2_0:
        return exact_div(pow2(ul(c - 2)) - 1, 3);
    case chiral_residue::mod4_1:
        return exact_div(pow2(ul(c - 2)) + pow2(ul((c - 1) / 2)), 3);
    case chiral_residue::mod4_3:
        return exact_div(pow2(ul(c - 2)) + pow2(ul((c - 1) / 2)) + 2, 3);
    }
    throw error(errc::branch_mismatch, "unreachable residue");
}

/// Total genus of the 2-bridge knots with c crossings.
inline integer tg_closed(long c)
{
    using detail::ul;
    const auto cls = classify(c);
    const integer lead = (3 * c + 1) * pow2(ul(c - 2));
    switch (cls.chiral) {
    case chiral_residue::mod2_0:
        return exact_div(lead - 16, 36);
    case chiral_residue::mod4_1:
        return exact_div(lead + (3 * c + 5) * pow2(ul((c - 1) / 2)) + 8, 36);
    case chiral_residue::mod4_3:
        return exact_div(lead + (3 * c + 5) * pow2(ul((c - 1) / 2)) + 24, 36);
    }
    throw error(errc::branch_mismatch, "unreachable residue");
}

/// c/4 + 1/12.
inline rational asymptote(long c) { return make_rational(c, 4) + make_rational(1, 12); }

/// The printed correction term of the average genus, by residue class.
inline rational correction_term(long c)
{
    using detail::ul;
    const auto cls = classify(c);
    switch (cls.chiral) {
    case chiral_residue::mod2_0:
        return make_rational(c - 5, pow2(ul(c)) - 4);
    case chiral_residue::mod4_1:
        return make_rational(1, 3 * pow2(ul((c - 3) / 2)));
    case chiral_residue::mod4_3:
        return make_rational(pow2(ul((c + 1) / 2)) - 3 * c + 11,
                             12 * (pow2(ul(c - 3)) + pow2(ul((c - 3) / 2)) + 1));
    }
    throw error(errc::branch_mismatch, "unreachable residue");
}

/// Average genus TG(c)/TK(c), cross-checked against c/4 + 1/12 + correction.
inline rational avg_genus(long c)
{
    const rational ratio = make_rational(tg_closed(c), tk_closed(c));
    const rational piecewise = asymptote(c) + correction_term(c);
    if (ratio != piecewise)
        throw error(errc::branch_mismatch, "c=" + std::to_string(c) + ": " + to_string(ratio) +
                                               " vs " + to_string(piecewise));
    return ratio;
}

/// avg_genus(c) - c/4 - 1/12.
inline rational residual(long c) { return rational(avg_genus(c) - asymptote(c)); }

// --- Mirror-collapsed -------------------------------------------------------

/// Number of 2-bridge knots with c crossings up to mirror image.
inline integer tk_mirror_closed(long c)
{
    using detail::ul;
    const auto cls = classify(c);
    const integer lead = pow2(ul(c - 3));
    switch (cls.mirror) {
    case mirror_residue::mod4_0:
        return exact_div(lead + pow2(ul((c - 4) / 2)), 3);
    case mirror_residue::mod4_1:
        return exact_div(lead + pow2(ul((c - 3) / 2)), 3);
    case mirror_residue::mod4_2:
        return exact_div(lead + pow2(ul((c - 4) / 2)) - 1, 3);
    case mirror_residue::mod4_3:
        return exact_div(lead + pow2(ul((c - 3) / 2)) + 1, 3);
    }
    throw error(errc::branch_mismatch, "unreachable residue");
}

/// Total genus up to mirror image.
inline integer tg_mirror_closed(long c)
{
    using detail::ul;
    const auto cls = classify(c);
    const integer lead = (3 * c + 1) * pow2(ul(c - 2));
    switch (cls.mirror) {
    case mirror_residue::mod4_0:
        return exact_div(lead + (3 * c + 2) * pow2(ul((c - 2) / 2)) - 8, 72);
    case mirror_residue::mod4_1:
        return exact_div(lead + (3 * c + 5) * pow2(ul((c - 1) / 2)) + 8, 72);
    case mirror_residue::mod4_2:
        return exact_div(lead + (3 * c + 2) * pow2(ul((c - 2) / 2)) - 24, 72);
    case mirror_residue::mod4_3:
        return exact_div(lead + (3 * c + 5) * pow2(ul((c - 1) / 2)) + 24, 72);
    }
    throw error(errc::branch_mismatch, "unreachable residue");
}

inline rational correction_term_mirror(long c)
{
    using detail::ul;
    const auto cls = classify(c);
    switch (cls.mirror) {
    case mirror_residue::mod4_0:
        return make_rational(pow2(ul((c - 4) / 2)) - 4, 3 * (pow2(ul(c - 1)) + pow2(ul(c / 2))));
    case mirror_residue::mod4_2:
        return make_rational(pow2(ul((c - 4) / 2)) + 3 * c - 11,
                             12 * (pow2(ul(c - 3)) + pow2(ul((c - 4) / 2)) - 1));
    case mirror_residue::mod4_1:
    case mirror_residue::mod4_3:
        return correction_term(c);
    }
    throw error(errc::branch_mismatch, "unreachable residue");
}

inline rational avg_genus_mirror(long c)
{
    const rational ratio = make_rational(tg_mirror_closed(c), tk_mirror_closed(c));
    const rational piecewise = asymptote(c) + correction_term_mirror(c);
    if (ratio != piecewise)
        throw error(errc::branch_mismatch, "c=" + std::to_string(c) + ": " + to_string(ratio) +
                                               " vs " + to_string(piecewise));
    return ratio;
}

inline rational residual_mirror(long c) { return rational(avg_genus_mirror(c) - asymptote(c)); }

/// Even c: the double sum over (l, m) counting chiral pairs plus amphichiral
/// palindromes, each weighted m/2. Odd c: TG(c)/2.
inline integer tg_mirror_double_sum(long c)
{
    check_formula_crossings(c);
    if (c % 2 == 1)
        return exact_div(tg_closed(c), 2);
    const long k = c / 2;
    rational total = 0;
    for (long l = 0; l <= k - 1; ++l) {
        for (long m = l + 1; m <= (k + l) / 2; ++m)
            total += make_rational(m, 2) * binomial(k + l - 1, 2 * m - 1) * binomial(2 * m - 1, 2 * l);
        if ((l + k) % 2 == 0)
            for (long m = l + 1; m <= (k + l) / 2; ++m)
                total += make_rational(m, 2) * binomial((k + l - 2) / 2, m - 1) * binomial(m - 1, l);
    }
    return to_integer(total);
}

/// Same double sum after the binomial product rewrite
/// C(a,b)C(b,c) = C(a,c)C(a-c,b-c).
inline integer tg_mirror_double_sum_rewritten(long c)
{
    check_formula_crossings(c);
    if (c % 2 == 1)
        return exact_div(tg_closed(c), 2);
    const long k = c / 2;
    rational total = 0;
    for (long l = 0; l <= k - 1; ++l) {
        for (long m = l + 1; m <= (k + l) / 2; ++m)
            total += make_rational(m, 2) * binomial(k + l - 1, 2 * l) * binomial(k - l - 1, 2 * m - 2 * l - 1);
        if ((l + k) % 2 == 0)
            for (long m = l + 1; m <= (k + l) / 2; ++m)
                total += make_rational(m, 2) * binomial((k + l - 2) / 2, l) * binomial((k - l - 2) / 2, m - l - 1);
    }
    return to_integer(total);
}

// --- Strata -----------------------------------------------------------------
//
// For c = 2k (even) the sign-change count is ell = 2l; for c = 2k+1 (odd) it
// is ell = 2l+1. In both cases 0 <= l <= k-1. A_l counts mirror-distinct
// knot classes in the stratum; it equals (raw sequences + anti-palindromic
// sequences) / 2, the anti-palindromes (s == reverse_negated(s)) occurring
// only for odd c.

inline long crossing_of(long k, crossing_parity parity)
{
    return parity == crossing_parity::even ? 2 * k : 2 * k + 1;
}

inline void check_stratum_index(long k, long l, crossing_parity parity)
{
    check_formula_crossings(crossing_of(k, parity));
    if (l < 0 || l > k - 1)
        throw error(errc::out_of_range, "stratum index l must satisfy 0 <= l <= k-1");
}

inline integer stratum_closed_A(long k, long l, crossing_parity parity)
{
    using detail::ul;
    check_stratum_index(k, l, parity);
    if (parity == crossing_parity::even) {
        if (l == k - 1)
            return 0;
        return pow2(ul(k - l - 2)) * binomial(k + l - 1, k - l - 1);
    }
    // Sum over m of C(k-l-1, even) is 2^{k-l-2}, or 1 when k-l-1 = 0.
    integer a = binomial(k + l, 2 * l + 1) * (l == k - 1 ? integer(1) : pow2(ul(k - l - 2)));
    if ((k + l) % 2 == 1)
        a += binomial((k + l - 1) / 2, l) * pow2(ul((k - l - 1) / 2));
    return a;
}

/// Genus sum of the stratum. Boundary indices l = k-2 and l = k-1 carry the
/// half-integer offsets of the simplified forms; the result is integral.
inline rational stratum_closed_B(long k, long l, crossing_parity parity)
{
    check_stratum_index(k, l, parity);
    rational b;
    if (parity == crossing_parity::even) {
        rational twice = rational(k + 3 * l + 1) * pow2q(k - l - 3) * binomial(k + l - 1, k - l - 1);
        if (l == k - 2)
            twice += make_rational(2 * k - 3, 2);
        else if (l == k - 1)
            twice -= make_rational(2 * k - 1, 2);
        b = twice / 2;
    } else {
        b = rational(k + 3 * l + 3) * pow2q(k - l - 4) * binomial(k + l, 2 * l + 1);
        if (l == k - 2)
            b -= make_rational(k - 1, 2);
        else if (l == k - 1)
            b += make_rational(k, 2);
        if ((k + l) % 2 == 1)
            b += rational(k + 3 * l + 3) * pow2q((k - l - 5) / 2) * binomial((k + l - 1) / 2, l);
    }
    if (!is_integer(b))
        throw error(errc::non_integer_result, "B_l(k=" + std::to_string(k) + ", l=" +
                                                  std::to_string(l) + ") = " + to_string(b));
    return b;
}

/// Sum of stratum_closed_A over l; equals tk_closed(c).
inline integer tk_from_strata(long c)
{
    check_formula_crossings(c);
    const long k = c / 2;
    const auto parity = c % 2 == 0 ? crossing_parity::even : crossing_parity::odd;
    integer sum = 0;
    for (long l = 0; l <= k - 1; ++l)
        sum += stratum_closed_A(k, l, parity);
    return sum;
}

/// Sum of stratum_closed_B over l; equals tg_closed(c).
inline integer tg_from_strata(long c)
{
    check_formula_crossings(c);
    const long k = c / 2;
    const auto parity = c % 2 == 0 ? crossing_parity::even : crossing_parity::odd;
    rational sum = 0;
    for (long l = 0; l <= k - 1; ++l)
        sum += stratum_closed_B(k, l, parity);
    return to_integer(sum);
}

struct stratum_totals {
    integer count;     ///< sum of A_l
    integer genus_sum; ///< sum of B_l
};

/// Sums of A_l and B_l over l, with the binomial factors updated
/// incrementally from l to l+1 instead of recomputed. Same terms and
/// boundary offsets as stratum_closed_A / stratum_closed_B.
inline stratum_totals sum_strata(long c)
{
    check_formula_crossings(c);
    const long k = c / 2;
    integer count = 0;
    integer eight_b = 0; // 8 * sum of B_l
    if (c % 2 == 0) {
        // T_l = 2^{k-l-1} C(k+l-1, 2l); A_l = T_l / 2 (l <= k-2), A_{k-1} = 0;
        // 2 B_l = (k+3l+1) T_l / 4 plus the boundary offsets, which net to -1.
        integer t = pow2(detail::ul(k - 1));
        for (long l = 0; l <= k - 1; ++l) {
            if (l <= k - 2)
                count += t;
            eight_b += (k + 3 * l + 1) * t;
            if (l < k - 1) {
                t *= (k + l) * (k - l - 1);
                exact_div_inplace(t, detail::ul(2 * (2 * l + 1) * (2 * l + 2)));
            }
        }
        count = exact_div(count, 2);
        eight_b -= 4;
    } else {
        // U_l = 2^{k-l-1} C(k+l, 2l+1); first-part A_l = U_l / 2 (l <= k-2), U_{k-1} = 1 at l = k-1;
        // first-part B_l = (k+3l+3) U_l / 8 plus offsets netting to +1/2.
        integer u = k * pow2(detail::ul(k - 1));
        integer half_count = 0;
        for (long l = 0; l <= k - 1; ++l) {
            if (l <= k - 2)
                half_count += u;
            else
                count += u;
            eight_b += (k + 3 * l + 3) * u;
            if (l < k - 1) {
                u *= (k + l + 1) * (k - l - 1);
                exact_div_inplace(u, detail::ul(2 * (2 * l + 2) * (2 * l + 3)));
            }
        }
        count += exact_div(half_count, 2);
        eight_b += 4;
        // Anti-palindromic part, present when k+l is odd:
        // V_l = 2^{(k-l-1)/2} C((k+l-1)/2, l); A += V_l, B += (k+3l+3) V_l / 4.
        long l = (k % 2 == 0) ? 1 : 0;
        if (l <= k - 1) {
            long j = (k + l - 1) / 2;
            integer v = binomial(j, l) * pow2(detail::ul((k - l - 1) / 2));
            for (; l <= k - 1; l += 2, ++j) {
                count += v;
                eight_b += 2 * (k + 3 * l + 3) * v;
                if (l + 2 <= k - 1) {
                    v *= (j + 1) * (j - l);
                    exact_div_inplace(v, detail::ul(2 * (l + 1) * (l + 2)));
                }
            }
        }
    }
    return {count, exact_div(eight_b, 8)};
}

} // namespace twobridge
