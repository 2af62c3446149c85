#include <gtest/gtest.h>

#include "table1.hpp"
#include "twobridge/enumerate.hpp"
#include "twobridge/formulas.hpp"

using namespace twobridge;

namespace {

rational q(long n, long d) { return make_rational(n, d); }

constexpr auto even = crossing_parity::even;
constexpr auto odd = crossing_parity::odd;

} // namespace

TEST(Classify, Residues)
{
    EXPECT_EQ(classify(6).chiral, chiral_residue::mod2_0);
    EXPECT_EQ(classify(8).chiral, chiral_residue::mod2_0);
    EXPECT_EQ(classify(9).chiral, chiral_residue::mod4_1);
    EXPECT_EQ(classify(11).chiral, chiral_residue::mod4_3);
    EXPECT_EQ(classify(6).mirror, mirror_residue::mod4_2);
    EXPECT_EQ(classify(8).mirror, mirror_residue::mod4_0);
    EXPECT_THROW(classify(2), error);
}

TEST(Closed, Examples)
{
    EXPECT_EQ(tk_closed(7), 14);
    EXPECT_EQ(tk_closed(13), 704);
    EXPECT_EQ(tk_closed(4), 1);
    EXPECT_EQ(tg_closed(8), 44);
    EXPECT_EQ(tg_closed(15), 10646);
    EXPECT_EQ(tg_closed(3), 2);
    EXPECT_EQ(avg_genus(6), q(8, 5));
    EXPECT_EQ(avg_genus(9), q(19, 8));
    EXPECT_EQ(avg_genus(13), q(107, 32));
    EXPECT_EQ(residual(6), q(1, 60));
    EXPECT_EQ(residual(5), q(1, 6));
    EXPECT_EQ(residual(7), q(1, 42));
}

TEST(Closed, MirrorExamples)
{
    EXPECT_EQ(tk_mirror_closed(12), 176);
    EXPECT_EQ(tk_mirror_closed(5), 2);
    EXPECT_EQ(tk_mirror_closed(6), 3);
    EXPECT_EQ(tg_mirror_closed(14), 2485);
    EXPECT_EQ(tg_mirror_closed(11), 259);
    EXPECT_EQ(tg_mirror_closed(4), 1);
    EXPECT_EQ(avg_genus_mirror(8), q(25, 12));
    EXPECT_EQ(avg_genus_mirror(14), q(355, 99));
    EXPECT_EQ(avg_genus_mirror(15), q(5323, 1387));
}

TEST(Closed, PublishedTable)
{
    for (const auto& r : table1::rows) {
        EXPECT_EQ(tk_closed(r.c), r.tk) << r.c;
        EXPECT_EQ(tg_closed(r.c), r.tg) << r.c;
        EXPECT_EQ(avg_genus(r.c), q(r.gbar_num, r.gbar_den)) << r.c;
        EXPECT_EQ(tk_mirror_closed(r.c), r.tk_star) << r.c;
        EXPECT_EQ(tg_mirror_closed(r.c), r.tg_star) << r.c;
        EXPECT_EQ(avg_genus_mirror(r.c), q(r.gbar_star_num, r.gbar_star_den)) << r.c;
    }
}

TEST(Closed, ConsistencyUpToTenThousand)
{
    // avg_genus compares both computations internally and throws on mismatch.
    for (long c = 3; c <= 10000; ++c) {
        const integer tk = tk_closed(c), tg = tg_closed(c);
        ASSERT_EQ(rational(avg_genus(c) * tk), rational(tg)) << c;
        ASSERT_EQ(residual(c), correction_term(c)) << c;
        ASSERT_EQ(residual_mirror(c), correction_term_mirror(c)) << c;
        if (c % 2 == 1) {
            ASSERT_EQ(tk, 2 * tk_mirror_closed(c)) << c;
            ASSERT_EQ(tg, 2 * tg_mirror_closed(c)) << c;
            ASSERT_EQ(avg_genus_mirror(c), avg_genus(c)) << c;
        }
    }
}

TEST(Closed, ResidualBelowExponentialBound)
{
    // |r| < 2^{-c/4}  <=>  r^4 * 2^c < 1
    for (long c = 20; c <= 10000; ++c)
        for (const rational& r : {residual(c), residual_mirror(c)}) {
            const rational r2 = r * r;
            ASSERT_LT(rational(r2 * r2 * rational(pow2(static_cast<unsigned long>(c)))), 1) << c;
        }
}

TEST(Closed, AgreeWithEnumeration)
{
    for (long c = 3; c <= 16; ++c) {
        const auto d = tally(c, mirror_mode::distinct);
        const auto m = tally(c, mirror_mode::collapsed);
        EXPECT_EQ(d.knot_count, tk_closed(c)) << c;
        EXPECT_EQ(d.total_genus, tg_closed(c)) << c;
        EXPECT_EQ(m.knot_count, tk_mirror_closed(c)) << c;
        EXPECT_EQ(m.total_genus, tg_mirror_closed(c)) << c;
        if (c % 2 == 0) {
            EXPECT_EQ(2 * m.knot_count - d.knot_count, amphichiral_count(c)) << c;
        }
    }
}

TEST(Closed, RejectsSmallCrossings)
{
    EXPECT_THROW(tk_closed(2), error);
    EXPECT_THROW(tg_mirror_closed(0), error);
}

TEST(MirrorDoubleSum, MatchesClosedFormAndEnumeration)
{
    for (long c = 3; c <= 120; ++c) {
        ASSERT_EQ(tg_mirror_double_sum(c), tg_mirror_closed(c)) << c;
        ASSERT_EQ(tg_mirror_double_sum_rewritten(c), tg_mirror_closed(c)) << c;
    }
    for (long c = 3; c <= 14; ++c)
        EXPECT_EQ(tg_mirror_double_sum(c), tally(c, mirror_mode::collapsed).total_genus) << c;
}

TEST(Strata, Examples)
{
    EXPECT_EQ(stratum_closed_A(3, 0, even), 2);
    EXPECT_EQ(stratum_closed_A(2, 1, even), 0);
    // c = 3: one stratum holding the trefoil and its mirror.
    EXPECT_EQ(stratum_closed_A(1, 0, odd), 2);
    EXPECT_EQ(stratum_closed_B(1, 0, odd), 2);
    EXPECT_THROW(stratum_closed_A(3, 3, even), error);
    EXPECT_THROW(stratum_closed_B(3, -1, odd), error);
    EXPECT_THROW(stratum_closed_A(1, 0, even), error);
}

TEST(Strata, LastIndexReadingIsZero)
{
    // 2^{k-l-2} C(k+l-1, k-l-1) - 1/2 at l = k-1 reduces to 0.
    for (long k = 2; k <= 40; ++k) {
        const long l = k - 1;
        const rational reading = rational(pow2q(k - l - 2) * binomial(k + l - 1, k - l - 1)) - q(1, 2);
        EXPECT_EQ(reading, 0);
        EXPECT_EQ(stratum_closed_A(k, l, even), 0);
    }
}

TEST(Strata, PerIndexValuesMatchEnumeration)
{
    for (long c = 3; c <= 18; ++c) {
        const auto t = tally(c, mirror_mode::distinct);
        const long k = c / 2;
        const auto parity = c % 2 == 0 ? even : odd;
        for (long l = 0; l <= k - 1; ++l) {
            const long ell = parity == even ? 2 * l : 2 * l + 1;
            const auto it = t.by_ell.find(ell);
            const integer count = it == t.by_ell.end() ? integer(0) : it->second.count;
            const integer genus_sum = it == t.by_ell.end() ? integer(0) : it->second.genus_sum;
            EXPECT_EQ(stratum_closed_A(k, l, parity), count) << "c=" << c << " l=" << l;
            EXPECT_EQ(stratum_closed_B(k, l, parity), rational(genus_sum)) << "c=" << c << " l=" << l;
        }
    }
}

TEST(Strata, SumsMatchClosedForms)
{
    for (long c = 3; c <= 300; ++c) {
        ASSERT_EQ(tk_from_strata(c), tk_closed(c)) << c;
        ASSERT_EQ(tg_from_strata(c), tg_closed(c)) << c;
        const auto fast = sum_strata(c);
        ASSERT_EQ(fast.count, tk_from_strata(c)) << c;
        ASSERT_EQ(fast.genus_sum, tg_from_strata(c)) << c;
    }
}

TEST(Strata, IncrementalSumsUpToTenThousand)
{
    for (long c = 3; c <= 10000; ++c) {
        const auto s = sum_strata(c);
        ASSERT_EQ(s.count, tk_closed(c)) << c;
        ASSERT_EQ(s.genus_sum, tg_closed(c)) << c;
    }
}

TEST(Arith, ExactDivisionThrows)
{
    EXPECT_EQ(exact_div(integer(12), integer(4)), 3);
    try {
        exact_div(integer(10), integer(4));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::inexact_division);
    }
    EXPECT_THROW(to_integer(q(1, 2)), error);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(pow2q(-3), q(1, 8));
}
