#pragma once

// Point checks of the binomial identities behind the total-genus formulas.
//
//   alpha_n(x) = sum_{q=0}^{n-1} x^q C(2n-1-q, q)
//   beta_n(x)  = sum_{q=0}^{n}   x^q C(2n-q, q)
//
// The surd closed forms in x are checked through the equivalent linear
// recurrence (alpha_0 = 0, alpha_1 = 1) and, at x = 2 where sqrt(4x+1) = 3,
// through their rational specializations.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/arith.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

enum class identity_id {
    alpha_beta_at_two,  // (4^n-1)/3 and (2*4^n+1)/3
    alpha_recurrence,   // alpha_{n+1} = (2x+1) alpha_n - x^2 alpha_{n-1}; beta_n = alpha_{n+1} - x alpha_n
    weighted_sums,      // sum q 2^q C(2n-1-q, q) and sum q 2^q C(2n-q, q)
    binomial_product,   // C(a,b) C(b,c) = C(a,c) C(a-c, b-c)
    binomial_row_sum,   // sum_q C(n,q) = 2^n
    binomial_even_sum,  // sum_q C(n,2q) = 2^{n-1}
    binomial_mean_sum,  // sum_q q C(n,q) = n 2^{n-1}
};

constexpr std::string_view to_string(identity_id id) noexcept
{
    switch (id) {
    case identity_id::alpha_beta_at_two: return "alpha_beta_at_two";
    case identity_id::alpha_recurrence: return "alpha_recurrence";
    case identity_id::weighted_sums: return "weighted_sums";
    case identity_id::binomial_product: return "binomial_product";
    case identity_id::binomial_row_sum: return "binomial_row_sum";
    case identity_id::binomial_even_sum: return "binomial_even_sum";
    case identity_id::binomial_mean_sum: return "binomial_mean_sum";
    }
    return "unknown";
}

struct identity_report {
    identity_id id;
    long n_min = 0;
    long n_max = 0;
    std::vector<rational> x_values;
    bool pass = true;
    std::string counterexample; // first failing point, empty on pass

    void fail(std::string where)
    {
        if (pass) {
            pass = false;
            counterexample = std::move(where);
        }
    }
};

inline std::string to_string(const identity_report& r)
{
    std::string out = std::string(to_string(r.id)) + " n=[" + std::to_string(r.n_min) + "," +
                      std::to_string(r.n_max) + "]";
    if (!r.x_values.empty()) {
        out += " x={";
        for (std::size_t i = 0; i < r.x_values.size(); ++i)
            out += (i ? "," : "") + to_string(r.x_values[i]);
        out += "}";
    }
    out += r.pass ? " pass" : " FAIL at " + r.counterexample;
    return out;
}

inline rational alpha_sum(long n, const rational& x)
{
    if (n < 0)
        throw error(errc::out_of_range, "alpha_sum needs n >= 0");
    rational total = 0;
    rational power = 1;
    for (long q = 0; q <= n - 1; ++q) {
        total += power * binomial(2 * n - 1 - q, q);
        power *= x;
    }
    return total;
}

inline rational beta_sum(long n, const rational& x)
{
    if (n < 0)
        throw error(errc::out_of_range, "beta_sum needs n >= 0");
    rational total = 0;
    rational power = 1;
    for (long q = 0; q <= n; ++q) {
        total += power * binomial(2 * n - q, q);
        power *= x;
    }
    return total;
}

/// alpha_sum(n, 2) == (4^n-1)/3 and beta_sum(n, 2) == (2*4^n+1)/3 for 0 <= n <= n_max.
inline identity_report alpha_beta_at_two_check(long n_max)
{
    identity_report r{identity_id::alpha_beta_at_two, 0, n_max, {rational(2)}, true, {}};
    for (long n = 0; n <= n_max; ++n) {
        const integer four_n = pow2(static_cast<unsigned long>(2 * n));
        if (alpha_sum(n, 2) != rational(exact_div(four_n - 1, 3)))
            r.fail("alpha n=" + std::to_string(n));
        if (beta_sum(n, 2) != rational(exact_div(2 * four_n + 1, 3)))
            r.fail("beta n=" + std::to_string(n));
    }
    return r;
}

/// Both recurrences for 1 <= n < n_max at the given x.
inline identity_report alpha_recurrence_check(long n_max, const rational& x)
{
    if (n_max < 2)
        throw error(errc::out_of_range, "alpha_recurrence_check needs n_max >= 2");
    identity_report r{identity_id::alpha_recurrence, 1, n_max - 1, {x}, true, {}};
    if (alpha_sum(0, x) != 0 || alpha_sum(1, x) != 1)
        r.fail("initial values");
    std::vector<rational> alpha;
    for (long n = 0; n <= n_max; ++n)
        alpha.push_back(alpha_sum(n, x));
    const rational twice_plus_one = 2 * x + 1;
    const rational square = x * x;
    for (long n = 1; n < n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n);
        if (alpha[i + 1] - twice_plus_one * alpha[i] + square * alpha[i - 1] != 0)
            r.fail("alpha recurrence n=" + std::to_string(n));
        if (beta_sum(n, x) != alpha[i + 1] - x * alpha[i])
            r.fail("beta relation n=" + std::to_string(n));
    }
    return r;
}

/// The two weighted sums at x = 2 against their closed forms, 1 <= n <= n_max.
inline identity_report weighted_sums_check(long n_max)
{
    if (n_max < 1)
        throw error(errc::out_of_range, "weighted_sums_check needs n_max >= 1");
    identity_report r{identity_id::weighted_sums, 1, n_max, {}, true, {}};
    for (long n = 1; n <= n_max; ++n) {
        integer first = 0, second = 0;
        for (long q = 0; q <= n - 1; ++q)
            first += q * pow2(static_cast<unsigned long>(q)) * binomial(2 * n - 1 - q, q);
        for (long q = 0; q <= n; ++q)
            second += q * pow2(static_cast<unsigned long>(q)) * binomial(2 * n - q, q);
        const integer four_n_minus_one = pow2(static_cast<unsigned long>(2 * n)) - 1;
        const rational first_closed =
            make_rational(2, 27) * rational(four_n_minus_one * (3 * n - 2) - 3 * n);
        const rational second_closed =
            make_rational(2, 27) * rational(four_n_minus_one * (6 * n - 1) + 12 * n);
        if (rational(first) != first_closed)
            r.fail("first sum n=" + std::to_string(n));
        if (rational(second) != second_closed)
            r.fail("second sum n=" + std::to_string(n));
    }
    return r;
}

/// The four standard binomial identities, each as its own report.
inline std::vector<identity_report> wellknown_check(long n_max)
{
    if (n_max < 1)
        throw error(errc::out_of_range, "wellknown_check needs n_max >= 1");
    identity_report product{identity_id::binomial_product, 0, n_max, {}, true, {}};
    for (long a = 0; a <= n_max; ++a)
        for (long b = 0; b <= a; ++b)
            for (long c = 0; c <= b; ++c)
                if (binomial(a, b) * binomial(b, c) != binomial(a, c) * binomial(a - c, b - c))
                    product.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                 " c=" + std::to_string(c));

    identity_report row{identity_id::binomial_row_sum, 0, n_max, {}, true, {}};
    identity_report even{identity_id::binomial_even_sum, 1, n_max, {}, true, {}};
    identity_report mean{identity_id::binomial_mean_sum, 1, n_max, {}, true, {}};
    for (long n = 0; n <= n_max; ++n) {
        integer all = 0, evens = 0, weighted = 0;
        for (long q = 0; q <= n; ++q) {
            all += binomial(n, q);
            weighted += q * binomial(n, q);
        }
        for (long q = 0; q <= n / 2; ++q)
            evens += binomial(n, 2 * q);
        if (all != pow2(static_cast<unsigned long>(n)))
            row.fail("n=" + std::to_string(n));
        if (n >= 1) {
            if (evens != pow2(static_cast<unsigned long>(n - 1)))
                even.fail("n=" + std::to_string(n));
            if (weighted != n * pow2(static_cast<unsigned long>(n - 1)))
                mean.fail("n=" + std::to_string(n));
        }
    }
    return {product, row, even, mean};
}

/// Default rational points for the recurrence check.
inline std::vector<rational> default_identity_points()
{
    return {rational(0), rational(1), rational(2), rational(-1), make_rational(3, 2)};
}

/// Every identity report for n up to max_n (max_n >= 1; the recurrence
/// check always covers at least n = 1).
inline std::vector<identity_report> run_identity_suite(long max_n,
                                                       const std::vector<rational>& xs = default_identity_points())
{
    if (max_n < 1)
        throw error(errc::out_of_range, "identity suite needs max_n >= 1");
    std::vector<identity_report> out;
    out.push_back(alpha_beta_at_two_check(max_n));
    for (const auto& x : xs)
        out.push_back(alpha_recurrence_check(std::max(2L, max_n), x));
    out.push_back(weighted_sums_check(max_n));
    for (auto& r : wellknown_check(max_n))
        out.push_back(std::move(r));
    return out;
}

} // namespace twobridge
