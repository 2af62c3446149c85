// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "table1.hpp"
#include "twobridge/twobridge.hpp"

using namespace twobridge;

namespace {

constexpr mirror_mode D = mirror_mode::distinct;
constexpr mirror_mode C = mirror_mode::collapsed;

struct outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& what)
    {
        if (pass)
            detail = what;
        pass = false;
    }
};

bool below_bound(const rational& r, long c)
{
    // |r| < 2^{-c/4}  <=>  r^4 2^c < 1
    const rational r2 = r * r;
    return rational(r2 * r2 * rational(pow2(static_cast<unsigned long>(c)))) < 1;
}

outcome table_reproduction()
{
    outcome o;
    for (const auto& r : table1::rows) {
        const std::string at = "c=" + std::to_string(r.c);
        const auto d = tally(r.c, D);
        const auto m = tally(r.c, C);
        const rational gbar = make_rational(r.gbar_num, r.gbar_den);
        const rational gbar_star = make_rational(r.gbar_star_num, r.gbar_star_den);
        if (tk_closed(r.c) != r.tk || tg_closed(r.c) != r.tg || avg_genus(r.c) != gbar)
            o.fail(at + " closed form, mirrors distinct");
        if (tk_mirror_closed(r.c) != r.tk_star || tg_mirror_closed(r.c) != r.tg_star ||
            avg_genus_mirror(r.c) != gbar_star)
            o.fail(at + " closed form, mirrors collapsed");
        if (d.knot_count != r.tk || d.total_genus != r.tg || make_rational(d.total_genus, d.knot_count) != gbar)
            o.fail(at + " enumeration, mirrors distinct");
        if (m.knot_count != r.tk_star || m.total_genus != r.tg_star ||
            make_rational(m.total_genus, m.knot_count) != gbar_star)
            o.fail(at + " enumeration, mirrors collapsed");
    }
    return o;
}

outcome closed_form_sweep()
{
    outcome o;
    for (long c = 3; c <= 22; ++c) {
        const auto d = tally(c, D);
        const auto m = tally(c, C);
        if (d.knot_count != tk_closed(c) || d.total_genus != tg_closed(c))
            o.fail("c=" + std::to_string(c) + " D");
        if (m.knot_count != tk_mirror_closed(c) || m.total_genus != tg_mirror_closed(c))
            o.fail("c=" + std::to_string(c) + " C");
    }
    return o;
}

outcome stratum_sweep()
{
    outcome o;
    for (long c = 3; c <= 18; ++c) {
        const auto t = tally(c, D);
        const long k = c / 2;
        const auto parity = c % 2 == 0 ? crossing_parity::even : crossing_parity::odd;
        for (long l = 0; l <= k - 1; ++l) {
            const long ell = c % 2 == 0 ? 2 * l : 2 * l + 1;
            const auto it = t.by_ell.find(ell);
            const ell_entry e = it == t.by_ell.end() ? ell_entry{} : it->second;
            if (e.count != stratum_closed_A(k, l, parity) || rational(e.genus_sum) != stratum_closed_B(k, l, parity))
                o.fail("c=" + std::to_string(c) + " l=" + std::to_string(l));
        }
        if (tk_from_strata(c) != tk_closed(c) || tg_from_strata(c) != tg_closed(c))
            o.fail("c=" + std::to_string(c) + " sums");
    }
    return o;
}

outcome identity_suite()
{
    outcome o;
    for (const auto& r : run_identity_suite(64))
        if (!r.pass)
            o.fail(to_string(r));
    return o;
}

outcome asymptote_property()
{
    outcome o;
    for (long c = 3; c <= 10000; ++c) {
        const rational r = residual(c), rs = residual_mirror(c);
        if (r != correction_term(c) || rs != correction_term_mirror(c))
            o.fail("c=" + std::to_string(c) + " correction term");
        if (c >= 20 && (!below_bound(r, c) || !below_bound(rs, c)))
            o.fail("c=" + std::to_string(c) + " bound");
    }
    return o;
}

outcome mirror_relations()
{
    outcome o;
    for (long c = 3; c <= 10000; c += 2)
        if (tk_closed(c) != 2 * tk_mirror_closed(c) || tg_closed(c) != 2 * tg_mirror_closed(c))
            o.fail("c=" + std::to_string(c));
    for (long c = 4; c <= 18; c += 2)
        if (2 * tk_mirror_closed(c) - tk_closed(c) != amphichiral_count(c))
            o.fail("c=" + std::to_string(c) + " amphichiral");
    return o;
}

outcome round_trip()
{
    outcome o;
    for (long c = 3; c <= 14; ++c)
        for_each_sequence(c, [&](const compact_sequence& cs) {
            const auto s = sequence_cast<integer>(cs);
            const auto back = even_expansion(cf_value(s));
            if (canonicalize(back, D) != canonicalize(s, D))
                o.fail(to_string(s));
        });
    return o;
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<outcome()>> criteria[] = {
        {"1 table reproduction c=3..15, both modes, closed forms and enumeration", table_reproduction},
        {"2 closed forms equal enumeration c=3..22, both modes", closed_form_sweep},
        {"3 per-stratum A_l, B_l equal enumeration c=3..18", stratum_sweep},
        {"4 identity suite n<=64", identity_suite},
        {"5 residual equals correction term c<=10000, |r|<2^(-c/4) for c>=20", asymptote_property},
        {"6 mirror relations: odd c<=10000, amphichiral count even c<=18", mirror_relations},
        {"7 round trip lands in same class c<=14", round_trip},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", name, secs,
                    o.pass ? "" : ": first failure at ", o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
