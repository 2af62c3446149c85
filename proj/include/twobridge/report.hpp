#pragma once

// Report commands behind the `twobridge` CLI. Each command writes to the
// given streams and returns the process exit status.
//
// Formats: aligned text tables, CSV, and JSON. Rationals are printed as
// "p/q"; in JSON they are {"num": "...", "den": "..."} with decimal strings,
// and big integers are decimal strings.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twobridge/arith.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/enumerate.hpp"
#include "twobridge/error.hpp"
#include "twobridge/formulas.hpp"
#include "twobridge/identities.hpp"
#include "twobridge/knots.hpp"

namespace twobridge::report {

enum class format { table, csv, json };

inline format parse_format(std::string_view s)
{
    if (s == "table")
        return format::table;
    if (s == "csv")
        return format::csv;
    if (s == "json")
        return format::json;
    throw error(errc::parse_error, "format must be table, csv or json, got '" + std::string(s) + "'");
}

inline nlohmann::ordered_json rational_json(const rational& r)
{
    return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

/// Rows of strings rendered as an aligned table or as CSV.
class grid {
public:
    explicit grid(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void write_csv(std::ostream& out) const
    {
        write_csv_row(out, header_);
        for (const auto& r : rows_)
            write_csv_row(out, r);
    }

    void write_table(std::ostream& out) const
    {
        std::vector<std::size_t> width(header_.size(), 0);
        auto widen = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], r[i].size());
        };
        widen(header_);
        for (const auto& r : rows_)
            widen(r);
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i)
                    out << "  ";
                out << std::string(width[i] - r[i].size(), ' ') << r[i];
            }
            out << '\n';
        };
        line(header_);
        std::size_t total = 0;
        for (auto w : width)
            total += w;
        out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
        for (const auto& r : rows_)
            line(r);
    }

private:
    static void write_csv_row(std::ostream& out, const std::vector<std::string>& r)
    {
        for (std::size_t i = 0; i < r.size(); ++i)
            out << (i ? "," : "") << r[i];
        out << '\n';
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// --- formulas ---------------------------------------------------------------

struct formula_row {
    long c;
    integer tk, tg;
    rational gbar;
    integer tk_star, tg_star;
    rational gbar_star;
};

inline formula_row formula_row_for(long c)
{
    return {c, tk_closed(c), tg_closed(c), avg_genus(c),
            tk_mirror_closed(c), tg_mirror_closed(c), avg_genus_mirror(c)};
}

inline const std::vector<std::string>& formula_columns()
{
    static const std::vector<std::string> cols{"c", "TK", "TG", "gbar", "TK_star", "TG_star", "gbar_star"};
    return cols;
}

inline std::vector<std::string> formula_cells(const formula_row& r)
{
    return {std::to_string(r.c), to_string(r.tk), to_string(r.tg), to_string(r.gbar),
            to_string(r.tk_star), to_string(r.tg_star), to_string(r.gbar_star)};
}

inline nlohmann::ordered_json formula_json(const formula_row& r)
{
    return {{"c", r.c},
            {"TK", to_string(r.tk)},
            {"TG", to_string(r.tg)},
            {"gbar", rational_json(r.gbar)},
            {"TK_star", to_string(r.tk_star)},
            {"TG_star", to_string(r.tg_star)},
            {"gbar_star", rational_json(r.gbar_star)}};
}

inline int cmd_formulas(long max_c, format fmt, std::ostream& out)
{
    check_formula_crossings(max_c);
    if (fmt == format::json) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (long c = 3; c <= max_c; ++c)
            rows.push_back(formula_json(formula_row_for(c)));
        out << rows.dump(2) << '\n';
        return 0;
    }
    grid g(formula_columns());
    for (long c = 3; c <= max_c; ++c)
        g.add(formula_cells(formula_row_for(c)));
    fmt == format::csv ? g.write_csv(out) : g.write_table(out);
    return 0;
}

// --- table1 -----------------------------------------------------------------

inline constexpr long default_table1_cutoff = 18;

inline int cmd_table1(long max_c, long cutoff, unsigned threads, format fmt, std::ostream& out)
{
    check_formula_crossings(max_c);
    bool mismatch = false;
    std::vector<std::string> cols = formula_columns();
    for (const char* extra : {"enum_TK", "enum_TG", "enum_TK_star", "enum_TG_star", "match"})
        cols.emplace_back(extra);
    grid g(cols);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (long c = 3; c <= max_c; ++c) {
        const auto row = formula_row_for(c);
        auto cells = formula_cells(row);
        auto js = formula_json(row);
        if (c <= cutoff) {
            const auto d = tally(c, mirror_mode::distinct, threads);
            const auto m = tally(c, mirror_mode::collapsed, threads);
            const bool ok = d.knot_count == row.tk && d.total_genus == row.tg &&
                            m.knot_count == row.tk_star && m.total_genus == row.tg_star;
            mismatch = mismatch || !ok;
            for (const integer* v : {&d.knot_count, &d.total_genus, &m.knot_count, &m.total_genus})
                cells.push_back(to_string(*v));
            cells.emplace_back(ok ? "yes" : "NO");
            js["enum_TK"] = to_string(d.knot_count);
            js["enum_TG"] = to_string(d.total_genus);
            js["enum_TK_star"] = to_string(m.knot_count);
            js["enum_TG_star"] = to_string(m.total_genus);
            js["match"] = ok;
        } else {
            for (int i = 0; i < 5; ++i)
                cells.emplace_back(fmt == format::csv ? "" : "-");
        }
        g.add(std::move(cells));
        rows.push_back(std::move(js));
    }
    if (fmt == format::json)
        out << rows.dump(2) << '\n';
    else if (fmt == format::csv)
        g.write_csv(out);
    else
        g.write_table(out);
    return mismatch ? 1 : 0;
}

// --- enumerate --------------------------------------------------------------

inline std::vector<std::string> tally_columns(const knot_tally& t)
{
    std::vector<std::string> cols{"c", "mode", "knot_count", "total_genus"};
    for (long g = 1; 2 * g <= t.c - 1; ++g)
        cols.push_back("g" + std::to_string(g));
    return cols;
}

inline std::vector<std::string> tally_cells(const knot_tally& t)
{
    std::vector<std::string> cells{std::to_string(t.c), std::string(1, mode_letter(t.mode)),
                                   to_string(t.knot_count), to_string(t.total_genus)};
    for (long g = 1; 2 * g <= t.c - 1; ++g) {
        auto it = t.by_genus.find(g);
        cells.push_back(it == t.by_genus.end() ? "0" : to_string(it->second));
    }
    return cells;
}

inline nlohmann::ordered_json tally_json(const knot_tally& t)
{
    const auto cols = tally_columns(t);
    const auto cells = tally_cells(t);
    nlohmann::ordered_json js;
    js["c"] = t.c;
    js["mode"] = cells[1];
    for (std::size_t i = 2; i < cols.size(); ++i)
        js[cols[i]] = cells[i];
    nlohmann::ordered_json by_ell = nlohmann::ordered_json::object();
    for (const auto& [ell, e] : t.by_ell)
        by_ell[std::to_string(ell)] = {{"count", to_string(e.count)}, {"genus_sum", to_string(e.genus_sum)}};
    js["by_ell"] = by_ell;
    return js;
}

/// Table format streams the canonical classes; CSV/JSON export the tally.
inline int cmd_enumerate(long c, mirror_mode mode, unsigned threads, format fmt, std::ostream& out)
{
    check_crossings(c);
    if (fmt == format::table) {
        out << "c=" << c << " mode=" << mode_letter(mode) << '\n';
        for (const auto& k : knot_classes(c, mode, threads))
            out << to_string(k.canonical) << '\n';
        return 0;
    }
    const auto t = tally(c, mode, threads);
    if (fmt == format::json) {
        out << tally_json(t).dump(2) << '\n';
    } else {
        grid g(tally_columns(t));
        g.add(tally_cells(t));
        g.write_csv(out);
    }
    return 0;
}

// --- knot -------------------------------------------------------------------

inline int cmd_knot(std::string_view text, format fmt, std::ostream& out, std::ostream& err)
{
    std::optional<even_sequence> parsed;
    try {
        parsed = parse_sequence(text);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    const even_sequence& s = *parsed;
    const auto key = stratum_of(s);
    std::string b;
    for (std::size_t i = 0; i < key.b.size(); ++i)
        b += (i ? "," : "") + std::to_string(key.b[i]);
    const std::vector<std::pair<std::string, std::string>> fields{
        {"sequence", to_string(s)},
        {"value", to_string(cf_value(s))},
        {"genus", std::to_string(genus(s))},
        {"sign_changes", std::to_string(sign_changes(s))},
        {"crossing_number", to_string(crossing_number(s))},
        {"canonical_D", to_string(canonicalize(s, mirror_mode::distinct))},
        {"canonical_C", to_string(canonicalize(s, mirror_mode::collapsed))},
        {"amphichiral", is_amphichiral(s) ? "true" : "false"},
        {"stratum_b", b},
    };
    if (fmt == format::json) {
        nlohmann::ordered_json js;
        for (const auto& [k, v] : fields)
            js[k] = v;
        js["value"] = rational_json(cf_value(s));
        js["amphichiral"] = is_amphichiral(s);
        out << js.dump(2) << '\n';
    } else if (fmt == format::csv) {
        std::vector<std::string> head, row;
        for (const auto& [k, v] : fields) {
            head.push_back(k);
            // Sequence-valued fields contain commas.
            row.push_back(v.find(',') == std::string::npos ? v : "\"" + v + "\"");
        }
        grid csv(head);
        csv.add(row);
        csv.write_csv(out);
    } else {
        for (const auto& [k, v] : fields)
            out << k << ": " << v << '\n';
    }
    return 0;
}

// --- verify -----------------------------------------------------------------

/// Exit status bits of cmd_verify.
enum verify_failure : int {
    identities_failed = 1,
    closed_forms_failed = 2,
    strata_failed = 4,
    mirror_failed = 8,
};

struct verify_options {
    long max_c = 14;
    long max_n = 32;
    bool identities_only = false;
    unsigned threads = 1;
};

inline int cmd_verify(const verify_options& opt, std::ostream& out)
{
    int status = 0;
    for (const auto& r : run_identity_suite(opt.max_n)) {
        out << "identity " << to_string(r) << '\n';
        if (!r.pass)
            status |= identities_failed;
    }
    if (opt.identities_only) {
        out << (status == 0 ? "PASS" : "FAIL") << " identities\n";
        return status;
    }
    for (long c = 3; c <= opt.max_c; ++c) {
        const auto d = tally(c, mirror_mode::distinct, opt.threads);
        const auto m = tally(c, mirror_mode::collapsed, opt.threads);
        const bool closed_ok = d.knot_count == tk_closed(c) && d.total_genus == tg_closed(c) &&
                               m.knot_count == tk_mirror_closed(c) && m.total_genus == tg_mirror_closed(c);
        if (!closed_ok)
            status |= closed_forms_failed;

        const long k = c / 2;
        const auto parity = c % 2 == 0 ? crossing_parity::even : crossing_parity::odd;
        bool strata_ok = true;
        for (long l = 0; l <= k - 1; ++l) {
            const long ell = c % 2 == 0 ? 2 * l : 2 * l + 1;
            auto it = d.by_ell.find(ell);
            const ell_entry e = it == d.by_ell.end() ? ell_entry{} : it->second;
            if (e.count != stratum_closed_A(k, l, parity) || rational(e.genus_sum) != stratum_closed_B(k, l, parity))
                strata_ok = false;
        }
        if (tk_from_strata(c) != tk_closed(c) || tg_from_strata(c) != tg_closed(c))
            strata_ok = false;
        if (!strata_ok)
            status |= strata_failed;

        bool mirror_ok;
        if (c % 2 == 1)
            mirror_ok = d.knot_count == 2 * m.knot_count && d.total_genus == 2 * m.total_genus;
        else
            mirror_ok = 2 * m.knot_count - d.knot_count == amphichiral_count(c, opt.threads);
        if (!mirror_ok)
            status |= mirror_failed;

        out << "c=" << c << " closed_forms=" << (closed_ok ? "ok" : "MISMATCH")
            << " strata=" << (strata_ok ? "ok" : "MISMATCH") << " mirror=" << (mirror_ok ? "ok" : "MISMATCH")
            << " TK=" << d.knot_count << " TG=" << d.total_genus << " TK*=" << m.knot_count
            << " TG*=" << m.total_genus << '\n';
    }
    out << (status == 0 ? "PASS" : "FAIL") << " max_c=" << opt.max_c << " max_n=" << opt.max_n
        << " status=" << status << '\n';
    return status;
}

} // namespace twobridge::report
