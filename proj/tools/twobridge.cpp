// twobridge: enumerate 2-bridge knots by crossing number and check the
// closed forms for their counts and genera.

#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "twobridge/report.hpp"

namespace {

unsigned parse_threads(const std::string& s)
{
    if (s == "auto")
        return 0;
    std::size_t used = 0;
    long n = 0;
    try {
        n = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || n < 1)
        throw CLI::ValidationError("--threads", "must be a positive integer or 'auto'");
    return static_cast<unsigned>(n);
}

} // namespace

int main(int argc, char** argv)
{
    using namespace twobridge;
    namespace rep = twobridge::report;

    CLI::App app{"Enumerate 2-bridge knots and verify genus/crossing-number closed forms"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "table";
    std::string threads_text = "1";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--threads", threads_text, "Worker threads (positive integer or 'auto')")
        ->envname("TWOBRIDGE_THREADS");

    long max_c = 15;
    long cutoff = rep::default_table1_cutoff;
    auto* table1 = app.add_subcommand("table1", "Closed forms with enumeration cross-check");
    table1->add_option("--max-c", max_c, "Largest crossing number")->check(CLI::Range(3L, 100000L));
    table1->add_option("--cutoff", cutoff, "Largest crossing number to enumerate");

    long crossings = 3;
    std::string mode_name = "D";
    auto* enumerate = app.add_subcommand("enumerate", "List knot classes or export their tally");
    enumerate->add_option("--crossings,-c", crossings, "Crossing number")
        ->required()
        ->check(CLI::Range(3L, max_enumeration_crossings));
    enumerate->add_option("--mode", mode_name, "D: mirror images distinct, C: collapsed")
        ->check(CLI::IsMember({"D", "C"}));

    long formulas_max_c = 15;
    auto* formulas = app.add_subcommand("formulas", "Closed-form values per crossing number");
    formulas->add_option("--max-c", formulas_max_c, "Largest crossing number")->check(CLI::Range(3L, 100000L));

    rep::verify_options verify_opts;
    auto* verify = app.add_subcommand("verify", "Identity checks and closed-form/enumeration sweep");
    verify->add_option("--max-c", verify_opts.max_c, "Largest crossing number to enumerate")
        ->check(CLI::Range(3L, max_enumeration_crossings));
    verify->add_option("--max-n", verify_opts.max_n, "Largest n for the identity checks")
        ->check(CLI::Range(1L, 4096L));
    verify->add_flag("--identities", verify_opts.identities_only, "Only run the identity checks");

    std::string cf_text;
    auto* knot = app.add_subcommand("knot", "Invariants of one even continued fraction");
    knot->add_option("--cf", cf_text, "Comma-separated even entries, e.g. \"2,-2\"")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const auto fmt = rep::parse_format(format_name);
        const unsigned threads = parse_threads(threads_text);
        if (*table1)
            return rep::cmd_table1(max_c, cutoff, threads, fmt, std::cout);
        if (*enumerate)
            return rep::cmd_enumerate(crossings, parse_mode(mode_name), threads, fmt, std::cout);
        if (*formulas)
            return rep::cmd_formulas(formulas_max_c, fmt, std::cout);
        if (*verify) {
            verify_opts.threads = threads;
            return rep::cmd_verify(verify_opts, std::cout);
        }
        if (*knot)
            return rep::cmd_knot(cf_text, fmt, std::cout, std::cerr);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const twobridge::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
