#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twobridge {

enum class errc {
    reject_odd_entry,
    reject_zero_entry,
    reject_odd_length,
    degenerate_tail,
    not_a_knot_fraction,
    no_even_expansion,
    out_of_range,
    invalid_stratum,
    inexact_division,
    branch_mismatch,
    non_integer_result,
    parse_error,
};

constexpr std::string_view to_string(errc e) noexcept
{
    switch (e) {
    case errc::reject_odd_entry: return "RejectOddEntry";
    case errc::reject_zero_entry: return "RejectZeroEntry";
    case errc::reject_odd_length: return "RejectOddLength";
    case errc::degenerate_tail: return "DegenerateTail";
    case errc::not_a_knot_fraction: return "NotAKnotFraction";
    case errc::no_even_expansion: return "NoEvenExpansion";
    case errc::out_of_range: return "OutOfRange";
    case errc::invalid_stratum: return "InvalidStratum";
    case errc::inexact_division: return "InexactDivision";
    case errc::branch_mismatch: return "BranchMismatch";
    case errc::non_integer_result: return "NonIntegerResult";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace twobridge
