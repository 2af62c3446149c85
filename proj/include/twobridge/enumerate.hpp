#pragma once

// Brute-force enumeration of 2-bridge knots by crossing number.
//
// Sequences are generated stratum by stratum: sign changes ell ascending
// (same parity as c), then half-length m ascending, then magnitude
// compositions b lexicographically, then sign patterns lexicographically.
// Every orbit lies inside one (ell, m) unit, so units dedupe independently
// and their tallies simply add.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "twobridge/arith.hpp"
#include "twobridge/combinatorics.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/error.hpp"
#include "twobridge/knots.hpp"

namespace twobridge {

/// Entries are packed into signed bytes for dedupe keys.
inline constexpr long max_enumeration_crossings = 60;

struct stratum_unit {
    long ell;
    long m;
};

inline void check_crossings(long c)
{
    if (c < 3)
        throw error(errc::out_of_range, "crossing number must be >= 3");
    if (c > max_enumeration_crossings)
        throw error(errc::out_of_range, "enumeration supports c <= " +
                                            std::to_string(max_enumeration_crossings));
}

/// The nonempty (ell, m) units for crossing number c, in generation order.
inline std::vector<stratum_unit> stratum_units(long c)
{
    check_crossings(c);
    std::vector<stratum_unit> out;
    for (long ell = c % 2; ell <= c - 2; ell += 2) {
        const long magnitude = (c + ell) / 2;
        for (long m = 1; 2 * m <= magnitude; ++m)
            if (ell <= 2 * m - 1)
                out.push_back({ell, m});
    }
    return out;
}

/// Visits every sequence of one unit, as a compact_sequence.
template <class Visitor>
void for_each_sequence_in(long c, stratum_unit unit, Visitor&& visit)
{
    const long length = 2 * unit.m;
    const auto patterns = sign_patterns(length, unit.ell);
    std::vector<int> entries(static_cast<std::size_t>(length));
    for_each_composition((c + unit.ell) / 2, length, [&](const std::vector<long>& b) {
        for (const auto& p : patterns) {
            for (std::size_t i = 0; i < entries.size(); ++i)
                entries[i] = static_cast<int>(2 * b[i]) * p[i];
            visit(compact_sequence::from_trusted(entries));
        }
    });
}

/// Visits every valid even sequence with crossing number c exactly once.
template <class Visitor>
void for_each_sequence(long c, Visitor&& visit)
{
    for (const auto& unit : stratum_units(c))
        for_each_sequence_in(c, unit, visit);
}

inline std::vector<compact_sequence> enumerate_sequences(long c)
{
    std::vector<compact_sequence> out;
    for_each_sequence(c, [&](const compact_sequence& s) { out.push_back(s); });
    return out;
}

// --- Tallies ---------------------------------------------------------------

struct ell_entry {
    integer count = 0;
    integer genus_sum = 0;

    friend bool operator==(const ell_entry&, const ell_entry&) = default;
};

struct knot_tally {
    long c = 0;
    mirror_mode mode = mirror_mode::distinct;
    integer knot_count = 0;
    integer total_genus = 0;
    std::map<long, integer> by_genus;
    std::map<long, ell_entry> by_ell;

    friend bool operator==(const knot_tally&, const knot_tally&) = default;

    knot_tally& operator+=(const knot_tally& o)
    {
        knot_count += o.knot_count;
        total_genus += o.total_genus;
        for (const auto& [g, n] : o.by_genus)
            by_genus[g] += n;
        for (const auto& [ell, e] : o.by_ell) {
            by_ell[ell].count += e.count;
            by_ell[ell].genus_sum += e.genus_sum;
        }
        return *this;
    }
};

namespace detail {

inline std::string pack_key(const compact_sequence& s)
{
    std::string key(s.size(), '\0');
    for (std::size_t i = 0; i < s.size(); ++i)
        key[i] = static_cast<char>(static_cast<std::int8_t>(s[i]));
    return key;
}

inline compact_sequence unpack_key(const std::string& key)
{
    std::vector<int> v(key.size());
    for (std::size_t i = 0; i < key.size(); ++i)
        v[i] = static_cast<std::int8_t>(key[i]);
    return compact_sequence::from_trusted(std::move(v));
}

inline std::unordered_set<std::string> unit_classes(long c, stratum_unit unit, mirror_mode mode)
{
    std::unordered_set<std::string> keys;
    for_each_sequence_in(c, unit, [&](const compact_sequence& s) {
        keys.insert(pack_key(canonicalize(s, mode).canonical));
    });
    return keys;
}

inline unsigned resolve_threads(unsigned threads, std::size_t work)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work, 1)));
}

// Runs job(i) for i in [0, n) on up to `threads` workers; job writes only its own slot.
template <class Job>
void run_units(std::size_t n, unsigned threads, Job&& job)
{
    threads = resolve_threads(threads, n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                job(i);
        });
}

} // namespace detail

/// Tally of the knot classes in one (ell, m) unit.
inline knot_tally tally_unit(long c, stratum_unit unit, mirror_mode mode)
{
    const integer count = static_cast<unsigned long>(detail::unit_classes(c, unit, mode).size());
    knot_tally t;
    t.c = c;
    t.mode = mode;
    if (count == 0)
        return t;
    t.knot_count = count;
    t.total_genus = count * unit.m;
    t.by_genus[unit.m] = count;
    t.by_ell[unit.ell] = {count, count * unit.m};
    return t;
}

/// Deduplicated tally for crossing number c. threads == 0 means hardware
/// concurrency; the result does not depend on the thread count.
inline knot_tally tally(long c, mirror_mode mode, unsigned threads = 1)
{
    const auto units = stratum_units(c);
    std::vector<knot_tally> parts(units.size());
    detail::run_units(units.size(), threads,
                      [&](std::size_t i) { parts[i] = tally_unit(c, units[i], mode); });
    knot_tally total;
    total.c = c;
    total.mode = mode;
    for (const auto& p : parts)
        total += p;
    return total;
}

/// All canonical classes for crossing number c, sorted.
inline std::vector<basic_knot_class<int>> knot_classes(long c, mirror_mode mode, unsigned threads = 1)
{
    const auto units = stratum_units(c);
    std::vector<std::vector<std::string>> parts(units.size());
    detail::run_units(units.size(), threads, [&](std::size_t i) {
        auto keys = detail::unit_classes(c, units[i], mode);
        parts[i].assign(keys.begin(), keys.end());
    });
    std::vector<basic_knot_class<int>> out;
    for (const auto& p : parts)
        for (const auto& key : p)
            out.push_back({detail::unpack_key(key), mode});
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of amphichiral knots with crossing number c.
inline integer amphichiral_count(long c, unsigned threads = 1)
{
    const auto units = stratum_units(c);
    std::vector<unsigned long> parts(units.size(), 0);
    detail::run_units(units.size(), threads, [&](std::size_t i) {
        for (const auto& key : detail::unit_classes(c, units[i], mirror_mode::distinct)) {
            if (is_amphichiral(detail::unpack_key(key)))
                ++parts[i];
        }
    });
    integer total = 0;
    for (unsigned long n : parts)
        total += n;
    return total;
}

} // namespace twobridge
