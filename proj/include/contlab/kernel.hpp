#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace contlab {

using Idx = std::uint32_t;
using Nat = std::uint64_t;

// Sentinel for "no value" (out-of-fuel table entries, unassigned cells).
inline constexpr Idx kNoIdx = static_cast<Idx>(-1);

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Multiplication/power with overflow detection.
std::optional<Nat> checked_mul(Nat a, Nat b);
std::optional<Nat> checked_pow(Nat base, Nat exp);

// Saturating arithmetic for instance counters.
Nat sat_add(Nat a, Nat b);
Nat sat_mul(Nat a, Nat b);
Nat sat_pow(Nat base, Nat exp);

// A tabulated dependent function: entry i ranges over 0..domain_sizes[i]-1.
struct DepTable {
    std::vector<Idx> domain_sizes;
    std::vector<Idx> entries;

    bool operator==(const DepTable&) const = default;
};

// All dependent tables for the given per-index codomain sizes, in
// lexicographic order with index 0 most significant. An empty domain yields
// exactly one empty table; a zero codomain under a nonempty domain yields
// nothing.
std::vector<DepTable> enumerate_dep_maps(std::span<const Idx> codomain_sizes);

// Lexicographic rank of a table among enumerate_dep_maps output, and back.
Nat rank_dep_map(const DepTable& t);
DepTable unrank_dep_map(std::span<const Idx> codomain_sizes, Nat rank);

// Uniform-radix variants used for shape families (every entry has the same
// codomain). Index 0 most significant, matching the dependent versions.
Nat rank_uniform(std::span<const Idx> digits, Idx radix);
void unrank_uniform(Nat rank, Idx radix, std::span<Idx> digits_out);

// Number of tables for the given profile; Error on overflow.
Nat dep_map_count(std::span<const Idx> codomain_sizes);

std::string format_digits(std::span<const Idx> digits);

} // namespace contlab
