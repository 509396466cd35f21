#include "contlab/kernel.hpp"

#include <limits>

namespace contlab {

std::optional<Nat> checked_mul(Nat a, Nat b) {
    if (a == 0 || b == 0) return Nat{0};
    if (a > std::numeric_limits<Nat>::max() / b) return std::nullopt;
    return a * b;
}

std::optional<Nat> checked_pow(Nat base, Nat exp) {
    Nat acc = 1;
    for (Nat i = 0; i < exp; ++i) {
        auto m = checked_mul(acc, base);
        if (!m) return std::nullopt;
        acc = *m;
    }
    return acc;
}

Nat sat_add(Nat a, Nat b) {
    Nat r = a + b;
    if (r < a) return std::numeric_limits<Nat>::max();
    return r;
}

Nat sat_mul(Nat a, Nat b) {
    auto m = checked_mul(a, b);
    return m ? *m : std::numeric_limits<Nat>::max();
}

Nat sat_pow(Nat base, Nat exp) {
    auto p = checked_pow(base, exp);
    return p ? *p : std::numeric_limits<Nat>::max();
}

Nat dep_map_count(std::span<const Idx> codomain_sizes) {
    Nat acc = 1;
    for (Idx s : codomain_sizes) {
        auto m = checked_mul(acc, s);
        if (!m) throw Error("dep_map_count: table count overflows 64 bits");
        acc = *m;
    }
    return acc;
}

std::vector<DepTable> enumerate_dep_maps(std::span<const Idx> codomain_sizes) {
    Nat count = dep_map_count(codomain_sizes);
    constexpr Nat kEnumLimit = 20'000'000;
    if (count > kEnumLimit) throw Error("enumerate_dep_maps: table count exceeds enumeration limit");

    std::vector<DepTable> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 0) return out;

    DepTable t;
    t.domain_sizes.assign(codomain_sizes.begin(), codomain_sizes.end());
    t.entries.assign(codomain_sizes.size(), 0);
    for (Nat r = 0; r < count; ++r) {
        out.push_back(t);
        // increment from the least significant (last) index
        for (std::size_t i = t.entries.size(); i-- > 0;) {
            if (++t.entries[i] < t.domain_sizes[i]) break;
            t.entries[i] = 0;
        }
    }
    return out;
}

Nat rank_dep_map(const DepTable& t) {
    if (t.entries.size() != t.domain_sizes.size())
        throw Error("rank_dep_map: entry count does not match domain");
    Nat r = 0;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (t.entries[i] >= t.domain_sizes[i])
            throw Error("rank_dep_map: entry out of bounds at index " + std::to_string(i));
        auto m = checked_mul(r, t.domain_sizes[i]);
        if (!m) throw Error("rank_dep_map: rank overflows 64 bits");
        r = *m + t.entries[i];
    }
    return r;
}

DepTable unrank_dep_map(std::span<const Idx> codomain_sizes, Nat rank) {
    Nat count = dep_map_count(codomain_sizes);
    if (rank >= count) throw Error("unrank_dep_map: rank " + std::to_string(rank) + " out of range");
    DepTable t;
    t.domain_sizes.assign(codomain_sizes.begin(), codomain_sizes.end());
    t.entries.assign(codomain_sizes.size(), 0);
    for (std::size_t i = t.entries.size(); i-- > 0;) {
        t.entries[i] = static_cast<Idx>(rank % t.domain_sizes[i]);
        rank /= t.domain_sizes[i];
    }
    return t;
}

Nat rank_uniform(std::span<const Idx> digits, Idx radix) {
    Nat r = 0;
    for (Idx d : digits) {
        auto m = checked_mul(r, radix);
        if (!m) throw Error("rank_uniform: rank overflows 64 bits");
        r = *m + d;
    }
    return r;
}

void unrank_uniform(Nat rank, Idx radix, std::span<Idx> digits_out) {
    for (std::size_t i = digits_out.size(); i-- > 0;) {
        digits_out[i] = static_cast<Idx>(rank % radix);
        rank /= radix;
    }
}

std::string format_digits(std::span<const Idx> digits) {
    std::string s = "[";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(digits[i]);
    }
    s += "]";
    return s;
}

} // namespace contlab
