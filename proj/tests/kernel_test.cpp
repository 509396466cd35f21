#include <doctest.h>

#include "contlab/kernel.hpp"

#include <set>

using namespace contlab;

TEST_CASE("empty domain yields exactly one empty table") {
    auto maps = enumerate_dep_maps(std::vector<Idx>{});
    REQUIRE(maps.size() == 1);
    CHECK(maps[0].entries.empty());
}

TEST_CASE("profile [2,3] enumerates all six tables in lexicographic order") {
    // independent generation by nested loops
    std::vector<std::vector<Idx>> expected;
    for (Idx a = 0; a < 2; ++a)
        for (Idx b = 0; b < 3; ++b) expected.push_back({a, b});

    auto maps = enumerate_dep_maps(std::vector<Idx>{2, 3});
    REQUIRE(maps.size() == expected.size());
    for (std::size_t i = 0; i < maps.size(); ++i) CHECK(maps[i].entries == expected[i]);
}

TEST_CASE("empty codomain under a nonempty domain yields nothing") {
    CHECK(enumerate_dep_maps(std::vector<Idx>{2, 0}).empty());
}

TEST_CASE("rank of the all-zero table is zero") {
    DepTable t{{4, 2, 3}, {0, 0, 0}};
    CHECK(rank_dep_map(t) == 0);
}

TEST_CASE("rank matches the position in the full enumeration") {
    std::vector<Idx> sizes{2, 3};
    auto maps = enumerate_dep_maps(sizes);
    DepTable t{{2, 3}, {1, 2}};
    Nat r = rank_dep_map(t);
    CHECK(r == 5);
    REQUIRE(r < maps.size());
    CHECK(maps[static_cast<std::size_t>(r)] == t);
}

TEST_CASE("unrank inverts rank across the whole [3,3] table space") {
    std::vector<Idx> sizes{3, 3};
    for (const DepTable& t : enumerate_dep_maps(sizes)) {
        DepTable back = unrank_dep_map(sizes, rank_dep_map(t));
        CHECK(back == t);
    }
}

TEST_CASE("rank out of range is an error") {
    std::vector<Idx> sizes{2, 2};
    CHECK_THROWS_AS(unrank_dep_map(sizes, 4), Error);
}

TEST_CASE("enumeration has no duplicates and the product length, across small profiles") {
    std::vector<std::vector<Idx>> profiles{
        {}, {1}, {5}, {0}, {2, 2}, {3, 1, 4}, {2, 3, 2, 3}, {10, 10, 10}, {7, 11, 13},
        {1, 1, 1, 1, 1}, {4, 0, 4}};
    for (const auto& profile : profiles) {
        Nat want = 1;
        for (Idx s : profile) want *= s;
        if (want > 10'000) continue;
        auto maps = enumerate_dep_maps(profile);
        CHECK(maps.size() == want);
        std::set<std::vector<Idx>> seen;
        for (const auto& t : maps) seen.insert(t.entries);
        CHECK(seen.size() == maps.size());
        for (Nat r = 0; r < maps.size(); ++r) {
            CHECK(rank_dep_map(maps[static_cast<std::size_t>(r)]) == r);
            CHECK(unrank_dep_map(profile, r) == maps[static_cast<std::size_t>(r)]);
        }
    }
}

TEST_CASE("uniform ranking agrees with the dependent one") {
    std::vector<Idx> digits{2, 0, 1};
    Nat r = rank_uniform(digits, 3);
    DepTable t{{3, 3, 3}, digits};
    CHECK(r == rank_dep_map(t));
    std::vector<Idx> back(3);
    unrank_uniform(r, 3, back);
    CHECK(back == digits);
}

TEST_CASE("counting overflows are reported") {
    std::vector<Idx> huge(11, 1'000'000);  // 10^66
    CHECK_THROWS_AS(dep_map_count(huge), Error);
    CHECK(sat_pow(1'000'000, 11) == UINT64_MAX);
}
