#include <doctest.h>

#include "contlab/directed.hpp"
#include "contlab/zoo.hpp"

using namespace contlab;

TEST_CASE("one-position carriers are directed with the forced structure") {
    for (Idx k = 1; k <= 3; ++k)
        CHECK(check_directed(mk_writer_directed(k)).overall() == EqStatus::Verified);
}

TEST_CASE("the one-shape carrier over a monoid is directed") {
    CHECK(check_directed(mk_reader_directed(cyclic_monoid(2))).overall() == EqStatus::Verified);
    CHECK(check_directed(mk_reader_directed(cyclic_monoid(3))).overall() == EqStatus::Verified);
}

TEST_CASE("a non-associative position table is refuted at associativity") {
    DirectedContainer d;
    d.base = make_finite_container({"env"}, {2});
    d.o = {0};
    d.down = {{0, 0}};
    d.oplus = {{{1, 1}, {0, 0}}};  // p + q := not p
    validate_directed(d);
    EquationReport rep = check_directed(d);
    const EquationResult* e = rep.find("oplus-assoc");
    REQUIRE(e != nullptr);
    CHECK(e->failure.has_value());
}

TEST_CASE("directed structures on the one-shape carrier are exactly the monoids") {
    for (Idx n = 1; n <= 3; ++n) {
        Idx structures = 0;
        Nat tables = sat_pow(n, static_cast<Nat>(n) * n);
        for (Idx o = 0; o < n; ++o) {
            std::vector<Idx> flat(static_cast<std::size_t>(n) * n);
            for (Nat r = 0; r < tables; ++r) {
                unrank_uniform(r, n, flat);
                DirectedContainer d;
                d.base = make_finite_container({"env"}, {n});
                d.o = {o};
                d.down = {std::vector<Idx>(n, 0)};
                d.oplus.assign(1, std::vector<std::vector<Idx>>(n, std::vector<Idx>(n, 0)));
                for (Idx p = 0; p < n; ++p)
                    for (Idx q = 0; q < n; ++q) d.oplus[0][p][q] = flat[p * n + q];
                if (!check_directed(d).refuted()) ++structures;
            }
        }
        Idx monoids = 0;
        for (Idx unit = 0; unit < n; ++unit) {
            std::vector<Idx> flat(static_cast<std::size_t>(n) * n);
            for (Nat r = 0; r < tables; ++r) {
                unrank_uniform(r, n, flat);
                Monoid mo;
                mo.size = n;
                mo.unit = unit;
                mo.mult.assign(n, std::vector<Idx>(n, 0));
                for (Idx p = 0; p < n; ++p)
                    for (Idx q = 0; q < n; ++q) mo.mult[p][q] = flat[p * n + q];
                if (monoid_laws_hold(mo)) ++monoids;
            }
        }
        CHECK(structures == monoids);
    }
}

TEST_CASE("on the one-position-per-shape carrier exactly one structure exists") {
    for (Idx n = 1; n <= 3; ++n) {
        Idx structures = 0;
        Nat downs = sat_pow(n, n);
        std::vector<Idx> down(n);
        for (Nat r = 0; r < downs; ++r) {
            unrank_uniform(r, n, down);
            DirectedContainer d;
            d.base = mk_writer_directed(n).base;
            d.o.assign(n, 0);
            d.down.assign(n, std::vector<Idx>(1, 0));
            for (Idx s = 0; s < n; ++s) d.down[s][0] = down[s];
            d.oplus.assign(n, {{std::vector<Idx>{0}}});
            if (!check_directed(d).refuted()) ++structures;
        }
        CHECK(structures == 1);
    }
}

TEST_CASE("directed containers need inhabited position sets") {
    DirectedContainer d;
    d.base = make_finite_container({"a", "b"}, {1, 0});
    d.o = {0, 0};
    d.down = {{0}, {}};
    d.oplus = {{{0}}, {}};
    CHECK_THROWS_AS(validate_directed(d), Error);
}
