#include <doctest.h>

#include "contlab/laws.hpp"
#include "contlab/zoo.hpp"

using namespace contlab;

namespace {

std::vector<Idx> sizes_0_3{0, 1, 2, 3};

const char* kMndMndTags[] = {"unit-\xCE\xB9S-s1", "unit-\xCE\xB9S-s2", "unit-\xCE\xB9S-p1",
                             "unit-\xCE\xB9S-p2", "unit-\xCE\xB9T-s1", "unit-\xCE\xB9T-s2",
                             "unit-\xCE\xB9T-p1", "unit-\xCE\xB9T-p2", "mul-S-s1",
                             "mul-S-s2",          "mul-S-p1",          "mul-S-p21",
                             "mul-S-p22",         "mul-T-s1",          "mul-T-s2",
                             "mul-T-p1",          "mul-T-p21",         "mul-T-p22"};

} // namespace

TEST_CASE("the exceptions-inside law passes all 18 equations with their tags") {
    DistLawData law = exception_law(1, mk_writer(cyclic_monoid(2)));
    EquationReport rep = check_mnd_mnd(law);
    REQUIRE(rep.equations.size() == 18);
    for (std::size_t i = 0; i < 18; ++i) {
        CHECK(rep.equations[i].tag == kMndMndTags[i]);
        CHECK(!rep.equations[i].failure);
        CHECK(rep.equations[i].status() == EqStatus::Verified);
    }
    CHECK(check_mnd_mnd(exception_law(2, mk_writer(cyclic_monoid(2)))).overall() ==
          EqStatus::Verified);
    CHECK(check_mnd_mnd(exception_law(1, mk_state(2))).overall() == EqStatus::Verified);
}

TEST_CASE("the reader-outside law passes all 18 equations") {
    CHECK(check_mnd_mnd(reader_law(mk_writer(cyclic_monoid(2)), 2)).overall() == EqStatus::Verified);
    CHECK(check_mnd_mnd(reader_law(mk_exception(1), 3)).overall() == EqStatus::Verified);
}

TEST_CASE("perturbing the exceptions-inside law is caught at a unit equation") {
    DistLawData law = exception_law(1, mk_writer(cyclic_monoid(2)));
    // u2 on the value branch rewired to the absorbing shape
    for (auto& row : law.u2[0])
        for (Idx& v : row) v = 1;
    law.v1[0] = {{}, {}};  // rows follow the u2 values
    law.v2[0] = {{}, {}};
    for (Nat fr = 0; fr < law.u2[0].size(); ++fr) {
        law.v1[0][fr].assign(law.u2[0][fr].size(), {});
        law.v2[0][fr].assign(law.u2[0][fr].size(), {});
    }
    EquationReport rep = check_mnd_mnd(law);
    const EquationResult* e = rep.find("unit-\xCE\xB9S-s2");
    REQUIRE(e != nullptr);
    CHECK(e->failure.has_value());
    CHECK(rep.overall() == EqStatus::Refuted);
}

TEST_CASE("the mixed reader-over-writer law passes all 13 equations") {
    DistLawData law = reader_writer_mixed_law(2, 2);
    EquationReport rep = check_mnd_dir(law);
    REQUIRE(rep.equations.size() == 13);
    CHECK(rep.overall() == EqStatus::Verified);
    CHECK(rep.equations[0].tag == "unit-oS-s");
    CHECK(rep.equations[12].tag == "mul-T-p22");

    SUBCASE("one-element carriers force everything") {
        CHECK(check_mnd_dir(reader_writer_mixed_law(1, 1)).overall() == EqStatus::Verified);
    }

    SUBCASE("constant v2 instead of the environment is refuted") {
        DistLawData bad = reader_writer_mixed_law(2, 2);
        for (Idx a = 0; a < 2; ++a)
            for (Nat fr = 0; fr < bad.v2[a].size(); ++fr)
                for (auto& row : bad.v2[a][fr]) row.assign(1, 0);
        EquationReport brep = check_mnd_dir(bad);
        CHECK(brep.overall() == EqStatus::Refuted);
        const EquationResult* e = brep.find("unit-oS-p2");
        REQUIRE(e != nullptr);
        CHECK(e->failure.has_value());
    }
}

TEST_CASE("a matching-pair law between a writer and a reader passes all 16 equations") {
    MatchingPair mp;
    mp.a = cyclic_monoid(2);
    mp.b = cyclic_monoid(2);
    mp.alpha = {{0, 0}, {1, 1}};  // project onto the first monoid
    mp.beta = {{0, 1}, {0, 1}};   // project onto the second
    REQUIRE(matching_pair_valid(mp));
    DistLawData law = dir_mnd_law_from_matching_pair(mp);
    EquationReport rep = check_dir_mnd(law);
    REQUIRE(rep.equations.size() == 16);
    CHECK(rep.overall() == EqStatus::Verified);

    SUBCASE("one-element carriers are trivially lawful") {
        MatchingPair triv;
        triv.a = cyclic_monoid(1);
        triv.b = cyclic_monoid(1);
        triv.alpha = {{0}};
        triv.beta = {{0}};
        CHECK(check_dir_mnd(dir_mnd_law_from_matching_pair(triv)).overall() == EqStatus::Verified);
    }

    SUBCASE("transposing the u2 rows breaks the substitution side") {
        DistLawData bad = dir_mnd_law_from_matching_pair(mp);
        std::swap(bad.u2[0][0], bad.u2[1][0]);
        std::swap(bad.v1[0][0], bad.v1[1][0]);
        std::swap(bad.v2[0][0], bad.v2[1][0]);
        EquationReport brep = check_dir_mnd(bad);
        CHECK(brep.overall() == EqStatus::Refuted);
    }
}

TEST_CASE("gamma reshuffles the top two layers as the tables dictate") {
    MonadicContainer writer = mk_writer(cyclic_monoid(2));
    DistLawData law = exception_law(1, writer);
    // an ok-shape element holding a writer element: gamma swaps the layers
    Elem e{0, {Elem{1, {leaf(7)}}}};
    Elem out = law_gamma(law, e);
    CHECK(out.head == 1);                 // the writer shape passes through
    REQUIRE(out.kids.size() == 1);
    CHECK(out.kids[0].head == 0);         // ok-shape inside
    REQUIRE(out.kids[0].kids.size() == 1);
    CHECK(out.kids[0].kids[0] == leaf(7));

    // the absorbing shape erases the writer layer down to the outer unit
    Elem err{1, {}};
    Elem out2 = law_gamma(law, err);
    CHECK(out2.head == writer.iota);
    REQUIRE(out2.kids.size() == 1);
    CHECK(out2.kids[0].head == 1);

    SUBCASE("gamma is natural in the underlying set") {
        const Container& ci = law.c1();
        const Container& co = law.c2();
        for (Idx nx = 0; nx <= 2; ++nx)
            for (Idx ny = 1; ny <= 2; ++ny) {
                std::vector<Idx> h(nx);
                for (Nat hr = 0; hr < sat_pow(ny, nx); ++hr) {
                    unrank_uniform(hr, ny, h);
                    auto hx = [&](const Elem& k) { return leaf(h[k.head]); };
                    for (const Elem& el : enumerate_ext(ci, enumerate_ext(co, enumerate_atoms(nx)))) {
                        Elem lhs = law_gamma(law, map_at_depth(el, 2, hx));
                        Elem rhs = map_at_depth(law_gamma(law, el), 2, hx);
                        CHECK(lhs == rhs);
                    }
                }
            }
    }
}

TEST_CASE("the interpreted-monad oracle accepts the stock laws") {
    CHECK(beck_oracle(exception_law(1, mk_writer(cyclic_monoid(2))), sizes_0_3).overall() ==
          EqStatus::Verified);
    CHECK(beck_oracle(reader_law(mk_writer(cyclic_monoid(2)), 2), sizes_0_3).overall() ==
          EqStatus::Verified);
}

TEST_CASE("the interpreted-monad oracle refutes the perturbed law at a unit triangle") {
    DistLawData law = exception_law(1, mk_writer(cyclic_monoid(2)));
    for (auto& row : law.u2[0])
        for (Idx& v : row) v = 1;
    law.v1[0] = {{}, {}};
    law.v2[0] = {{}, {}};
    for (Nat fr = 0; fr < law.u2[0].size(); ++fr) {
        law.v1[0][fr].assign(law.u2[0][fr].size(), {});
        law.v2[0][fr].assign(law.u2[0][fr].size(), {});
    }
    EquationReport rep = beck_oracle(law, sizes_0_3);
    CHECK(rep.overall() == EqStatus::Refuted);
    bool unit_failed = rep.find("unit-inner")->failure.has_value() ||
                       rep.find("unit-outer")->failure.has_value();
    CHECK(unit_failed);
}

TEST_CASE("table bounds are validated") {
    DistLawData law = exception_law(1, mk_writer(cyclic_monoid(2)));
    law.v2[0][1][0][0] = 9;
    CHECK_THROWS_AS(validate_law(law), Error);
}

TEST_CASE("suite results are identical under parallel sweeps") {
    DistLawData law = exception_law(2, mk_writer(cyclic_monoid(2)));
    EquationReport a = check_mnd_mnd(law, ExecPolicy::serial());
    EquationReport b = check_mnd_mnd(law, ExecPolicy::with_jobs(4));
    REQUIRE(a.equations.size() == b.equations.size());
    for (std::size_t i = 0; i < a.equations.size(); ++i) {
        CHECK(a.equations[i].checked == b.equations[i].checked);
        CHECK(a.equations[i].deferred == b.equations[i].deferred);
    }
}

TEST_CASE("when every shape equation holds no position equation is blocked") {
    for (const DistLawData& law :
         {exception_law(2, mk_writer(cyclic_monoid(2))), reader_law(mk_exception(1), 2),
          reader_law(mk_state(2), 2)}) {
        EquationReport rep = check_mnd_mnd(law);
        REQUIRE(!rep.refuted());
        for (const auto& e : rep.equations) CHECK(e.blocked == 0);
    }
    EquationReport mixed = check_mnd_dir(reader_writer_mixed_law(2, 3));
    REQUIRE(!mixed.refuted());
    for (const auto& e : mixed.equations) CHECK(e.blocked == 0);
}

TEST_CASE("the root-position equation of mixed laws is reported as determining") {
    EquationReport rep = check_mnd_dir(reader_writer_mixed_law(2, 2));
    const EquationResult* e = rep.find("unit-oS-s");
    REQUIRE(e != nullptr);
    CHECK(e->note == "determining");
}

TEST_CASE("the interpreted-monad oracle accepts exceptions inside the state carrier") {
    std::vector<Idx> small{0, 1, 2};
    CHECK(beck_oracle(exception_law(1, mk_state(2)), small).overall() == EqStatus::Verified);
}
