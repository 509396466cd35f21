#include <doctest.h>

#include "contlab/search.hpp"
#include "contlab/zoo.hpp"

#include <set>

using namespace contlab;

namespace {

SearchProblem problem(Slot s1, Slot s2, LawKind kind) {
    SearchProblem p;
    p.slot1 = std::move(s1);
    p.slot2 = std::move(s2);
    p.kind = kind;
    return p;
}

std::vector<Idx> sizes_0_3{0, 1, 2, 3};

} // namespace

TEST_CASE("the law placing exceptions inside a writer is unique") {
    for (Idx e = 1; e <= 2; ++e) {
        SearchVerdict v = search_laws(problem(monadic_slot(mk_exception(e)),
                                              monadic_slot(mk_writer(cyclic_monoid(2))),
                                              LawKind::MndMnd));
        REQUIRE(v.kind == VerdictKind::Complete);
        REQUIRE(v.laws.size() == 1);
        CHECK(v.laws[0].same_tables(exception_law(e, mk_writer(cyclic_monoid(2)))));
        CHECK(beck_oracle(v.laws[0], sizes_0_3).overall() == EqStatus::Verified);
    }
}

TEST_CASE("the law placing a reader outside a writer is unique") {
    SearchVerdict v = search_laws(problem(monadic_slot(mk_writer(cyclic_monoid(2))),
                                          monadic_slot(mk_reader(2)), LawKind::MndMnd));
    REQUIRE(v.kind == VerdictKind::Complete);
    REQUIRE(v.laws.size() == 1);
    CHECK(v.laws[0].same_tables(reader_law(mk_writer(cyclic_monoid(2)), 2)));
    CHECK(beck_oracle(v.laws[0], sizes_0_3).overall() == EqStatus::Verified);
}

TEST_CASE("writer-over-writer laws are the matching pairs, found identically without pruning") {
    Slot s1 = monadic_slot(mk_writer(cyclic_monoid(2)));
    Slot s2 = monadic_slot(mk_writer(cyclic_monoid(2)));
    SearchVerdict v = search_laws(problem(s1, s2, LawKind::MndMnd));
    REQUIRE(v.kind == VerdictKind::Complete);

    // unpruned reference pass over all 256 candidate tables
    std::vector<DistLawData> all = enumerate_all_law_tables(s1, s2, LawKind::MndMnd);
    CHECK(all.size() == 256);
    std::vector<const DistLawData*> brute;
    for (const DistLawData& cand : all)
        if (!check_mnd_mnd(cand).refuted()) brute.push_back(&cand);

    REQUIRE(v.laws.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(v.laws[i].same_tables(*brute[i]));

    // the same count as valid matching pairs, enumerated independently
    Idx pairs = 0;
    std::vector<Idx> a4(4), b4(4);
    for (Nat ar = 0; ar < 16; ++ar) {
        unrank_uniform(ar, 2, a4);
        for (Nat br = 0; br < 16; ++br) {
            unrank_uniform(br, 2, b4);
            MatchingPair mp{cyclic_monoid(2), cyclic_monoid(2),
                            {{a4[0], a4[1]}, {a4[2], a4[3]}},
                            {{b4[0], b4[1]}, {b4[2], b4[3]}}};
            if (matching_pair_valid(mp)) ++pairs;
        }
    }
    CHECK(v.laws.size() == pairs);
    CHECK(pairs == 1);
}

TEST_CASE("the mixed reader-over-writer law is unique at size two") {
    SearchVerdict v = search_laws(problem(directed_slot(mk_writer_directed(2)),
                                          monadic_slot(mk_reader(2)), LawKind::MndDir));
    REQUIRE(v.kind == VerdictKind::Complete);
    REQUIRE(v.laws.size() == 1);
    CHECK(v.laws[0].same_tables(reader_writer_mixed_law(2, 2)));
}

TEST_CASE("mixed laws on the functional-action carriers match the action count") {
    SearchVerdict v = search_laws(problem(directed_slot(mk_reader_directed(cyclic_monoid(2))),
                                          monadic_slot(mk_writer(cyclic_monoid(2))),
                                          LawKind::MndDir));
    REQUIRE(v.kind == VerdictKind::Complete);
    CHECK(v.laws.size() == 1);  // == functional actions on (Z2, Z2), counted in the zoo tests
    FunctionalAction fa = functional_action_from_mixed_law(v.laws[0]);
    CHECK(functional_action_valid(fa));
}

TEST_CASE("directed-over-monadic laws on the writer/reader carriers match the pair count") {
    SearchVerdict v = search_laws(problem(monadic_slot(mk_writer(cyclic_monoid(2))),
                                          directed_slot(mk_reader_directed(cyclic_monoid(2))),
                                          LawKind::DirMnd));
    REQUIRE(v.kind == VerdictKind::Complete);
    CHECK(v.laws.size() == 1);  // == valid matching pairs for (Z2, Z2)
    MatchingPair mp{cyclic_monoid(2), cyclic_monoid(2), {{0, 0}, {1, 1}}, {{0, 1}, {0, 1}}};
    CHECK(v.laws[0].same_tables(dir_mnd_law_from_matching_pair(mp)));
}

TEST_CASE("searches are deterministic") {
    auto run = [] {
        return search_laws(problem(monadic_slot(mk_exception(1)),
                                   monadic_slot(mk_writer(cyclic_monoid(2))), LawKind::MndMnd));
    };
    SearchVerdict a = run();
    SearchVerdict b = run();
    REQUIRE(a.laws.size() == b.laws.size());
    for (std::size_t i = 0; i < a.laws.size(); ++i) CHECK(a.laws[i].same_tables(b.laws[i]));
    CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("no bounded fragment distributes the list over two exceptions") {
    SearchVerdict v = refute_bounded(problem(monadic_slot(mk_list(3)),
                                             monadic_slot(mk_exception(2)), LawKind::MndMnd));
    CHECK(v.kind == VerdictKind::BoundedUnsat);
    CHECK(v.stats.nodes <= 10'000'000);
}

TEST_CASE("a consistent fragment exists over one exception") {
    SearchVerdict v = refute_bounded(problem(monadic_slot(mk_list(3)),
                                             monadic_slot(mk_exception(1)), LawKind::MndMnd));
    REQUIRE(v.kind == VerdictKind::PartialFound);
    REQUIRE(v.laws.size() == 1);
    // the fragment of the sequencing transformation: absorb on any failure
    const DistLawData& law = v.laws[0];
    CHECK(law.u1[0][0] == 0);  // the empty list maps to the ok shape
}

TEST_CASE("at fuel zero the empty constraint set is satisfiable") {
    SearchVerdict v = refute_bounded(problem(monadic_slot(mk_list(0)),
                                             monadic_slot(mk_exception(2)), LawKind::MndMnd));
    CHECK(v.kind == VerdictKind::PartialFound);
}

TEST_CASE("singleton property") {
    CHECK(check_singleton(mk_list(3)));
    CHECK(check_singleton(mk_exception(0)));
    CHECK(check_singleton(mk_exception(2)));
    CHECK(!check_singleton(mk_state(2)));
}

TEST_CASE("constant shapes") {
    CHECK(constant_shapes(mk_exception(2)) == std::vector<Idx>{1, 2});
    CHECK(constant_shapes(mk_writer(cyclic_monoid(3))).empty());
    CHECK(constant_shapes(mk_list(4)) == std::vector<Idx>{0});
}

TEST_CASE("substitution-collapse witnesses") {
    auto li = check_S3(mk_list(3));
    REQUIRE(li.has_value());
    CHECK(li->s == 1);
    CHECK(li->f == std::vector<Idx>{0});
    auto li2 = check_S3(mk_list(3), 2);
    REQUIRE(li2.has_value());
    CHECK(li2->s == 2);
    CHECK(li2->f == std::vector<Idx>{0, 0});

    MonadicContainer st = mk_state(2);
    auto sw = check_S3(st);
    REQUIRE(sw.has_value());
    std::vector<Idx> ident{0, 1};
    CHECK(sw->s == static_cast<Idx>(rank_uniform(ident, 2)));  // the identity shape
    // the projection family from the identity shape is itself a witness
    {
        std::vector<Idx> proj(2, sw->s);
        bool ok = true;
        for (Idx p = 0; p < 2; ++p) {
            std::vector<Idx> sub = proj;
            sub[p] = st.iota;
            if (st.sigma[sw->s][rank_uniform(sub, st.shape_count())] != st.iota) ok = false;
        }
        CHECK(ok);
    }

    auto ww = check_S3(mk_writer(cyclic_monoid(2)));
    REQUIRE(ww.has_value());
    CHECK(ww->s == 0);  // only the unit shape collapses
    CHECK(!check_S3(mk_writer(cyclic_monoid(2)), 2).has_value());
}

TEST_CASE("the too-many-constants certificate") {
    NogoCertificate yes = nogo_certificate(mk_list(3), mk_exception(2));
    CHECK(yes.applicable);
    CHECK(yes.witness.s == 2);
    CHECK(yes.constant_a == 1);
    CHECK(yes.constant_b == 2);

    NogoCertificate one = nogo_certificate(mk_list(3), mk_exception(1));
    CHECK(!one.applicable);
    CHECK(one.reason.find("constant") != std::string::npos);

    NogoCertificate flat = nogo_certificate(mk_writer(cyclic_monoid(2)), mk_exception(2));
    CHECK(!flat.applicable);
    CHECK(flat.reason.find("two distinct positions") != std::string::npos);
}

TEST_CASE("constants absorb substitution") {
    CHECK(check_left_zero(mk_exception(2)).overall() == EqStatus::Verified);
    CHECK(check_left_zero(mk_list(3)).overall() == EqStatus::BoundedVerified);
    EquationReport vac = check_left_zero(mk_writer(cyclic_monoid(2)));
    CHECK(vac.overall() == EqStatus::Verified);
    CHECK(vac.equations[0].checked == 0);
}

TEST_CASE("found laws collapse single-point families when slot1 can collapse substitution") {
    // slot1 = exceptions: singleton unit plus a collapsing witness
    SearchVerdict v = search_laws(problem(monadic_slot(mk_exception(1)),
                                          monadic_slot(mk_writer(cyclic_monoid(2))),
                                          LawKind::MndMnd));
    REQUIRE(v.laws.size() == 1);
    const DistLawData& law = v.laws[0];
    MonadicContainer m1 = mk_exception(1);
    REQUIRE(check_singleton(m1));
    auto wit = check_S3(m1);
    REQUIRE(wit.has_value());
    const Container& c2 = law.c2();
    for (Idx t = 0; t < c2.shape_count(); ++t) {
        for (Idx p = 0; p < m1.base.pos(wit->s); ++p) {
            std::vector<Idx> fam(m1.base.pos(wit->s), law.slot2.mnd.iota);
            fam[p] = t;
            CHECK(law.u1[wit->s][rank_uniform(fam, c2.shape_count())] == t);
        }
    }
}

TEST_CASE("a tiny node budget reports exhaustion") {
    SearchProblem p;
    p.slot1 = monadic_slot(mk_list(3));
    p.slot2 = monadic_slot(mk_exception(2));
    p.kind = LawKind::MndMnd;
    p.budget = 1;
    SearchVerdict v = refute_bounded(p);
    CHECK(v.kind == VerdictKind::BudgetExceeded);
}

TEST_CASE("table suite and monad oracle agree where position routing is nontrivial") {
    // exceptions inside a two-position reader: q ranges over the environment
    {
        Slot s1 = monadic_slot(mk_exception(1));
        Slot s2 = monadic_slot(mk_reader(2));
        std::vector<DistLawData> all = enumerate_all_law_tables(s1, s2, LawKind::MndMnd);
        std::size_t lawful = 0;
        for (const DistLawData& cand : all) {
            bool table_side = !check_mnd_mnd(cand).refuted();
            bool monad_side = !beck_oracle(cand, sizes_0_3).refuted();
            CHECK(table_side == monad_side);
            lawful += table_side;
        }
        CHECK(lawful == 1);  // unique across any second carrier
        SearchVerdict v = search_laws(problem(s1, s2, LawKind::MndMnd));
        CHECK(v.laws.size() == lawful);
        CHECK(v.laws[0].same_tables(exception_law(1, mk_reader(2))));
    }
    // exceptions outside a writer: empty position sets constrain the tables
    {
        Slot s1 = monadic_slot(mk_writer(cyclic_monoid(2)));
        Slot s2 = monadic_slot(mk_exception(1));
        std::vector<DistLawData> all = enumerate_all_law_tables(s1, s2, LawKind::MndMnd);
        std::size_t lawful = 0;
        for (const DistLawData& cand : all) {
            bool table_side = !check_mnd_mnd(cand).refuted();
            bool monad_side = !beck_oracle(cand, sizes_0_3).refuted();
            CHECK(table_side == monad_side);
            lawful += table_side;
        }
        CHECK(lawful == 1);  // values pass out, failures absorb the log
        SearchVerdict v = search_laws(problem(s1, s2, LawKind::MndMnd));
        CHECK(v.laws.size() == lawful);
    }
}
