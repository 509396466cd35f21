#include <doctest.h>

#include "contlab/compose.hpp"
#include "contlab/zoo.hpp"

using namespace contlab;

TEST_CASE("the composite induced by the exceptions-inside law is monadic and compatible") {
    MonadicContainer outer = mk_writer(cyclic_monoid(2));
    MonadicContainer inner = mk_maybe();
    DistLawData law = exception_law(1, outer);
    CompatibleComposite comp = composite_from_law(law);

    EquationReport mrep = check_monadic(comp.mc);
    CHECK(mrep.overall() == EqStatus::Verified);
    CHECK(mrep.passed_count() == 8);

    EquationReport crep = check_compatible(comp, outer, inner);
    REQUIRE(crep.equations.size() == 16);
    CHECK(crep.overall() == EqStatus::Verified);
    CHECK(crep.passed_count() == 16);
}

TEST_CASE("the reader-outside composite matches the broadcast formulas entry for entry") {
    MonadicContainer inner = mk_writer(cyclic_monoid(2));
    MonadicContainer rd = mk_reader(2);
    DistLawData law = reader_law(inner, 2);
    CompatibleComposite comp = composite_from_law(law);
    const CompositeContainer& cc = comp.cc;
    const Container& ci = inner.base;
    Idx A = 2;

    for (Idx cs = 0; cs < cc.base.shape_count(); ++cs) {
        const CompositeShape& x = cc.decode_shape(cs);
        Nat gcount = sat_pow(cc.base.shape_count(), cc.base.pos(cs));
        std::vector<Idx> g(cc.base.pos(cs));
        for (Nat gr = 0; gr < gcount; ++gr) {
            unrank_uniform(gr, cc.base.shape_count(), g);

            // expected substitution: per environment a, substitute the inner
            // shapes read off the chosen composite shapes at (a, -)
            std::vector<Idx> fam_out(A);
            for (Idx a = 0; a < A; ++a) {
                Idx base_shape = x.inner_family[a];
                std::vector<Idx> innerfam(ci.pos(base_shape));
                for (Idx p = 0; p < ci.pos(base_shape); ++p) {
                    Idx chosen = g[cc.encode_pos(cs, a, p)];
                    innerfam[p] = cc.decode_shape(chosen).inner_family[a];
                }
                fam_out[a] = inner.sigma[base_shape][rank_uniform(innerfam, ci.shape_count())];
            }
            Idx expected = cc.encode_shape(0, fam_out);
            CHECK(comp.mc.sigma[cs][gr] == expected);

            // expected routing: pairs (a, p) split through the inner pr at a
            for (Idx flat = 0; flat < cc.base.pos(expected); ++flat) {
                auto [a, p] = cc.decode_pos(expected, flat);
                Idx base_shape = x.inner_family[a];
                std::vector<Idx> innerfam(ci.pos(base_shape));
                for (Idx pp = 0; pp < ci.pos(base_shape); ++pp)
                    innerfam[pp] = cc.decode_shape(g[cc.encode_pos(cs, a, pp)]).inner_family[a];
                auto [p1, p2] = inner.pr[base_shape][rank_uniform(innerfam, ci.shape_count())][p];
                Idx first = cc.encode_pos(cs, a, p1);
                Idx second = cc.encode_pos(g[first], a, p2);
                CHECK(comp.mc.pr[cs][gr][flat] == std::make_pair(first, second));
            }
        }
    }
}

TEST_CASE("one-shape one-position slots compose to the trivial structure") {
    DistLawData law = reader_law(mk_writer(cyclic_monoid(1)), 1);
    CompatibleComposite comp = composite_from_law(law);
    CHECK(comp.mc.shape_count() == 1);
    CHECK(comp.mc.base.pos(0) == 1);
    CHECK(check_monadic(comp.mc).overall() == EqStatus::Verified);
}

TEST_CASE("forcing the inner component to the unit breaks a middle unitary law") {
    // the reader-outside composite keeps every position count equal, so the
    // rewiring below stays table-valid
    MonadicContainer outer = mk_reader(2);
    MonadicContainer inner = mk_writer(cyclic_monoid(2));
    CompatibleComposite good = composite_from_law(reader_law(inner, 2));

    MonadicContainer bent = good.mc;
    const CompositeContainer& cc = good.cc;
    std::vector<Idx> cons(2, inner.iota);
    Idx unit_fill = cc.encode_shape(0, cons);
    for (Idx cs = 0; cs < bent.shape_count(); ++cs) {
        for (Nat gr = 0; gr < bent.sigma[cs].size(); ++gr) {
            bent.sigma[cs][gr] = unit_fill;
            bent.pr[cs][gr].assign(cc.base.pos(unit_fill), {0, 0});
            for (Idx p = 0; p < cc.base.pos(unit_fill); ++p)
                bent.pr[cs][gr][p] = {p, 0};  // positions of cs and of the chosen shape line up
        }
    }
    CompatibleComposite bad = make_compatible_composite(outer, inner, bent);
    EquationReport rep = check_compatible(bad, outer, inner);
    CHECK(rep.refuted());
    CHECK(rep.find("middle-unit-s")->failure.has_value());
}

TEST_CASE("law -> composite -> law returns the original tables") {
    MonadicContainer wz2 = mk_writer(cyclic_monoid(2));
    {
        DistLawData law = exception_law(1, wz2);
        CompatibleComposite comp = composite_from_law(law);
        DistLawData back = law_from_composite(comp, wz2, mk_maybe());
        CHECK(back.same_tables(law));
    }
    {
        DistLawData law = exception_law(2, wz2);
        CompatibleComposite comp = composite_from_law(law);
        DistLawData back = law_from_composite(comp, wz2, mk_exception(2));
        CHECK(back.same_tables(law));
    }
    {
        DistLawData law = reader_law(wz2, 2);
        CompatibleComposite comp = composite_from_law(law);
        DistLawData back = law_from_composite(comp, mk_reader(2), wz2);
        CHECK(back.same_tables(law));
    }
    {
        DistLawData law = reader_law(mk_writer(cyclic_monoid(1)), 1);
        CompatibleComposite comp = composite_from_law(law);
        DistLawData back = law_from_composite(comp, mk_reader(1), mk_writer(cyclic_monoid(1)));
        CHECK(back.same_tables(law));
    }
}

TEST_CASE("rejected inputs") {
    MonadicContainer outer = mk_writer(cyclic_monoid(2));
    DistLawData law = exception_law(1, outer);
    for (auto& row : law.u2[0])
        for (Idx& v : row) v = 1;
    law.v1[0] = {{}, {}};
    law.v2[0] = {{}, {}};
    for (Nat fr = 0; fr < law.u2[0].size(); ++fr) {
        law.v1[0][fr].assign(law.u2[0][fr].size(), {});
        law.v2[0][fr].assign(law.u2[0][fr].size(), {});
    }
    CHECK_THROWS_AS(composite_from_law(law), Error);
}

TEST_CASE("the predicate-universe substitution matches the branch-on-predicate formulas") {
    MonadicContainer m = mk_exception(1);
    CompatibleComposite comp = mk_predicate_universe(m);
    const CompositeContainer& cc = comp.cc;
    const Container& cm = m.base;
    const Idx yes = 0, no = 1;  // predicate values (inner shapes)

    for (Idx cs = 0; cs < cc.base.shape_count(); ++cs) {
        const CompositeShape& x = cc.decode_shape(cs);
        Idx s = x.outer_shape;
        Nat gcount = sat_pow(cc.base.shape_count(), cc.base.pos(cs));
        std::vector<Idx> g(cc.base.pos(cs));
        for (Nat gr = 0; gr < gcount; ++gr) {
            unrank_uniform(gr, cc.base.shape_count(), g);
            // substitute the chosen code where the predicate holds, the unit
            // code where it fails
            std::vector<Idx> fam(cm.pos(s));
            for (Idx p = 0; p < cm.pos(s); ++p)
                fam[p] = x.inner_family[p] == yes
                             ? cc.decode_shape(g[cc.encode_pos(cs, p, 0)]).outer_shape
                             : m.iota;
            Nat famr = rank_uniform(fam, cm.shape_count());
            Idx first = m.sigma[s][famr];
            // the new predicate: pass positions routed through a holding
            // predicate, everything else fails
            std::vector<Idx> pred(cm.pos(first));
            for (Idx p = 0; p < cm.pos(first); ++p) {
                auto [a, b] = m.pr[s][famr][p];
                pred[p] = x.inner_family[a] == yes
                              ? cc.decode_shape(g[cc.encode_pos(cs, a, 0)]).inner_family[b]
                              : no;
            }
            CHECK(comp.mc.sigma[cs][gr] == cc.encode_shape(first, pred));
        }
    }
}
