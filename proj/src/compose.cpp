#include "contlab/compose.hpp"

namespace contlab {

namespace {

// Fills sigma/pr rows of the composite structure from the law tables via the
// direct construction: substitution first combines along the outer carrier
// through u1/u2, then along the inner carrier through v1/v2.
struct CompositeBuilder {
    const DistLawData& law;
    const MonadicContainer& inner;  // slot1
    const MonadicContainer& outer;  // slot2
    const CompositeContainer& cc;
    Idx m;  // composite shape count

    Idx sect_rank(const std::vector<Idx>& g, const CompositeShape& x, Idx p) const {
        // rank of q |-> outer shape of g(p, q), radix |outer shapes|
        const Container& ci = inner.base;
        std::vector<Idx> digits(ci.pos(x.inner_family[p]));
        for (Idx q = 0; q < digits.size(); ++q)
            digits[q] = cc.decode_shape(g[x.pos_offsets[p] + q]).outer_shape;
        return static_cast<Idx>(rank_uniform(digits, outer.base.shape_count()));
    }

    // sigma((s,f), g) and, when wanted, pr rows. Returns kNoIdx when any
    // table entry lies beyond fuel.
    Idx build_row(Idx cs, const std::vector<Idx>& g, std::vector<std::pair<Idx, Idx>>* pr_out) const {
        const CompositeShape& x = cc.decode_shape(cs);
        const Container& co = outer.base;
        const Container& ci = inner.base;
        Idx s = x.outer_shape;

        // outer family p |-> u1 (f p) (g1 . (p,-))
        std::vector<Idx> fam_u(co.pos(s));
        for (Idx p = 0; p < co.pos(s); ++p) {
            Idx v = law.u1[x.inner_family[p]][sect_rank(g, x, p)];
            if (v == kNoIdx) return kNoIdx;
            fam_u[p] = v;
        }
        Nat fam_u_rank = rank_uniform(fam_u, co.shape_count());
        Idx shape1 = outer.sigma[s][fam_u_rank];
        if (shape1 == kNoIdx) return kNoIdx;

        // per outer position of shape1: the inner shape of the result
        std::vector<Idx> fill(co.pos(shape1));
        std::vector<Idx> hold_a(co.pos(shape1));
        std::vector<Nat> hold_fam_in(co.pos(shape1));
        for (Idx p = 0; p < co.pos(shape1); ++p) {
            auto [p1, p2] = outer.pr[s][fam_u_rank][p];
            Idx a_shape = x.inner_family[p1];
            Idx sect = sect_rank(g, x, p1);
            Idx A = law.u2[a_shape][sect][p2];
            if (A == kNoIdx) return kNoIdx;
            std::vector<Idx> fam_in(ci.pos(A));
            for (Idx r = 0; r < ci.pos(A); ++r) {
                Idx xv = law.v1[a_shape][sect][p2][r];
                Idx yv = law.v2[a_shape][sect][p2][r];
                if (xv == kNoIdx || yv == kNoIdx) return kNoIdx;
                Idx gshape = g[x.pos_offsets[p1] + xv];
                fam_in[r] = cc.decode_shape(gshape).inner_family[yv];
            }
            Nat fam_in_rank = rank_uniform(fam_in, ci.shape_count());
            Idx fv = inner.sigma[A][fam_in_rank];
            if (fv == kNoIdx) return kNoIdx;
            fill[p] = fv;
            hold_a[p] = A;
            hold_fam_in[p] = fam_in_rank;
        }
        Idx result = cc.encode_shape(shape1, fill);

        if (pr_out) {
            const CompositeShape& rx = cc.decode_shape(result);
            pr_out->resize(rx.pos_total);
            for (Idx flat = 0; flat < rx.pos_total; ++flat) {
                auto [pp, qp] = cc.decode_pos(result, flat);
                auto [p1, p2] = outer.pr[s][fam_u_rank][pp];
                Idx a_shape = x.inner_family[p1];
                Idx sect = sect_rank(g, x, p1);
                auto [q1, q2] = inner.pr[hold_a[pp]][hold_fam_in[pp]][qp];
                Idx xv = law.v1[a_shape][sect][p2][q1];
                Idx yv = law.v2[a_shape][sect][p2][q1];
                Idx first = cc.encode_pos(cs, p1, xv);
                Idx gshape = g[x.pos_offsets[p1] + xv];
                Idx second = cc.encode_pos(gshape, yv, q2);
                (*pr_out)[flat] = {first, second};
            }
        }
        return result;
    }
};

std::string comp_label(const CompositeContainer& cc, Idx cs) {
    return cc.base.label(cs);
}

} // namespace

CompatibleComposite composite_from_law(const DistLawData& law, const ExecPolicy& policy) {
    if (law.kind != LawKind::MndMnd) throw Error("composite_from_law: mnd-mnd law required");
    validate_law(law);
    EquationReport rep = check_law(law, policy);
    if (rep.refuted()) throw Error("composite_from_law: the law is refuted by its equation suite");

    CompatibleComposite comp;
    comp.provenance = CompatibleComposite::Provenance::FromLaw;
    comp.cc = compose_containers(law.c2(), law.c1());
    const CompositeContainer& cc = comp.cc;
    Idx m = cc.base.shape_count();

    const MonadicContainer& inner = law.slot1.mnd;
    const MonadicContainer& outer = law.slot2.mnd;
    CompositeBuilder builder{law, inner, outer, cc, m};

    MonadicContainer mc;
    mc.base = cc.base;
    if (outer.iota == kNoIdx || inner.iota == kNoIdx) {
        mc.iota = kNoIdx;
    } else {
        std::vector<Idx> unit_fam(outer.base.pos(outer.iota), inner.iota);
        mc.iota = cc.encode_shape(outer.iota, unit_fam);
    }

    mc.sigma.resize(m);
    mc.pr.resize(m);
    for (Idx cs = 0; cs < m; ++cs) {
        Nat fams = sat_pow(m, cc.base.pos(cs));
        if (fams > 5'000'000) throw Error("composite_from_law: substitution table too large");
        mc.sigma[cs].assign(fams, kNoIdx);
        mc.pr[cs].resize(fams);
        std::vector<Idx> g(cc.base.pos(cs), 0);
        for (Nat r = 0; r < fams; ++r) {
            std::vector<std::pair<Idx, Idx>> row;
            Idx out = builder.build_row(cs, g, &row);
            mc.sigma[cs][r] = out;
            if (out != kNoIdx) mc.pr[cs][r] = std::move(row);
            for (std::size_t i = g.size(); i-- > 0;) {
                if (++g[i] < m) break;
                g[i] = 0;
            }
        }
    }
    comp.mc = std::move(mc);
    validate_monadic(comp.mc);
    return comp;
}

CompatibleComposite make_compatible_composite(const MonadicContainer& outer,
                                              const MonadicContainer& inner,
                                              MonadicContainer structure) {
    CompatibleComposite comp;
    comp.cc = compose_containers(outer.base, inner.base);
    if (!structure.base.same_profile(comp.cc.base))
        throw Error("composite: structure does not live on the composite container");
    structure.base = comp.cc.base;
    comp.mc = std::move(structure);
    validate_monadic(comp.mc);
    if (outer.iota != kNoIdx && inner.iota != kNoIdx) {
        std::vector<Idx> unit_fam(outer.base.pos(outer.iota), inner.iota);
        Idx expected = comp.cc.encode_shape(outer.iota, unit_fam);
        if (comp.mc.iota != expected)
            throw Error("composite: unit shape must pair the outer unit with constantly the inner unit");
    }
    return comp;
}

EquationReport check_compatible(const CompatibleComposite& comp, const MonadicContainer& outer,
                                const MonadicContainer& inner, const ExecPolicy& policy) {
    const CompositeContainer& cc = comp.cc;
    if (!cc.outer.same_profile(outer.base) || !cc.inner.same_profile(inner.base))
        throw Error("check_compatible: composite was built over different carriers");
    {
        CompositeContainer fresh = compose_containers(outer.base, inner.base);
        if (!fresh.base.same_profile(comp.mc.base))
            throw Error("check_compatible: structure does not live on the composite of the carriers");
    }
    const MonadicContainer& mc = comp.mc;
    const Container& cbase = mc.base;
    const Container& co = outer.base;
    const Container& ci = inner.base;
    Idx m = cbase.shape_count();

    // unit shape invariant
    if (outer.iota != kNoIdx && inner.iota != kNoIdx) {
        std::vector<Idx> unit_fam(co.pos(outer.iota), inner.iota);
        if (mc.iota != cc.encode_shape(outer.iota, unit_fam))
            throw Error("check_compatible: composite unit shape is not (outer unit, const inner unit)");
    }

    EquationReport rep = check_monadic(mc, policy);

    auto outcome_of = [](auto&& fn, const std::function<std::string()>& bindings) {
        BlockOutcome o;
        try {
            if (fn()) {
                o.checked = 1;
            } else {
                o.checked = 1;
                o.failure = Counterexample{bindings(), "", 0, 0};
            }
        } catch (const BlockedSignal&) {
            o.blocked = 1;
        } catch (const DeferredSignal&) {
            o.deferred = 1;
        }
        return o;
    };

    // embedding of the outer carrier: s |-> (s, const inner unit)
    auto outer_blocks = shape_family_blocks(co, co.shape_count());
    struct OuterFrame {
        Idx s;
        Fam fo;
        Idx lhs;      // (sigma_out(s, fo), const iota_in)
        Idx x0;       // (s, const iota_in)
        Fam gfam;
    };
    auto outer_frame = [&](const LawBlock& blk) {
        OuterFrame fr;
        fr.s = blk.s;
        fr.fo = fam_from_rank(co, blk.s, blk.frank, co.shape_count());
        Idx ssf = sigma_at(outer, fr.s, fr.fo);
        std::vector<Idx> cons1(co.pos(ssf), iota_at(inner));
        fr.lhs = cc.encode_shape(ssf, cons1);
        std::vector<Idx> cons0(co.pos(fr.s), iota_at(inner));
        fr.x0 = cc.encode_shape(fr.s, cons0);
        fr.gfam = Fam{&cbase, fr.x0, std::vector<Idx>(cbase.pos(fr.x0), 0)};
        for (Idx j = 0; j < cbase.pos(fr.x0); ++j) {
            auto [po, qi] = cc.decode_pos(fr.x0, j);
            (void)qi;
            std::vector<Idx> cons(co.pos(fr.fo.vals[po]), iota_at(inner));
            fr.gfam.vals[j] = cc.encode_shape(fr.fo.vals[po], cons);
        }
        return fr;
    };
    auto outer_binding = [](const OuterFrame& fr) {
        return "s=" + std::to_string(fr.s) + " f=" + format_digits(fr.fo.vals);
    };

    rep.equations.push_back(sweep_blocks(
        "morph-outer-s", outer_blocks.size(),
        [&](Nat b) {
            LawBlock blk{outer_blocks[static_cast<std::size_t>(b)].first,
                         outer_blocks[static_cast<std::size_t>(b)].second};
            OuterFrame fr;
            return outcome_of(
                [&] {
                    fr = outer_frame(blk);
                    return sigma_at(mc, fr.x0, fr.gfam) == fr.lhs;
                },
                [&] { return outer_binding(fr); });
        },
        policy));

    auto outer_pos_eq = [&](int which) {
        return [&, which](Nat b) {
            LawBlock blk{outer_blocks[static_cast<std::size_t>(b)].first,
                         outer_blocks[static_cast<std::size_t>(b)].second};
            BlockOutcome acc;
            OuterFrame fr;
            try {
                fr = outer_frame(blk);
            } catch (const DeferredSignal&) {
                acc.deferred = 1;
                return acc;
            }
            for (Idx ph = 0; ph < cbase.pos(fr.lhs); ++ph) {
                BlockOutcome one = outcome_of(
                    [&] {
                        auto [c1h, c2h] = pr_at(mc, fr.x0, fr.gfam, Pos{&cbase, fr.lhs, ph});
                        auto [po, qi] = cc.decode_pos(fr.lhs, ph);
                        (void)qi;
                        Idx ssf = sigma_at(outer, fr.s, fr.fo);
                        auto [a, bb] = pr_at(outer, fr.s, fr.fo, Pos{&co, ssf, po});
                        auto [pout1, qin1] = cc.decode_pos(fr.x0, c1h.idx);
                        (void)qin1;
                        if (which == 1) return eq_pos(a, Pos{&co, fr.s, pout1});
                        auto [pout2, qin2] = cc.decode_pos(fr.gfam.vals[c1h.idx], c2h.idx);
                        (void)qin2;
                        return eq_pos(Pos{&co, fr.fo.vals[a.idx], bb.idx},
                                      Pos{&co, fr.fo.vals[pout1], pout2});
                    },
                    [&] { return outer_binding(fr) + " p=" + std::to_string(ph); });
                acc.checked = sat_add(acc.checked, one.checked);
                acc.blocked = sat_add(acc.blocked, one.blocked);
                acc.deferred = sat_add(acc.deferred, one.deferred);
                if (!acc.failure && one.failure) acc.failure = one.failure;
            }
            return acc;
        };
    };
    rep.equations.push_back(sweep_blocks("morph-outer-p1", outer_blocks.size(), outer_pos_eq(1), policy));
    rep.equations.push_back(sweep_blocks("morph-outer-p2", outer_blocks.size(), outer_pos_eq(2), policy));

    // embedding of the inner carrier: t |-> (outer unit, const t)
    auto inner_blocks = shape_family_blocks(ci, ci.shape_count());
    struct InnerFrame {
        Idx t;
        Fam fi;
        Idx lhs;
        Idx x0;
        Fam gfam;
    };
    auto inner_frame = [&](const LawBlock& blk) {
        InnerFrame fr;
        fr.t = blk.s;
        fr.fi = fam_from_rank(ci, blk.s, blk.frank, ci.shape_count());
        Idx stf = sigma_at(inner, fr.t, fr.fi);
        std::vector<Idx> cons1(co.pos(iota_at(outer)), stf);
        fr.lhs = cc.encode_shape(iota_at(outer), cons1);
        std::vector<Idx> cons0(co.pos(iota_at(outer)), fr.t);
        fr.x0 = cc.encode_shape(iota_at(outer), cons0);
        fr.gfam = Fam{&cbase, fr.x0, std::vector<Idx>(cbase.pos(fr.x0), 0)};
        for (Idx j = 0; j < cbase.pos(fr.x0); ++j) {
            auto [po, qi] = cc.decode_pos(fr.x0, j);
            (void)po;
            std::vector<Idx> cons(co.pos(iota_at(outer)), fr.fi.vals[qi]);
            fr.gfam.vals[j] = cc.encode_shape(iota_at(outer), cons);
        }
        return fr;
    };
    auto inner_binding = [](const InnerFrame& fr) {
        return "t=" + std::to_string(fr.t) + " f=" + format_digits(fr.fi.vals);
    };

    rep.equations.push_back(sweep_blocks(
        "morph-inner-s", inner_blocks.size(),
        [&](Nat b) {
            LawBlock blk{inner_blocks[static_cast<std::size_t>(b)].first,
                         inner_blocks[static_cast<std::size_t>(b)].second};
            InnerFrame fr;
            return outcome_of(
                [&] {
                    fr = inner_frame(blk);
                    return sigma_at(mc, fr.x0, fr.gfam) == fr.lhs;
                },
                [&] { return inner_binding(fr); });
        },
        policy));

    auto inner_pos_eq = [&](int which) {
        return [&, which](Nat b) {
            LawBlock blk{inner_blocks[static_cast<std::size_t>(b)].first,
                         inner_blocks[static_cast<std::size_t>(b)].second};
            BlockOutcome acc;
            InnerFrame fr;
            try {
                fr = inner_frame(blk);
            } catch (const DeferredSignal&) {
                acc.deferred = 1;
                return acc;
            }
            for (Idx ph = 0; ph < cbase.pos(fr.lhs); ++ph) {
                BlockOutcome one = outcome_of(
                    [&] {
                        auto [c1h, c2h] = pr_at(mc, fr.x0, fr.gfam, Pos{&cbase, fr.lhs, ph});
                        auto [po, qi] = cc.decode_pos(fr.lhs, ph);
                        (void)po;
                        Idx stf = sigma_at(inner, fr.t, fr.fi);
                        auto [a, bb] = pr_at(inner, fr.t, fr.fi, Pos{&ci, stf, qi});
                        auto [pout1, qin1] = cc.decode_pos(fr.x0, c1h.idx);
                        (void)pout1;
                        if (which == 1) return eq_pos(a, Pos{&ci, fr.t, qin1});
                        auto [pout2, qin2] = cc.decode_pos(fr.gfam.vals[c1h.idx], c2h.idx);
                        (void)pout2;
                        return eq_pos(Pos{&ci, fr.fi.vals[a.idx], bb.idx},
                                      Pos{&ci, fr.fi.vals[qin1], qin2});
                    },
                    [&] { return inner_binding(fr) + " p=" + std::to_string(ph); });
                acc.checked = sat_add(acc.checked, one.checked);
                acc.blocked = sat_add(acc.blocked, one.blocked);
                acc.deferred = sat_add(acc.deferred, one.deferred);
                if (!acc.failure && one.failure) acc.failure = one.failure;
            }
            return acc;
        };
    };
    rep.equations.push_back(sweep_blocks("morph-inner-p1", inner_blocks.size(), inner_pos_eq(1), policy));
    rep.equations.push_back(sweep_blocks("morph-inner-p2", inner_blocks.size(), inner_pos_eq(2), policy));

    // middle unitary laws
    struct MidFrame {
        Idx x, x0;
        Fam gfam;
    };
    auto mid_frame = [&](Idx x) {
        MidFrame fr;
        fr.x = x;
        const CompositeShape& xs = cc.decode_shape(x);
        std::vector<Idx> cons0(co.pos(xs.outer_shape), iota_at(inner));
        fr.x0 = cc.encode_shape(xs.outer_shape, cons0);
        fr.gfam = Fam{&cbase, fr.x0, std::vector<Idx>(cbase.pos(fr.x0), 0)};
        for (Idx j = 0; j < cbase.pos(fr.x0); ++j) {
            auto [po, qi] = cc.decode_pos(fr.x0, j);
            (void)qi;
            std::vector<Idx> cons(co.pos(iota_at(outer)), xs.inner_family[po]);
            fr.gfam.vals[j] = cc.encode_shape(iota_at(outer), cons);
        }
        return fr;
    };

    rep.equations.push_back(sweep_blocks(
        "middle-unit-s", m,
        [&](Nat b) {
            Idx x = static_cast<Idx>(b);
            MidFrame fr;
            return outcome_of(
                [&] {
                    fr = mid_frame(x);
                    return sigma_at(mc, fr.x0, fr.gfam) == x;
                },
                [&] { return "shape=" + comp_label(cc, x); });
        },
        policy));

    rep.equations.push_back(sweep_blocks(
        "middle-unit-p", m,
        [&](Nat b) {
            Idx x = static_cast<Idx>(b);
            BlockOutcome acc;
            MidFrame fr;
            try {
                fr = mid_frame(x);
            } catch (const DeferredSignal&) {
                acc.deferred = 1;
                return acc;
            }
            for (Idx j = 0; j < cbase.pos(x); ++j) {
                BlockOutcome one = outcome_of(
                    [&] {
                        auto [c1h, c2h] = pr_at(mc, fr.x0, fr.gfam, Pos{&cbase, x, j});
                        auto [po, qi] = cc.decode_pos(x, j);
                        auto [pout1, qin1] = cc.decode_pos(fr.x0, c1h.idx);
                        (void)qin1;
                        if (pout1 != po) return false;
                        auto [pout2, qin2] = cc.decode_pos(fr.gfam.vals[c1h.idx], c2h.idx);
                        (void)pout2;
                        const CompositeShape& xs = cc.decode_shape(x);
                        return eq_pos(Pos{&ci, xs.inner_family[pout1], qin2},
                                      Pos{&ci, xs.inner_family[po], qi});
                    },
                    [&] { return "shape=" + comp_label(cc, x) + " pos=" + std::to_string(j); });
                acc.checked = sat_add(acc.checked, one.checked);
                acc.blocked = sat_add(acc.blocked, one.blocked);
                acc.deferred = sat_add(acc.deferred, one.deferred);
                if (!acc.failure && one.failure) acc.failure = one.failure;
            }
            return acc;
        },
        policy));

    return rep;
}

DistLawData law_from_composite(const CompatibleComposite& comp, const MonadicContainer& outer,
                               const MonadicContainer& inner, const ExecPolicy& policy) {
    EquationReport rep = check_compatible(comp, outer, inner, policy);
    if (rep.refuted()) throw Error("law_from_composite: composite fails the compatibility suite");

    const CompositeContainer& cc = comp.cc;
    const MonadicContainer& mc = comp.mc;
    const Container& cbase = mc.base;
    const Container& co = outer.base;
    const Container& ci = inner.base;

    DistLawData law = make_law_skeleton(LawKind::MndMnd, monadic_slot(inner), monadic_slot(outer));
    for (Idx a = 0; a < ci.shape_count(); ++a) {
        Nat fams = sat_pow(co.shape_count(), ci.pos(a));
        std::vector<Idx> h(ci.pos(a), 0);
        for (Nat fr = 0; fr < fams; ++fr) {
            std::vector<Idx> cons0(co.pos(iota_at(outer)), a);
            Idx x0 = cc.encode_shape(iota_at(outer), cons0);
            Fam gfam{&cbase, x0, std::vector<Idx>(cbase.pos(x0), 0)};
            for (Idx j = 0; j < cbase.pos(x0); ++j) {
                auto [po, qi] = cc.decode_pos(x0, j);
                (void)po;
                std::vector<Idx> cons(co.pos(h[qi]), iota_at(inner));
                gfam.vals[j] = cc.encode_shape(h[qi], cons);
            }
            Idx y = sigma_at(mc, x0, gfam);
            const CompositeShape& ys = cc.decode_shape(y);
            law.u1[a][fr] = ys.outer_shape;
            law.u2[a][fr] = ys.inner_family;
            law.v1[a][fr].resize(co.pos(ys.outer_shape));
            law.v2[a][fr].resize(co.pos(ys.outer_shape));
            for (Idx q = 0; q < co.pos(ys.outer_shape); ++q) {
                law.v1[a][fr][q].assign(ci.pos(ys.inner_family[q]), kNoIdx);
                law.v2[a][fr][q].assign(ci.pos(ys.inner_family[q]), kNoIdx);
                for (Idx p = 0; p < ci.pos(ys.inner_family[q]); ++p) {
                    Idx flat = cc.encode_pos(y, q, p);
                    auto [c1h, c2h] = pr_at(mc, x0, gfam, Pos{&cbase, y, flat});
                    auto [po1, qi1] = cc.decode_pos(x0, c1h.idx);
                    (void)po1;
                    auto [po2, qi2] = cc.decode_pos(gfam.vals[c1h.idx], c2h.idx);
                    (void)qi2;
                    law.v1[a][fr][q][p] = qi1;
                    law.v2[a][fr][q][p] = po2;
                }
            }
            for (std::size_t i = h.size(); i-- > 0;) {
                if (++h[i] < co.shape_count()) break;
                h[i] = 0;
            }
        }
    }
    validate_law(law);
    return law;
}

} // namespace contlab
