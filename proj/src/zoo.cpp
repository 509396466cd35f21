#include "contlab/zoo.hpp"

namespace contlab {

bool monoid_laws_hold(const Monoid& m) {
    if (m.unit >= m.size || m.mult.size() != m.size) return false;
    for (const auto& row : m.mult) {
        if (row.size() != m.size) return false;
        for (Idx v : row)
            if (v >= m.size) return false;
    }
    for (Idx a = 0; a < m.size; ++a)
        if (m.times(m.unit, a) != a || m.times(a, m.unit) != a) return false;
    for (Idx a = 0; a < m.size; ++a)
        for (Idx b = 0; b < m.size; ++b)
            for (Idx c = 0; c < m.size; ++c)
                if (m.times(m.times(a, b), c) != m.times(a, m.times(b, c))) return false;
    return true;
}

Monoid make_monoid(Idx size, Idx unit, std::vector<std::vector<Idx>> mult) {
    Monoid m{size, unit, std::move(mult)};
    if (!monoid_laws_hold(m)) throw Error("monoid: unit or associativity law fails");
    return m;
}

Monoid cyclic_monoid(Idx n) {
    if (n == 0) throw Error("monoid: empty carrier");
    Monoid m;
    m.size = n;
    m.unit = 0;
    m.mult.assign(n, std::vector<Idx>(n, 0));
    for (Idx a = 0; a < n; ++a)
        for (Idx b = 0; b < n; ++b) m.mult[a][b] = (a + b) % n;
    return m;
}

namespace {

// Allocates sigma/pr rows for a finite monadic container and fills them via
// callbacks sigma(s, fam) and pr(s, fam, p) -> (p1, p2).
template <class SigmaFn, class PrFn>
MonadicContainer tabulate_monadic(Container base, Idx iota, SigmaFn&& sig, PrFn&& prf,
                                  bool fueled_holes = false) {
    MonadicContainer m;
    m.base = std::move(base);
    m.iota = iota;
    Idx S = m.base.shape_count();
    m.sigma.resize(S);
    m.pr.resize(S);
    for (Idx s = 0; s < S; ++s) {
        Nat fams = sat_pow(S, m.base.pos(s));
        if (fams > 20'000'000) throw Error("monadic container too large to tabulate");
        m.sigma[s].assign(fams, kNoIdx);
        m.pr[s].resize(fams);
        std::vector<Idx> fam(m.base.pos(s), 0);
        for (Nat r = 0; r < fams; ++r) {
            Idx out = sig(s, fam);
            m.sigma[s][r] = out;
            if (out != kNoIdx) {
                m.pr[s][r].resize(m.base.pos(out));
                for (Idx p = 0; p < m.base.pos(out); ++p) m.pr[s][r][p] = prf(s, fam, p);
            } else if (!fueled_holes) {
                throw Error("unexpected hole in a finite structure");
            }
            for (std::size_t i = fam.size(); i-- > 0;) {
                if (++fam[i] < S) break;
                fam[i] = 0;
            }
        }
    }
    validate_monadic(m);
    return m;
}

} // namespace

MonadicContainer mk_exception(Idx e_count) {
    std::vector<std::string> labels{"ok"};
    std::vector<Idx> positions{1};
    for (Idx e = 0; e < e_count; ++e) {
        labels.push_back("err" + std::to_string(e));
        positions.push_back(0);
    }
    Container base = make_finite_container(std::move(labels), std::move(positions));
    return tabulate_monadic(
        std::move(base), 0,
        [](Idx s, const std::vector<Idx>& fam) { return s == 0 ? fam[0] : s; },
        [](Idx, const std::vector<Idx>&, Idx p) { return std::pair<Idx, Idx>{0, p}; });
}

MonadicContainer mk_maybe() { return mk_exception(1); }

MonadicContainer mk_writer(const Monoid& mo) {
    if (!monoid_laws_hold(mo)) throw Error("writer: invalid monoid");
    std::vector<std::string> labels;
    for (Idx a = 0; a < mo.size; ++a) labels.push_back("a" + std::to_string(a));
    Container base = make_finite_container(std::move(labels), std::vector<Idx>(mo.size, 1));
    return tabulate_monadic(
        std::move(base), mo.unit,
        [&mo](Idx s, const std::vector<Idx>& fam) { return mo.times(s, fam[0]); },
        [](Idx, const std::vector<Idx>&, Idx) { return std::pair<Idx, Idx>{0, 0}; });
}

MonadicContainer mk_reader(Idx a_count) {
    Container base = make_finite_container({"env"}, {a_count});
    return tabulate_monadic(
        std::move(base), 0, [](Idx, const std::vector<Idx>&) { return Idx{0}; },
        [](Idx, const std::vector<Idx>&, Idx p) { return std::pair<Idx, Idx>{p, p}; });
}

MonadicContainer mk_state(Idx s_count) {
    Nat shapes = checked_pow(s_count, s_count).value_or(0);
    if (shapes == 0 || shapes > 10'000) throw Error("state: carrier too large");
    std::vector<std::string> labels;
    std::vector<std::vector<Idx>> funcs;
    for (Nat r = 0; r < shapes; ++r) {
        std::vector<Idx> f(s_count);
        unrank_uniform(r, s_count, f);
        labels.push_back("fn" + format_digits(f));
        funcs.push_back(std::move(f));
    }
    Container base =
        make_finite_container(std::move(labels), std::vector<Idx>(shapes, s_count));
    std::vector<Idx> ident(s_count);
    for (Idx x = 0; x < s_count; ++x) ident[x] = x;
    Idx iota = static_cast<Idx>(rank_uniform(ident, s_count));
    return tabulate_monadic(
        std::move(base), iota,
        [&funcs, s_count](Idx s, const std::vector<Idx>& fam) {
            std::vector<Idx> comp(s_count);
            for (Idx x = 0; x < s_count; ++x) comp[x] = funcs[fam[x]][funcs[s][x]];
            return static_cast<Idx>(rank_uniform(comp, s_count));
        },
        [&funcs](Idx s, const std::vector<Idx>&, Idx x) {
            return std::pair<Idx, Idx>{x, funcs[s][x]};
        });
}

MonadicContainer mk_list(Idx fuel) {
    std::vector<std::string> labels;
    std::vector<Idx> positions;
    for (Idx n = 0; n <= fuel; ++n) {
        labels.push_back("len" + std::to_string(n));
        positions.push_back(n);
    }
    Container base = make_fueled_container(std::move(labels), std::move(positions));
    Idx iota = fuel >= 1 ? 1 : kNoIdx;
    return tabulate_monadic(
        std::move(base), iota,
        [fuel](Idx s, const std::vector<Idx>& fam) {
            Nat total = 0;
            for (Idx i = 0; i < s; ++i) total += fam[i];
            return total <= fuel ? static_cast<Idx>(total) : kNoIdx;
        },
        [](Idx s, const std::vector<Idx>& fam, Idx p) {
            // Largest block start not beyond p, then the offset inside it.
            Idx acc = 0, i = 0;
            for (; i < s; ++i) {
                if (acc + fam[i] > p) break;
                acc += fam[i];
            }
            return std::pair<Idx, Idx>{i, p - acc};
        },
        /*fueled_holes=*/true);
}

DirectedContainer mk_writer_directed(Idx a_count) {
    if (a_count == 0) throw Error("writer directed: empty carrier");
    std::vector<std::string> labels;
    for (Idx a = 0; a < a_count; ++a) labels.push_back("a" + std::to_string(a));
    DirectedContainer d;
    d.base = make_finite_container(std::move(labels), std::vector<Idx>(a_count, 1));
    d.o.assign(a_count, 0);
    d.down.assign(a_count, std::vector<Idx>(1, 0));
    for (Idx a = 0; a < a_count; ++a) d.down[a][0] = a;
    d.oplus.assign(a_count, {{std::vector<Idx>{0}}});
    validate_directed(d);
    return d;
}

DirectedContainer mk_reader_directed(const Monoid& mo) {
    if (!monoid_laws_hold(mo)) throw Error("reader directed: invalid monoid");
    DirectedContainer d;
    d.base = make_finite_container({"env"}, {mo.size});
    d.o.assign(1, mo.unit);
    d.down.assign(1, std::vector<Idx>(mo.size, 0));
    d.oplus.assign(1, std::vector<std::vector<Idx>>(mo.size, std::vector<Idx>(mo.size, 0)));
    for (Idx p = 0; p < mo.size; ++p)
        for (Idx q = 0; q < mo.size; ++q) d.oplus[0][p][q] = mo.times(p, q);
    validate_directed(d);
    return d;
}

DistLawData exception_law(Idx e_count, MonadicContainer outer) {
    MonadicContainer exc = mk_exception(e_count);
    DistLawData law = make_law_skeleton(LawKind::MndMnd, monadic_slot(std::move(exc)),
                                        monadic_slot(std::move(outer)));
    const Container& c1 = law.c1();
    const Container& c2 = law.c2();
    Idx iota2 = law.slot2.mnd.iota;
    for (Idx s = 0; s < c1.shape_count(); ++s) {
        for (Nat fr = 0; fr < law.u1[s].size(); ++fr) {
            Idx t = s == 0 ? static_cast<Idx>(fr) : iota2;  // fr ranks the one-entry family
            law.u1[s][fr] = t;
            law.u2[s][fr].assign(c2.pos(t), s);
            law.v1[s][fr].resize(c2.pos(t));
            law.v2[s][fr].resize(c2.pos(t));
            for (Idx q = 0; q < c2.pos(t); ++q) {
                law.v1[s][fr][q].assign(c1.pos(s), 0);
                law.v2[s][fr][q].assign(c1.pos(s), q);
            }
        }
    }
    validate_law(law);
    return law;
}

DistLawData reader_law(MonadicContainer inner, Idx a_count) {
    MonadicContainer rd = mk_reader(a_count);
    DistLawData law =
        make_law_skeleton(LawKind::MndMnd, monadic_slot(std::move(inner)), monadic_slot(std::move(rd)));
    const Container& c1 = law.c1();
    for (Idx s = 0; s < c1.shape_count(); ++s) {
        for (Nat fr = 0; fr < law.u1[s].size(); ++fr) {
            law.u1[s][fr] = 0;
            law.u2[s][fr].assign(a_count, s);
            law.v1[s][fr].resize(a_count);
            law.v2[s][fr].resize(a_count);
            for (Idx q = 0; q < a_count; ++q) {
                law.v1[s][fr][q].resize(c1.pos(s));
                for (Idx p = 0; p < c1.pos(s); ++p) law.v1[s][fr][q][p] = p;
                law.v2[s][fr][q].assign(c1.pos(s), q);
            }
        }
    }
    validate_law(law);
    return law;
}

DistLawData reader_writer_mixed_law(Idx a_count, Idx b_count) {
    DirectedContainer wd = mk_writer_directed(a_count);
    MonadicContainer rd = mk_reader(b_count);
    DistLawData law =
        make_law_skeleton(LawKind::MndDir, directed_slot(std::move(wd)), monadic_slot(std::move(rd)));
    for (Idx a = 0; a < a_count; ++a) {
        for (Nat fr = 0; fr < law.u1[a].size(); ++fr) {
            law.u1[a][fr] = 0;
            law.u2[a][fr].assign(b_count, a);
            law.v1[a][fr].resize(b_count);
            law.v2[a][fr].resize(b_count);
            for (Idx q = 0; q < b_count; ++q) {
                law.v1[a][fr][q].assign(1, 0);
                law.v2[a][fr][q].assign(1, q);
            }
        }
    }
    validate_law(law);
    return law;
}

DistLawData law_from_matching_pair(const MatchingPair& mp) {
    DistLawData law = make_law_skeleton(LawKind::MndMnd, monadic_slot(mk_writer(mp.a)),
                                        monadic_slot(mk_writer(mp.b)));
    for (Idx a = 0; a < mp.a.size; ++a) {
        for (Idx b = 0; b < mp.b.size; ++b) {
            law.u1[a][b] = mp.beta[a][b];
            law.u2[a][b].assign(1, mp.alpha[a][b]);
            law.v1[a][b] = {{0}};
            law.v2[a][b] = {{0}};
        }
    }
    validate_law(law);
    return law;
}

static Monoid monoid_of_writer(const MonadicContainer& m) {
    Monoid mo;
    mo.size = m.shape_count();
    mo.unit = m.iota;
    mo.mult.assign(mo.size, std::vector<Idx>(mo.size, 0));
    for (Idx a = 0; a < mo.size; ++a)
        for (Idx b = 0; b < mo.size; ++b) mo.mult[a][b] = m.sigma[a][b];
    return mo;
}

static bool writer_shaped(const Container& c) {
    for (Idx s = 0; s < c.shape_count(); ++s)
        if (c.pos(s) != 1) return false;
    return !c.fueled;
}

MatchingPair matching_pair_from_law(const DistLawData& law) {
    if (law.kind != LawKind::MndMnd || !writer_shaped(law.c1()) || !writer_shaped(law.c2()))
        throw Error("matching_pair_from_law: writer-shaped monadic slots required");
    MatchingPair mp;
    mp.a = monoid_of_writer(law.slot1.mnd);
    mp.b = monoid_of_writer(law.slot2.mnd);
    mp.alpha.assign(mp.a.size, std::vector<Idx>(mp.b.size, 0));
    mp.beta.assign(mp.a.size, std::vector<Idx>(mp.b.size, 0));
    for (Idx a = 0; a < mp.a.size; ++a)
        for (Idx b = 0; b < mp.b.size; ++b) {
            mp.beta[a][b] = law.u1[a][b];
            mp.alpha[a][b] = law.u2[a][b][0];
        }
    return mp;
}

bool matching_pair_valid(const MatchingPair& mp) {
    return !check_mnd_mnd(law_from_matching_pair(mp)).refuted();
}

DistLawData dir_mnd_law_from_matching_pair(const MatchingPair& mp) {
    DistLawData law = make_law_skeleton(LawKind::DirMnd, monadic_slot(mk_writer(mp.b)),
                                        directed_slot(mk_reader_directed(mp.a)));
    // slot1 shapes are B, the one slot2 shape has A-many positions
    for (Idx b = 0; b < mp.b.size; ++b) {
        law.u1[b][0] = 0;
        law.u2[b][0].resize(mp.a.size);
        law.v1[b][0].resize(mp.a.size);
        law.v2[b][0].resize(mp.a.size);
        for (Idx q = 0; q < mp.a.size; ++q) {
            law.u2[b][0][q] = mp.beta[q][b];
            law.v1[b][0][q] = {0};
            law.v2[b][0][q] = {mp.alpha[q][b]};
        }
    }
    validate_law(law);
    return law;
}

Monoid zappa_szep(const MatchingPair& mp) {
    DistLawData law = law_from_matching_pair(mp);
    CompatibleComposite comp = composite_from_law(law);
    const MonadicContainer& mc = comp.mc;
    Monoid out;
    out.size = mc.shape_count();
    out.unit = mc.iota;
    out.mult.assign(out.size, std::vector<Idx>(out.size, 0));
    for (Idx x = 0; x < out.size; ++x)
        for (Idx y = 0; y < out.size; ++y) out.mult[x][y] = mc.sigma[x][y];
    if (!monoid_laws_hold(out)) throw Error("zappa_szep: composite substitution is not a monoid");
    return out;
}

bool functional_action_valid(const FunctionalAction& fa) {
    const Monoid& A = fa.a;
    const Monoid& B = fa.b;
    Nat fcount = sat_pow(B.size, A.size);
    if (fa.alpha.size() != fcount) return false;
    for (const auto& row : fa.alpha) {
        if (row.size() != A.size) return false;
        for (Idx v : row)
            if (v >= A.size) return false;
    }
    std::vector<Idx> f(A.size), g(A.size), h(A.size);
    for (Nat frk = 0; frk < fcount; ++frk) {
        unrank_uniform(frk, B.size, f);
        // alpha f e = e
        if (fa.alpha[frk][A.unit] != A.unit) return false;
        // alpha (const e_B) a = a
        bool const_unit = true;
        for (Idx v : f)
            if (v != B.unit) const_unit = false;
        if (const_unit)
            for (Idx x = 0; x < A.size; ++x)
                if (fa.alpha[frk][x] != x) return false;
        // alpha f (a + a') = alpha f a + alpha (x |-> f(alpha f a + x)) a'
        for (Idx a1 = 0; a1 < A.size; ++a1)
            for (Idx a2 = 0; a2 < A.size; ++a2) {
                Idx afa = fa.alpha[frk][a1];
                for (Idx x = 0; x < A.size; ++x) h[x] = f[A.times(afa, x)];
                Nat hrk = rank_uniform(h, B.size);
                Idx rhs = A.times(afa, fa.alpha[hrk][a2]);
                if (fa.alpha[frk][A.times(a1, a2)] != rhs) return false;
            }
        // alpha (x |-> f x + g x) a = alpha f (alpha (x |-> g(alpha f x)) a)
        for (Nat grk = 0; grk < fcount; ++grk) {
            unrank_uniform(grk, B.size, g);
            std::vector<Idx> fg(A.size), gaf(A.size);
            for (Idx x = 0; x < A.size; ++x) {
                fg[x] = B.times(f[x], g[x]);
                gaf[x] = g[fa.alpha[frk][x]];
            }
            Nat fgrk = rank_uniform(fg, B.size);
            Nat gafrk = rank_uniform(gaf, B.size);
            for (Idx x = 0; x < A.size; ++x)
                if (fa.alpha[fgrk][x] != fa.alpha[frk][fa.alpha[gafrk][x]]) return false;
        }
    }
    return true;
}

DistLawData mixed_law_from_functional_action(const FunctionalAction& fa) {
    DistLawData law = make_law_skeleton(LawKind::MndDir, directed_slot(mk_reader_directed(fa.a)),
                                        monadic_slot(mk_writer(fa.b)));
    Nat fcount = sat_pow(fa.b.size, fa.a.size);
    std::vector<Idx> f(fa.a.size);
    for (Nat frk = 0; frk < fcount; ++frk) {
        unrank_uniform(frk, fa.b.size, f);
        law.u1[0][frk] = f[fa.a.unit];
        law.u2[0][frk].assign(1, 0);
        law.v1[0][frk].resize(1);
        law.v2[0][frk].resize(1);
        law.v1[0][frk][0].resize(fa.a.size);
        law.v2[0][frk][0].assign(fa.a.size, 0);
        for (Idx p = 0; p < fa.a.size; ++p) law.v1[0][frk][0][p] = fa.alpha[frk][p];
    }
    validate_law(law);
    return law;
}

FunctionalAction functional_action_from_mixed_law(const DistLawData& law) {
    if (law.kind != LawKind::MndDir) throw Error("functional action: mnd-dir law required");
    const Container& c1 = law.c1();
    const Container& c2 = law.c2();
    if (c1.shape_count() != 1 || !writer_shaped(c2))
        throw Error("functional action: reader-directed slot1 over writer slot2 required");
    FunctionalAction fa;
    const DirectedContainer& d = law.slot1.dir;
    fa.a.size = c1.pos(0);
    fa.a.unit = d.o[0];
    fa.a.mult.assign(fa.a.size, std::vector<Idx>(fa.a.size, 0));
    for (Idx p = 0; p < fa.a.size; ++p)
        for (Idx q = 0; q < fa.a.size; ++q) fa.a.mult[p][q] = d.oplus[0][p][q];
    fa.b = monoid_of_writer(law.slot2.mnd);
    Nat fcount = sat_pow(fa.b.size, fa.a.size);
    fa.alpha.assign(fcount, std::vector<Idx>(fa.a.size, 0));
    for (Nat frk = 0; frk < fcount; ++frk)
        for (Idx p = 0; p < fa.a.size; ++p) fa.alpha[frk][p] = law.v1[0][frk][0][p];
    return fa;
}

CompatibleComposite mk_predicate_universe(const MonadicContainer& m) {
    SigmaUniverseResult u = check_sigma_universe(m);
    if (!u.is_universe) throw Error("predicate universe: input is not substitution-closed with invertible pr");
    DistLawData law = exception_law(1, m);
    return composite_from_law(law);
}

Idx predicate_universe_embed(const CompatibleComposite& comp, Idx original_shape) {
    std::vector<Idx> fam(comp.cc.outer.pos(original_shape), 0);
    return comp.cc.encode_shape(original_shape, fam);
}

} // namespace contlab
