#include "contlab/laws.hpp"

namespace contlab {

const char* law_kind_name(LawKind k) {
    switch (k) {
    case LawKind::MndMnd: return "mnd-mnd";
    case LawKind::MndDir: return "mnd-dir";
    case LawKind::DirMnd: return "dir-mnd";
    }
    return "?";
}

static const char* kDeterminingTag = "unit-oS-s";

Slot monadic_slot(MonadicContainer m) {
    Slot s;
    s.flavor = Slot::Flavor::Monadic;
    s.mnd = std::move(m);
    return s;
}

Slot directed_slot(DirectedContainer d) {
    Slot s;
    s.flavor = Slot::Flavor::Directed;
    s.dir = std::move(d);
    return s;
}

static void check_slot_flavors(const DistLawData& law) {
    switch (law.kind) {
    case LawKind::MndMnd:
        if (!law.slot1.is_monadic() || !law.slot2.is_monadic())
            throw Error("mnd-mnd law needs monadic structure in both slots");
        break;
    case LawKind::MndDir:
        if (law.slot1.is_monadic() || !law.slot2.is_monadic())
            throw Error("mnd-dir law needs a directed slot1 and a monadic slot2");
        break;
    case LawKind::DirMnd:
        if (!law.slot1.is_monadic() || law.slot2.is_monadic())
            throw Error("dir-mnd law needs a monadic slot1 and a directed slot2");
        break;
    }
}

DistLawData make_law_skeleton(LawKind kind, Slot slot1, Slot slot2) {
    DistLawData law;
    law.kind = kind;
    law.slot1 = std::move(slot1);
    law.slot2 = std::move(slot2);
    check_slot_flavors(law);
    const Container& c1 = law.c1();
    Idx S1 = c1.shape_count();
    Idx S2 = law.c2().shape_count();
    law.u1.resize(S1);
    law.u2.resize(S1);
    law.v1.resize(S1);
    law.v2.resize(S1);
    for (Idx s = 0; s < S1; ++s) {
        Nat fams = sat_pow(S2, c1.pos(s));
        if (fams > 20'000'000) throw Error("law table too large");
        law.u1[s].assign(fams, kNoIdx);
        law.u2[s].resize(fams);
        law.v1[s].resize(fams);
        law.v2[s].resize(fams);
    }
    return law;
}

void validate_law(const DistLawData& law) {
    check_slot_flavors(law);
    const Container& c1 = law.c1();
    const Container& c2 = law.c2();
    Idx S1 = c1.shape_count();
    Idx S2 = c2.shape_count();
    bool holes_ok = c1.fueled;
    if (law.u1.size() != S1 || law.u2.size() != S1 || law.v1.size() != S1 || law.v2.size() != S1)
        throw Error("law: table shape count mismatch");
    for (Idx s = 0; s < S1; ++s) {
        Nat fams = sat_pow(S2, c1.pos(s));
        if (law.u1[s].size() != fams) throw Error("law: u1 row count mismatch");
        if (law.u2[s].size() != fams || law.v1[s].size() != fams || law.v2[s].size() != fams)
            throw Error("law: u2/v row count mismatch");
        std::vector<Idx> fam(c1.pos(s), 0);
        for (Nat fr = 0; fr < fams; ++fr) {
            Idx t = law.u1[s][fr];
            if (t == kNoIdx) {
                if (!holes_ok) throw Error("law: missing u1 entry");
            } else if (t >= S2) {
                throw Error("law: u1 entry out of range");
            } else {
                if (law.u2[s][fr].size() != c2.pos(t))
                    throw Error("law: u2 row length mismatch at s=" + std::to_string(s));
                for (Idx q = 0; q < c2.pos(t); ++q) {
                    Idx a = law.u2[s][fr][q];
                    if (a == kNoIdx) {
                        if (!holes_ok) throw Error("law: missing u2 entry");
                        if (!law.v1[s][fr].empty() && !law.v1[s][fr][q].empty())
                            throw Error("law: v1 row present for missing u2 entry");
                        continue;
                    }
                    if (a >= S1) throw Error("law: u2 entry out of range");
                    const auto& v1row = law.v1[s][fr].at(q);
                    const auto& v2row = law.v2[s][fr].at(q);
                    if (v1row.size() != c1.pos(a) || v2row.size() != c1.pos(a))
                        throw Error("law: v row length mismatch at s=" + std::to_string(s));
                    for (Idx p = 0; p < c1.pos(a); ++p) {
                        Idx x = v1row[p];
                        if (x == kNoIdx) {
                            if (!holes_ok) throw Error("law: missing v1 entry");
                            continue;
                        }
                        if (x >= c1.pos(s)) throw Error("law: v1 entry out of range");
                        Idx y = v2row[p];
                        if (y == kNoIdx) {
                            if (!holes_ok) throw Error("law: missing v2 entry");
                            continue;
                        }
                        if (y >= c2.pos(fam[x])) throw Error("law: v2 entry out of range");
                    }
                }
                if (law.v1[s][fr].size() != c2.pos(t) || law.v2[s][fr].size() != c2.pos(t))
                    throw Error("law: v table row count mismatch");
            }
            for (std::size_t i = fam.size(); i-- > 0;) {
                if (++fam[i] < S2) break;
                fam[i] = 0;
            }
        }
    }
}

Idx LawView::u1_at(Idx s, const Fam& f) const {
    if (f.cont != &c1() || f.shape != s) throw BlockedSignal{};
    Idx v = acc->u1(s, frank_of(f));
    if (v == kNoIdx) throw DeferredSignal{};
    return v;
}

Idx LawView::u2_at(Idx s, const Fam& f, const Pos& q) const {
    Idx t = u1_at(s, f);
    if (q.cont != &c2() || q.shape != t) throw BlockedSignal{};
    Idx v = acc->u2(s, frank_of(f), q.idx);
    if (v == kNoIdx) throw DeferredSignal{};
    return v;
}

Pos LawView::v1_at(Idx s, const Fam& f, const Pos& q, const Pos& p) const {
    Idx a = u2_at(s, f, q);
    if (p.cont != &c1() || p.shape != a) throw BlockedSignal{};
    Idx v = acc->v1(s, frank_of(f), q.idx, p.idx);
    if (v == kNoIdx) throw DeferredSignal{};
    return Pos{&c1(), s, v};
}

Pos LawView::v2_at(Idx s, const Fam& f, const Pos& q, const Pos& p) const {
    Pos x = v1_at(s, f, q, p);
    Idx v = acc->v2(s, frank_of(f), q.idx, p.idx);
    if (v == kNoIdx) throw DeferredSignal{};
    return Pos{&c2(), f.at(x), v};
}

LawView view_of(const DistLawData& law, const LawAccess& acc) {
    return LawView{law.kind, &law.slot1, &law.slot2, &acc};
}

namespace {

enum class Outcome { Pass, Fail, Blocked, Deferred };

template <class F>
Outcome guarded(F&& f) {
    try {
        return f() ? Outcome::Pass : Outcome::Fail;
    } catch (const BlockedSignal&) {
        return Outcome::Blocked;
    } catch (const DeferredSignal&) {
        return Outcome::Deferred;
    }
    // UnassignedSignal intentionally escapes to the search driver.
}

struct Tally {
    BlockOutcome out;
    bool stop_early;
    bool stop = false;

    void add(Outcome r, const std::function<std::string()>& bindings) {
        switch (r) {
        case Outcome::Pass: out.checked = sat_add(out.checked, 1); break;
        case Outcome::Fail:
            out.checked = sat_add(out.checked, 1);
            if (!out.failure) out.failure = Counterexample{bindings(), "", 0, 0};
            if (stop_early) stop = true;
            break;
        case Outcome::Blocked: out.blocked = sat_add(out.blocked, 1); break;
        case Outcome::Deferred: out.deferred = sat_add(out.deferred, 1); break;
        }
    }
    void defer(Nat n) { out.deferred = sat_add(out.deferred, n); }
};

// Shared frames --------------------------------------------------------

// Variables of the mul-S equations: f maps slot1 positions to slot1 shapes,
// g maps the dependent pair space to slot2 shapes.
struct MulSFrame {
    Idx s;
    Fam f;          // over c1 positions of s, values in S1
    Fam2 g;         // over sum_p P1(f p), values in S2
    Nat gcount;
    bool sigma_ok = false;
    Idx sigma_sf = 0;

    std::string vars() const {
        return "s=" + std::to_string(s) + " f=" + format_digits(f.vals) +
               " g=" + format_digits(g.vals);
    }
};

MulSFrame mul_s_frame(const LawView& v, const LawBlock& blk) {
    MulSFrame fr;
    const Container& c1 = v.c1();
    fr.s = blk.s;
    fr.f = fam_from_rank(c1, blk.s, blk.frank, c1.shape_count());
    fr.g = make_fam2_space(c1, fr.s, fr.f, c1);
    fr.gcount = sat_pow(v.s2_count(), fr.g.total());
    try {
        fr.sigma_sf = sigma_at(v.slot1->mnd, fr.s, fr.f);
        fr.sigma_ok = true;
    } catch (const DeferredSignal&) {
        fr.sigma_ok = false;
    }
    return fr;
}

// lambda p. u1 (f p) (g . (p,-))
Fam mul_s_inner_u1(const LawView& v, const MulSFrame& fr) {
    const Container& c1 = v.c1();
    Fam out{&c1, fr.s, std::vector<Idx>(c1.pos(fr.s), 0)};
    for (Idx p = 0; p < c1.pos(fr.s); ++p)
        out.vals[p] = v.u1_at(fr.f.vals[p], fam2_section(fr.g, Pos{&c1, fr.s, p}));
    return out;
}

// g . pr over positions of sigma1(s, f)
Fam mul_s_g_pr(const LawView& v, const MulSFrame& fr) {
    const Container& c1 = v.c1();
    Fam out{&c1, fr.sigma_sf, std::vector<Idx>(c1.pos(fr.sigma_sf), 0)};
    for (Idx p = 0; p < c1.pos(fr.sigma_sf); ++p) {
        auto [a, b] = pr_at(v.slot1->mnd, fr.s, fr.f, Pos{&c1, fr.sigma_sf, p});
        out.vals[p] = fr.g.at(a, b);
    }
    return out;
}

// lambda p. u2 (f (v1 q p)) (g . (v1 q p,-)) (v2 q p), over positions of
// u2(s, ftilde, q)
Fam mul_s_rhs_family(const LawView& v, const MulSFrame& fr, const Fam& ftilde, const Pos& q,
                     Idx a0) {
    const Container& c1 = v.c1();
    Fam out{&c1, a0, std::vector<Idx>(c1.pos(a0), 0)};
    for (Idx p = 0; p < c1.pos(a0); ++p) {
        Pos pp{&c1, a0, p};
        Pos x = v.v1_at(fr.s, ftilde, q, pp);
        Pos y = v.v2_at(fr.s, ftilde, q, pp);
        out.vals[p] = v.u2_at(fr.f.vals[x.idx], fam2_section(fr.g, x), y);
    }
    return out;
}

// Variables of the mul-T equations (MndMnd/MndDir): f maps slot1 positions
// to slot2 shapes, g maps the dependent pair space (over slot2 positions) to
// slot2 shapes.
struct MulTFrame {
    Idx s;
    Fam f;   // over c1 positions of s, values in S2
    Fam2 g;  // over sum_p P2(f p), values in S2
    Nat gcount;

    std::string vars() const {
        return "s=" + std::to_string(s) + " f=" + format_digits(f.vals) +
               " g=" + format_digits(g.vals);
    }
};

MulTFrame mul_t_frame(const LawView& v, const LawBlock& blk) {
    MulTFrame fr;
    fr.s = blk.s;
    fr.f = fam_from_rank(v.c1(), blk.s, blk.frank, v.s2_count());
    fr.g = make_fam2_space(v.c1(), fr.s, fr.f, v.c2());
    fr.gcount = sat_pow(v.s2_count(), fr.g.total());
    return fr;
}

// lambda p. sigma2 (f p) (g . (p,-))
Fam mul_t_fprime(const LawView& v, const MulTFrame& fr) {
    const Container& c1 = v.c1();
    Fam out{&c1, fr.s, std::vector<Idx>(c1.pos(fr.s), 0)};
    for (Idx p = 0; p < c1.pos(fr.s); ++p)
        out.vals[p] = sigma_at(v.slot2->mnd, fr.f.vals[p],
                               fam2_section(fr.g, Pos{&c1, fr.s, p}));
    return out;
}

// g . v q : positions of u2(s, f, q) -> S2
Fam mul_t_g_after_v(const LawView& v, const MulTFrame& fr, const Pos& q) {
    const Container& c1 = v.c1();
    Idx a = v.u2_at(fr.s, fr.f, q);
    Fam out{&c1, a, std::vector<Idx>(c1.pos(a), 0)};
    for (Idx p = 0; p < c1.pos(a); ++p) {
        Pos pp{&c1, a, p};
        Pos x = v.v1_at(fr.s, fr.f, q, pp);
        Pos y = v.v2_at(fr.s, fr.f, q, pp);
        out.vals[p] = fr.g.at(x, y);
    }
    return out;
}

// lambda q. u1 (u2 s f q) (g . v q), over positions of u1(s, f)
Fam mul_t_rhs_family(const LawView& v, const MulTFrame& fr, Idx u1sf) {
    const Container& c2 = v.c2();
    Fam out{&c2, u1sf, std::vector<Idx>(c2.pos(u1sf), 0)};
    for (Idx q = 0; q < c2.pos(u1sf); ++q) {
        Pos qq{&c2, u1sf, q};
        out.vals[q] = v.u1_at(v.u2_at(fr.s, fr.f, qq), mul_t_g_after_v(v, fr, qq));
    }
    return out;
}

using EvalFn = std::function<BlockOutcome(const LawView&, const LawBlock&, bool)>;

LawEquation make_eq(std::string tag, std::vector<LawBlock> blocks, EvalFn fn) {
    LawEquation e;
    e.tag = std::move(tag);
    e.blocks = std::move(blocks);
    e.eval = std::move(fn);
    return e;
}

std::vector<LawBlock> scalar_blocks(Idx n) {
    std::vector<LawBlock> out;
    out.reserve(n);
    for (Idx i = 0; i < n; ++i) out.push_back(LawBlock{i, 0});
    return out;
}

std::vector<LawBlock> sf_blocks(const Container& c1, Idx radix) {
    std::vector<LawBlock> out;
    for (auto [s, r] : shape_family_blocks(c1, radix)) out.push_back(LawBlock{s, r});
    return out;
}

// --- unit equations shared between suites ------------------------------

// u1 iota1 (const t) = t ; and its u2/v companions. slot1 must be monadic.
void append_unit_s_equations(std::vector<LawEquation>& suite, const LawView& v0) {
    Idx S2 = v0.s2_count();
    auto blocksT = scalar_blocks(S2);

    suite.push_back(make_eq("unit-\xCE\xB9S-s1", blocksT, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Idx tt = blk.s;
        t.add(guarded([&] {
                  Idx i1 = iota_at(v.slot1->mnd);
                  return v.u1_at(i1, const_fam(v.c1(), i1, tt)) == tt;
              }),
              [&] { return "t=" + std::to_string(tt); });
        return t.out;
    }));

    suite.push_back(make_eq("unit-\xCE\xB9S-s2", blocksT, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Idx tt = blk.s;
        Idx i1, u1v;
        Fam f;
        try {
            i1 = iota_at(v.slot1->mnd);
            f = const_fam(v.c1(), i1, tt);
            u1v = v.u1_at(i1, f);
        } catch (const DeferredSignal&) {
            t.defer(1);
            return t.out;
        }
        for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
            t.add(guarded([&] { return v.u2_at(i1, f, Pos{&v.c2(), u1v, q}) == i1; }),
                  [&] { return "t=" + std::to_string(tt) + " q=" + std::to_string(q); });
        }
        return t.out;
    }));

    suite.push_back(make_eq("unit-\xCE\xB9S-p1", blocksT, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Idx tt = blk.s;
        Idx i1, u1v;
        Fam f;
        try {
            i1 = iota_at(v.slot1->mnd);
            f = const_fam(v.c1(), i1, tt);
            u1v = v.u1_at(i1, f);
        } catch (const DeferredSignal&) {
            t.defer(1);
            return t.out;
        }
        for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
            Pos qq{&v.c2(), u1v, q};
            Idx a;
            try {
                a = v.u2_at(i1, f, qq);
            } catch (const DeferredSignal&) {
                t.defer(1);
                continue;
            }
            for (Idx p = 0; p < v.c1().pos(a) && !t.stop; ++p) {
                Pos pp{&v.c1(), a, p};
                t.add(guarded([&] { return eq_pos(v.v1_at(i1, f, qq, pp), pp); }),
                      [&] {
                          return "t=" + std::to_string(tt) + " q=" + std::to_string(q) +
                                 " p=" + std::to_string(p);
                      });
            }
        }
        return t.out;
    }));

    suite.push_back(make_eq("unit-\xCE\xB9S-p2", blocksT, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Idx tt = blk.s;
        Idx i1, u1v;
        Fam f;
        try {
            i1 = iota_at(v.slot1->mnd);
            f = const_fam(v.c1(), i1, tt);
            u1v = v.u1_at(i1, f);
        } catch (const DeferredSignal&) {
            t.defer(1);
            return t.out;
        }
        for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
            Pos qq{&v.c2(), u1v, q};
            Idx a;
            try {
                a = v.u2_at(i1, f, qq);
            } catch (const DeferredSignal&) {
                t.defer(1);
                continue;
            }
            for (Idx p = 0; p < v.c1().pos(a) && !t.stop; ++p) {
                Pos pp{&v.c1(), a, p};
                t.add(guarded([&] { return eq_pos(v.v2_at(i1, f, qq, pp), qq); }),
                      [&] {
                          return "t=" + std::to_string(tt) + " q=" + std::to_string(q) +
                                 " p=" + std::to_string(p);
                      });
            }
        }
        return t.out;
    }));
}

// u2 s (const iota2) = const s ; v1 = p ; v2 = q. Present in every suite
// with a monadic slot2; MndMnd also has the u1 shape form.
void append_unit_t_equations(std::vector<LawEquation>& suite, const LawView& v0, bool with_s1) {
    auto blocksS = scalar_blocks(v0.c1().shape_count());

    if (with_s1) {
        suite.push_back(make_eq("unit-\xCE\xB9T-s1", blocksS, [](const LawView& v, const LawBlock& blk, bool stop) {
            Tally t{{}, stop};
            Idx s = blk.s;
            t.add(guarded([&] {
                      Idx i2 = iota_at(v.slot2->mnd);
                      return v.u1_at(s, const_fam(v.c1(), s, i2)) == i2;
                  }),
                  [&] { return "s=" + std::to_string(s); });
            return t.out;
        }));
    }

    suite.push_back(make_eq("unit-\xCE\xB9T-s2", blocksS, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Idx s = blk.s;
        Idx u1v;
        Fam f;
        try {
            f = const_fam(v.c1(), s, iota_at(v.slot2->mnd));
            u1v = v.u1_at(s, f);
        } catch (const DeferredSignal&) {
            t.defer(1);
            return t.out;
        }
        for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
            t.add(guarded([&] { return v.u2_at(s, f, Pos{&v.c2(), u1v, q}) == s; }),
                  [&] { return "s=" + std::to_string(s) + " q=" + std::to_string(q); });
        }
        return t.out;
    }));

    suite.push_back(make_eq("unit-\xCE\xB9T-p1", blocksS, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Idx s = blk.s;
        Idx u1v;
        Fam f;
        try {
            f = const_fam(v.c1(), s, iota_at(v.slot2->mnd));
            u1v = v.u1_at(s, f);
        } catch (const DeferredSignal&) {
            t.defer(1);
            return t.out;
        }
        for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
            Pos qq{&v.c2(), u1v, q};
            Idx a;
            try {
                a = v.u2_at(s, f, qq);
            } catch (const DeferredSignal&) {
                t.defer(1);
                continue;
            }
            for (Idx p = 0; p < v.c1().pos(a) && !t.stop; ++p) {
                Pos pp{&v.c1(), a, p};
                t.add(guarded([&] { return eq_pos(v.v1_at(s, f, qq, pp), pp); }),
                      [&] {
                          return "s=" + std::to_string(s) + " q=" + std::to_string(q) +
                                 " p=" + std::to_string(p);
                      });
            }
        }
        return t.out;
    }));

    suite.push_back(make_eq("unit-\xCE\xB9T-p2", blocksS, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Idx s = blk.s;
        Idx u1v;
        Fam f;
        try {
            f = const_fam(v.c1(), s, iota_at(v.slot2->mnd));
            u1v = v.u1_at(s, f);
        } catch (const DeferredSignal&) {
            t.defer(1);
            return t.out;
        }
        for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
            Pos qq{&v.c2(), u1v, q};
            Idx a;
            try {
                a = v.u2_at(s, f, qq);
            } catch (const DeferredSignal&) {
                t.defer(1);
                continue;
            }
            for (Idx p = 0; p < v.c1().pos(a) && !t.stop; ++p) {
                Pos pp{&v.c1(), a, p};
                t.add(guarded([&] { return eq_pos(v.v2_at(s, f, qq, pp), qq); }),
                      [&] {
                          return "s=" + std::to_string(s) + " q=" + std::to_string(q) +
                                 " p=" + std::to_string(p);
                      });
            }
        }
        return t.out;
    }));
}

// --- the mul-S block (slot1 monadic): shared by MndMnd and DirMnd ------

void append_mul_s_equations(std::vector<LawEquation>& suite, const LawView& v0) {
    auto blocks = sf_blocks(v0.c1(), v0.c1().shape_count());

    suite.push_back(make_eq("mul-S-s1", blocks, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        MulSFrame fr = mul_s_frame(v, blk);
        if (!fr.sigma_ok) {
            t.defer(fr.gcount);
            return t.out;
        }
        for (Nat gr = 0; gr < fr.gcount && !t.stop; ++gr) {
            unrank_uniform(gr, v.s2_count(), fr.g.vals);
            t.add(guarded([&] {
                      Idx lhs = v.u1_at(fr.s, mul_s_inner_u1(v, fr));
                      Idx rhs = v.u1_at(fr.sigma_sf, mul_s_g_pr(v, fr));
                      return rhs == lhs;
                  }),
                  [&] { return fr.vars(); });
        }
        return t.out;
    }));

    suite.push_back(make_eq("mul-S-s2", blocks, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        MulSFrame fr = mul_s_frame(v, blk);
        if (!fr.sigma_ok) {
            t.defer(fr.gcount);
            return t.out;
        }
        for (Nat gr = 0; gr < fr.gcount && !t.stop; ++gr) {
            unrank_uniform(gr, v.s2_count(), fr.g.vals);
            Fam gpr;
            Idx u1L;
            try {
                gpr = mul_s_g_pr(v, fr);
                u1L = v.u1_at(fr.sigma_sf, gpr);
            } catch (const DeferredSignal&) {
                t.defer(1);
                continue;
            }
            for (Idx q = 0; q < v.c2().pos(u1L) && !t.stop; ++q) {
                Pos qq{&v.c2(), u1L, q};
                t.add(guarded([&] {
                          Idx lhs = v.u2_at(fr.sigma_sf, gpr, qq);
                          Fam ftilde = mul_s_inner_u1(v, fr);
                          Idx a0 = v.u2_at(fr.s, ftilde, qq);
                          Fam fam2v = mul_s_rhs_family(v, fr, ftilde, qq, a0);
                          Idx rhs = sigma_at(v.slot1->mnd, a0, fam2v);
                          return lhs == rhs;
                      }),
                      [&] { return fr.vars() + " q=" + std::to_string(q); });
            }
        }
        return t.out;
    }));

    // The three position laws share the quantifier frame
    //   q < pos2(u1(sigma1 s f, g.pr)), p < pos1(u2(sigma1 s f, g.pr, q)).
    auto pr_family = [](int which) {
        return [which](const LawView& v, const LawBlock& blk, bool stop) {
            Tally t{{}, stop};
            MulSFrame fr = mul_s_frame(v, blk);
            if (!fr.sigma_ok) {
                t.defer(fr.gcount);
                return t.out;
            }
            const Container& c1v = v.c1();
            for (Nat gr = 0; gr < fr.gcount && !t.stop; ++gr) {
                unrank_uniform(gr, v.s2_count(), fr.g.vals);
                Fam gpr;
                Idx u1L;
                try {
                    gpr = mul_s_g_pr(v, fr);
                    u1L = v.u1_at(fr.sigma_sf, gpr);
                } catch (const DeferredSignal&) {
                    t.defer(1);
                    continue;
                }
                for (Idx q = 0; q < v.c2().pos(u1L) && !t.stop; ++q) {
                    Pos qq{&v.c2(), u1L, q};
                    Idx u2L;
                    try {
                        u2L = v.u2_at(fr.sigma_sf, gpr, qq);
                    } catch (const DeferredSignal&) {
                        t.defer(1);
                        continue;
                    }
                    for (Idx p = 0; p < c1v.pos(u2L) && !t.stop; ++p) {
                        Pos pp{&c1v, u2L, p};
                        t.add(guarded([&] {
                                  Pos x = v.v1_at(fr.sigma_sf, gpr, qq, pp);
                                  Fam ftilde = mul_s_inner_u1(v, fr);
                                  Idx a0 = v.u2_at(fr.s, ftilde, qq);
                                  Fam fam2v = mul_s_rhs_family(v, fr, ftilde, qq, a0);
                                  auto [y1, y2] = pr_at(v.slot1->mnd, a0, fam2v, pp);
                                  if (which == 1) {
                                      auto [z1, z2] = pr_at(v.slot1->mnd, fr.s, fr.f, x);
                                      (void)z2;
                                      Pos rhs = v.v1_at(fr.s, ftilde, qq, y1);
                                      return eq_pos(z1, rhs);
                                  }
                                  Pos phat = v.v1_at(fr.s, ftilde, qq, y1);
                                  Pos v2y = v.v2_at(fr.s, ftilde, qq, y1);
                                  Fam sect = fam2_section(fr.g, phat);
                                  if (which == 21) {
                                      auto [z1, z2] = pr_at(v.slot1->mnd, fr.s, fr.f, x);
                                      (void)z1;
                                      Pos rhs = v.v1_at(fr.f.vals[phat.idx], sect, v2y, y2);
                                      return eq_pos(z2, rhs);
                                  }
                                  Pos lhs = v.v2_at(fr.sigma_sf, gpr, qq, pp);
                                  Pos rhs = v.v2_at(fr.f.vals[phat.idx], sect, v2y, y2);
                                  return eq_pos(lhs, rhs);
                              }),
                              [&] {
                                  return fr.vars() + " q=" + std::to_string(q) +
                                         " p=" + std::to_string(p);
                              });
                    }
                }
            }
            return t.out;
        };
    };
    suite.push_back(make_eq("mul-S-p1", blocks, pr_family(1)));
    suite.push_back(make_eq("mul-S-p21", blocks, pr_family(21)));
    suite.push_back(make_eq("mul-S-p22", blocks, pr_family(22)));
}

// --- the mul-T block (slot2 monadic): shared by MndMnd and MndDir ------

void append_mul_t_equations(std::vector<LawEquation>& suite, const LawView& v0, bool with_s1) {
    auto blocks = sf_blocks(v0.c1(), v0.s2_count());

    if (with_s1) {
        suite.push_back(make_eq("mul-T-s1", blocks, [](const LawView& v, const LawBlock& blk, bool stop) {
            Tally t{{}, stop};
            MulTFrame fr = mul_t_frame(v, blk);
            for (Nat gr = 0; gr < fr.gcount && !t.stop; ++gr) {
                unrank_uniform(gr, v.s2_count(), fr.g.vals);
                t.add(guarded([&] {
                          Idx lhs = v.u1_at(fr.s, mul_t_fprime(v, fr));
                          Idx u1sf = v.u1_at(fr.s, fr.f);
                          Idx rhs = sigma_at(v.slot2->mnd, u1sf, mul_t_rhs_family(v, fr, u1sf));
                          return lhs == rhs;
                      }),
                      [&] { return fr.vars(); });
            }
            return t.out;
        }));
    }

    suite.push_back(make_eq("mul-T-s2", blocks, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        MulTFrame fr = mul_t_frame(v, blk);
        for (Nat gr = 0; gr < fr.gcount && !t.stop; ++gr) {
            unrank_uniform(gr, v.s2_count(), fr.g.vals);
            Fam fprime;
            Idx u1L;
            try {
                fprime = mul_t_fprime(v, fr);
                u1L = v.u1_at(fr.s, fprime);
            } catch (const DeferredSignal&) {
                t.defer(1);
                continue;
            }
            for (Idx q = 0; q < v.c2().pos(u1L) && !t.stop; ++q) {
                Pos qq{&v.c2(), u1L, q};
                t.add(guarded([&] {
                          Idx lhs = v.u2_at(fr.s, fprime, qq);
                          Idx u1sf = v.u1_at(fr.s, fr.f);
                          Fam famR = mul_t_rhs_family(v, fr, u1sf);
                          auto [q1, q2] = pr_at(v.slot2->mnd, u1sf, famR, qq);
                          Idx rhs = v.u2_at(v.u2_at(fr.s, fr.f, q1), mul_t_g_after_v(v, fr, q1), q2);
                          return lhs == rhs;
                      }),
                      [&] { return fr.vars() + " q=" + std::to_string(q); });
            }
        }
        return t.out;
    }));

    auto pr_family = [](int which) {
        return [which](const LawView& v, const LawBlock& blk, bool stop) {
            Tally t{{}, stop};
            MulTFrame fr = mul_t_frame(v, blk);
            const Container& c1v = v.c1();
            for (Nat gr = 0; gr < fr.gcount && !t.stop; ++gr) {
                unrank_uniform(gr, v.s2_count(), fr.g.vals);
                Fam fprime;
                Idx u1L;
                try {
                    fprime = mul_t_fprime(v, fr);
                    u1L = v.u1_at(fr.s, fprime);
                } catch (const DeferredSignal&) {
                    t.defer(1);
                    continue;
                }
                for (Idx q = 0; q < v.c2().pos(u1L) && !t.stop; ++q) {
                    Pos qq{&v.c2(), u1L, q};
                    Idx u2L;
                    try {
                        u2L = v.u2_at(fr.s, fprime, qq);
                    } catch (const DeferredSignal&) {
                        t.defer(1);
                        continue;
                    }
                    for (Idx p = 0; p < c1v.pos(u2L) && !t.stop; ++p) {
                        Pos pp{&c1v, u2L, p};
                        t.add(guarded([&] {
                                  Idx u1sf = v.u1_at(fr.s, fr.f);
                                  Fam famR = mul_t_rhs_family(v, fr, u1sf);
                                  auto [q1, q2] = pr_at(v.slot2->mnd, u1sf, famR, qq);
                                  Idx u2v = v.u2_at(fr.s, fr.f, q1);
                                  Fam gv1 = mul_t_g_after_v(v, fr, q1);
                                  if (which == 1) {
                                      Pos inner = v.v1_at(u2v, gv1, q2, pp);
                                      Pos lhs = v.v1_at(fr.s, fr.f, q1, inner);
                                      Pos rhs = v.v1_at(fr.s, fprime, qq, pp);
                                      return eq_pos(lhs, rhs);
                                  }
                                  if (which == 21) {
                                      Pos inner = v.v1_at(u2v, gv1, q2, pp);
                                      Pos lhs = v.v2_at(fr.s, fr.f, q1, inner);
                                      Pos xhat = v.v1_at(fr.s, fprime, qq, pp);
                                      Pos v2f = v.v2_at(fr.s, fprime, qq, pp);
                                      auto [w1, w2] = pr_at(v.slot2->mnd, fr.f.vals[xhat.idx],
                                                            fam2_section(fr.g, xhat), v2f);
                                      (void)w2;
                                      return eq_pos(lhs, w1);
                                  }
                                  Pos lhs = v.v2_at(u2v, gv1, q2, pp);
                                  Pos xhat = v.v1_at(fr.s, fprime, qq, pp);
                                  Pos v2f = v.v2_at(fr.s, fprime, qq, pp);
                                  auto [w1, w2] = pr_at(v.slot2->mnd, fr.f.vals[xhat.idx],
                                                        fam2_section(fr.g, xhat), v2f);
                                  (void)w1;
                                  return eq_pos(lhs, w2);
                              }),
                              [&] {
                                  return fr.vars() + " q=" + std::to_string(q) +
                                         " p=" + std::to_string(p);
                              });
                    }
                }
            }
            return t.out;
        };
    };
    suite.push_back(make_eq("mul-T-p1", blocks, pr_family(1)));
    suite.push_back(make_eq("mul-T-p21", blocks, pr_family(21)));
    suite.push_back(make_eq("mul-T-p22", blocks, pr_family(22)));
}

// --- equations specific to a directed slot1 (MndDir) -------------------

void append_dir_slot1_equations(std::vector<LawEquation>& suite, const LawView& v0) {
    auto blocks = sf_blocks(v0.c1(), v0.s2_count());

    // this one pins u1 outright: u1 s f must read f at the root position
    suite.push_back(make_eq("unit-oS-s", blocks, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Fam f = fam_from_rank(v.c1(), blk.s, blk.frank, v.s2_count());
        t.add(guarded([&] { return v.u1_at(blk.s, f) == f.at(o_at(v.slot1->dir, blk.s)); }),
              [&] { return "s=" + std::to_string(blk.s) + " f=" + format_digits(f.vals); });
        return t.out;
    }));

    suite.push_back(make_eq("unit-oS-p1", blocks, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Fam f = fam_from_rank(v.c1(), blk.s, blk.frank, v.s2_count());
        Idx u1v;
        try {
            u1v = v.u1_at(blk.s, f);
        } catch (const DeferredSignal&) {
            t.defer(1);
            return t.out;
        }
        for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
            Pos qq{&v.c2(), u1v, q};
            t.add(guarded([&] {
                      Idx a = v.u2_at(blk.s, f, qq);
                      return eq_pos(v.v1_at(blk.s, f, qq, o_at(v.slot1->dir, a)),
                                    o_at(v.slot1->dir, blk.s));
                  }),
                  [&] {
                      return "s=" + std::to_string(blk.s) + " f=" + format_digits(f.vals) +
                             " q=" + std::to_string(q);
                  });
        }
        return t.out;
    }));

    suite.push_back(make_eq("unit-oS-p2", blocks, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Fam f = fam_from_rank(v.c1(), blk.s, blk.frank, v.s2_count());
        Idx u1v;
        try {
            u1v = v.u1_at(blk.s, f);
        } catch (const DeferredSignal&) {
            t.defer(1);
            return t.out;
        }
        for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
            Pos qq{&v.c2(), u1v, q};
            t.add(guarded([&] {
                      Idx a = v.u2_at(blk.s, f, qq);
                      return eq_pos(v.v2_at(blk.s, f, qq, o_at(v.slot1->dir, a)), qq);
                  }),
                  [&] {
                      return "s=" + std::to_string(blk.s) + " f=" + format_digits(f.vals) +
                             " q=" + std::to_string(q);
                  });
        }
        return t.out;
    }));

    // down/oplus interaction: u2 s f q | p = u2 (s | v1 q p) (f . (v1 q p +_)) (v2 q p)
    auto mul_s3_family = [](int which) {
        return [which](const LawView& v, const LawBlock& blk, bool stop) {
            Tally t{{}, stop};
            const DirectedContainer& d1 = v.slot1->dir;
            const Container& c1v = v.c1();
            Fam f = fam_from_rank(c1v, blk.s, blk.frank, v.s2_count());
            Idx u1v;
            try {
                u1v = v.u1_at(blk.s, f);
            } catch (const DeferredSignal&) {
                t.defer(1);
                return t.out;
            }
            for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
                Pos qq{&v.c2(), u1v, q};
                Idx u2v;
                try {
                    u2v = v.u2_at(blk.s, f, qq);
                } catch (const DeferredSignal&) {
                    t.defer(1);
                    continue;
                }
                for (Idx p = 0; p < c1v.pos(u2v) && !t.stop; ++p) {
                    Pos pp{&c1v, u2v, p};
                    auto common = [&](auto&& body) {
                        return guarded([&] {
                            Pos x = v.v1_at(blk.s, f, qq, pp);
                            Idx sdx = down_at(d1, x);
                            Fam fam{&c1v, sdx, std::vector<Idx>(c1v.pos(sdx), 0)};
                            for (Idx r = 0; r < c1v.pos(sdx); ++r)
                                fam.vals[r] = f.at(oplus_at(d1, x, Pos{&c1v, sdx, r}));
                            Pos v2v = v.v2_at(blk.s, f, qq, pp);
                            return body(x, sdx, fam, v2v);
                        });
                    };
                    if (which == 3) {
                        t.add(common([&](Pos, Idx sdx, const Fam& fam, Pos v2v) {
                                  Idx lhs = down_at(d1, pp);
                                  return lhs == v.u2_at(sdx, fam, v2v);
                              }),
                              [&] {
                                  return "s=" + std::to_string(blk.s) + " f=" + format_digits(f.vals) +
                                         " q=" + std::to_string(q) + " p=" + std::to_string(p);
                              });
                    } else {
                        Idx dsub;
                        try {
                            dsub = down_at(d1, pp);
                        } catch (const DeferredSignal&) {
                            t.defer(1);
                            continue;
                        }
                        for (Idx p2 = 0; p2 < c1v.pos(dsub) && !t.stop; ++p2) {
                            Pos pp2{&c1v, dsub, p2};
                            t.add(common([&](Pos x, Idx sdx, const Fam& fam, Pos v2v) {
                                      Pos sum = oplus_at(d1, pp, pp2);
                                      Pos inner = v.v1_at(sdx, fam, v2v, pp2);
                                      if (which == 1) {
                                          Pos lhs = v.v1_at(blk.s, f, qq, sum);
                                          return eq_pos(lhs, oplus_at(d1, x, inner));
                                      }
                                      Pos lhs = v.v2_at(blk.s, f, qq, sum);
                                      Pos rhs = v.v2_at(sdx, fam, v2v, pp2);
                                      return eq_pos(lhs, rhs);
                                  }),
                                  [&] {
                                      return "s=" + std::to_string(blk.s) + " f=" +
                                             format_digits(f.vals) + " q=" + std::to_string(q) +
                                             " p=" + std::to_string(p) + " p'=" + std::to_string(p2);
                                  });
                        }
                    }
                }
            }
            return t.out;
        };
    };
    suite.push_back(make_eq("mul-S-s3", blocks, mul_s3_family(3)));
    suite.push_back(make_eq("mul-S-p1", blocks, mul_s3_family(1)));
    suite.push_back(make_eq("mul-S-p2", blocks, mul_s3_family(2)));
}

// --- equations specific to a directed slot2 (DirMnd) -------------------

void append_dir_slot2_equations(std::vector<LawEquation>& suite, const LawView& v0) {
    auto blocks = sf_blocks(v0.c1(), v0.s2_count());

    suite.push_back(make_eq("unit-oT-s", blocks, [](const LawView& v, const LawBlock& blk, bool stop) {
        Tally t{{}, stop};
        Fam f = fam_from_rank(v.c1(), blk.s, blk.frank, v.s2_count());
        t.add(guarded([&] {
                  Idx u1v = v.u1_at(blk.s, f);
                  return v.u2_at(blk.s, f, o_at(v.slot2->dir, u1v)) == blk.s;
              }),
              [&] { return "s=" + std::to_string(blk.s) + " f=" + format_digits(f.vals); });
        return t.out;
    }));

    auto unit_p_family = [](int which) {
        return [which](const LawView& v, const LawBlock& blk, bool stop) {
            Tally t{{}, stop};
            const Container& c1v = v.c1();
            Fam f = fam_from_rank(c1v, blk.s, blk.frank, v.s2_count());
            Idx u1v, a;
            Pos oq;
            try {
                u1v = v.u1_at(blk.s, f);
                oq = o_at(v.slot2->dir, u1v);
                a = v.u2_at(blk.s, f, oq);
            } catch (const DeferredSignal&) {
                t.defer(1);
                return t.out;
            }
            for (Idx p = 0; p < c1v.pos(a) && !t.stop; ++p) {
                Pos pp{&c1v, a, p};
                t.add(guarded([&] {
                          if (which == 1) return eq_pos(v.v1_at(blk.s, f, oq, pp), pp);
                          Pos x = v.v1_at(blk.s, f, oq, pp);
                          return eq_pos(v.v2_at(blk.s, f, oq, pp), o_at(v.slot2->dir, f.at(x)));
                      }),
                      [&] {
                          return "s=" + std::to_string(blk.s) + " f=" + format_digits(f.vals) +
                                 " p=" + std::to_string(p);
                      });
            }
            return t.out;
        };
    };
    suite.push_back(make_eq("unit-oT-p1", blocks, unit_p_family(1)));
    suite.push_back(make_eq("unit-oT-p2", blocks, unit_p_family(2)));

    // u1 s f | q = u1 (u2 s f q) (lambda p. f (v1 q p) | v2 q p)  and friends
    auto mul_family = [](int which) {
        return [which](const LawView& v, const LawBlock& blk, bool stop) {
            Tally t{{}, stop};
            const DirectedContainer& d2 = v.slot2->dir;
            const Container& c1v = v.c1();
            Fam f = fam_from_rank(c1v, blk.s, blk.frank, v.s2_count());
            Idx u1v;
            try {
                u1v = v.u1_at(blk.s, f);
            } catch (const DeferredSignal&) {
                t.defer(1);
                return t.out;
            }
            for (Idx q = 0; q < v.c2().pos(u1v) && !t.stop; ++q) {
                Pos qq{&v.c2(), u1v, q};
                auto subfam = [&]() {
                    Idx u2v = v.u2_at(blk.s, f, qq);
                    Fam fam{&c1v, u2v, std::vector<Idx>(c1v.pos(u2v), 0)};
                    for (Idx r = 0; r < c1v.pos(u2v); ++r) {
                        Pos rr{&c1v, u2v, r};
                        fam.vals[r] = down_at(d2, v.v2_at(blk.s, f, qq, rr));
                    }
                    return std::pair<Idx, Fam>(u2v, fam);
                };
                if (which == 0) {  // mul-T-s1
                    t.add(guarded([&] {
                              Idx lhs = down_at(d2, qq);
                              auto [u2v, fam] = subfam();
                              return lhs == v.u1_at(u2v, fam);
                          }),
                          [&] {
                              return "s=" + std::to_string(blk.s) + " f=" + format_digits(f.vals) +
                                     " q=" + std::to_string(q);
                          });
                    continue;
                }
                Idx dsub;
                try {
                    dsub = down_at(d2, qq);
                } catch (const DeferredSignal&) {
                    t.defer(1);
                    continue;
                }
                for (Idx q2 = 0; q2 < v.c2().pos(dsub) && !t.stop; ++q2) {
                    Pos qq2{&v.c2(), dsub, q2};
                    if (which == 2) {  // mul-T-s2
                        t.add(guarded([&] {
                                  Idx lhs = v.u2_at(blk.s, f, oplus_at(d2, qq, qq2));
                                  auto [u2v, fam] = subfam();
                                  return lhs == v.u2_at(u2v, fam, qq2);
                              }),
                              [&] {
                                  return "s=" + std::to_string(blk.s) + " f=" + format_digits(f.vals) +
                                         " q=" + std::to_string(q) + " q'=" + std::to_string(q2);
                              });
                        continue;
                    }
                    Idx u2qq;
                    Pos sum;
                    try {
                        sum = oplus_at(d2, qq, qq2);
                        u2qq = v.u2_at(blk.s, f, sum);
                    } catch (const DeferredSignal&) {
                        t.defer(1);
                        continue;
                    } catch (const BlockedSignal&) {
                        t.out.blocked = sat_add(t.out.blocked, 1);
                        continue;
                    }
                    for (Idx p = 0; p < c1v.pos(u2qq) && !t.stop; ++p) {
                        Pos pp{&c1v, u2qq, p};
                        t.add(guarded([&] {
                                  auto [u2v, fam] = subfam();
                                  Pos inner = v.v1_at(u2v, fam, qq2, pp);
                                  if (which == 1) {  // mul-T-p1
                                      Pos lhs = v.v1_at(blk.s, f, sum, pp);
                                      return eq_pos(lhs, v.v1_at(blk.s, f, qq, inner));
                                  }
                                  // mul-T-p2
                                  Pos lhs = v.v2_at(blk.s, f, sum, pp);
                                  Pos a = v.v2_at(blk.s, f, qq, inner);
                                  Pos b = v.v2_at(u2v, fam, qq2, pp);
                                  return eq_pos(lhs, oplus_at(d2, a, b));
                              }),
                              [&] {
                                  return "s=" + std::to_string(blk.s) + " f=" + format_digits(f.vals) +
                                         " q=" + std::to_string(q) + " q'=" + std::to_string(q2) +
                                         " p=" + std::to_string(p);
                              });
                    }
                }
            }
            return t.out;
        };
    };
    suite.push_back(make_eq("mul-T-s1", blocks, mul_family(0)));
    suite.push_back(make_eq("mul-T-s2", blocks, mul_family(2)));
    suite.push_back(make_eq("mul-T-p1", blocks, mul_family(1)));
    suite.push_back(make_eq("mul-T-p2", blocks, mul_family(3)));
}

} // namespace

std::vector<LawEquation> build_law_suite(const LawView& v) {
    std::vector<LawEquation> suite;
    switch (v.kind) {
    case LawKind::MndMnd:
        append_unit_s_equations(suite, v);
        append_unit_t_equations(suite, v, /*with_s1=*/true);
        append_mul_s_equations(suite, v);
        append_mul_t_equations(suite, v, /*with_s1=*/true);
        break;
    case LawKind::MndDir:
        append_dir_slot1_equations(suite, v);
        append_unit_t_equations(suite, v, /*with_s1=*/false);
        append_mul_t_equations(suite, v, /*with_s1=*/false);
        break;
    case LawKind::DirMnd:
        append_unit_s_equations(suite, v);
        append_mul_s_equations(suite, v);
        append_dir_slot2_equations(suite, v);
        break;
    }
    return suite;
}

EquationReport run_law_suite(const LawView& v, const ExecPolicy& policy) {
    EquationReport rep;
    rep.bounded_domain = v.c1().fueled || v.c2().fueled;
    auto suite = build_law_suite(v);
    for (const LawEquation& eq : suite) {
        std::string note;
        if (v.kind == LawKind::MndDir && eq.tag == kDeterminingTag) note = "determining";
        rep.equations.push_back(sweep_blocks(
            eq.tag, eq.blocks.size(),
            [&](Nat b) { return eq.eval(v, eq.blocks[static_cast<std::size_t>(b)], false); },
            policy, note));
    }
    return rep;
}

static EquationReport check_with_kind(const DistLawData& law, LawKind kind, const ExecPolicy& policy) {
    if (law.kind != kind) throw Error(std::string("law kind mismatch: expected ") + law_kind_name(kind));
    validate_law(law);
    DenseLawAccess acc(law);
    return run_law_suite(view_of(law, acc), policy);
}

EquationReport check_mnd_mnd(const DistLawData& law, const ExecPolicy& policy) {
    return check_with_kind(law, LawKind::MndMnd, policy);
}
EquationReport check_mnd_dir(const DistLawData& law, const ExecPolicy& policy) {
    return check_with_kind(law, LawKind::MndDir, policy);
}
EquationReport check_dir_mnd(const DistLawData& law, const ExecPolicy& policy) {
    return check_with_kind(law, LawKind::DirMnd, policy);
}
EquationReport check_law(const DistLawData& law, const ExecPolicy& policy) {
    return check_with_kind(law, law.kind, policy);
}

Elem law_gamma(const DistLawData& law, const Elem& e) {
    if (law.kind != LawKind::MndMnd) throw Error("law_gamma: mnd-mnd law required");
    const Container& c1 = law.c1();
    const Container& c2 = law.c2();
    if (!c1.valid_shape(e.head) || e.kids.size() != c1.pos(e.head))
        throw Error("law_gamma: malformed element");
    Idx s = e.head;
    std::vector<Idx> fvals;
    fvals.reserve(e.kids.size());
    for (const Elem& k : e.kids) {
        if (!c2.valid_shape(k.head) || k.kids.size() != c2.pos(k.head))
            throw Error("law_gamma: malformed nested element");
        fvals.push_back(k.head);
    }
    Nat fr = rank_uniform(fvals, c2.shape_count());
    Idx t = law.u1[s][fr];
    if (t == kNoIdx) throw Error("law_gamma: entry beyond fuel");
    Elem out{t, {}};
    out.kids.reserve(c2.pos(t));
    for (Idx q = 0; q < c2.pos(t); ++q) {
        Idx a = law.u2[s][fr][q];
        if (a == kNoIdx) throw Error("law_gamma: entry beyond fuel");
        Elem mid{a, {}};
        mid.kids.reserve(c1.pos(a));
        for (Idx p = 0; p < c1.pos(a); ++p) {
            Idx x = law.v1[s][fr][q][p];
            Idx y = law.v2[s][fr][q][p];
            if (x == kNoIdx || y == kNoIdx) throw Error("law_gamma: entry beyond fuel");
            mid.kids.push_back(e.kids[x].kids[y]);
        }
        out.kids.push_back(std::move(mid));
    }
    return out;
}

EquationReport beck_oracle(const DistLawData& law, std::span<const Idx> sizes,
                           const ExecPolicy& policy) {
    if (law.kind != LawKind::MndMnd) throw Error("beck_oracle: mnd-mnd law required");
    if (law.c1().fueled || law.c2().fueled) throw Error("beck_oracle: finite slots required");
    validate_law(law);
    const MonadicContainer& inner = law.slot1.mnd;
    const MonadicContainer& outer = law.slot2.mnd;
    const Container& ci = inner.base;
    const Container& co = outer.base;

    struct Layer {
        Idx n;
        std::vector<Elem> sx, tx, tsx, ttsx, tssx;
    };
    std::vector<Layer> layers;
    for (Idx n : sizes) {
        Layer l;
        l.n = n;
        auto x = enumerate_atoms(n);
        l.sx = enumerate_ext(co, x);
        l.tx = enumerate_ext(ci, x);
        l.tsx = enumerate_ext(ci, l.sx);
        l.ttsx = enumerate_ext(ci, l.tsx);
        auto ssx = enumerate_ext(co, l.sx);
        l.tssx = enumerate_ext(ci, ssx);
        layers.push_back(std::move(l));
    }

    EquationReport rep;
    auto gam = [&](const Elem& e) { return law_gamma(law, e); };

    auto run = [&](const char* tag, auto member, auto&& eval) {
        std::vector<std::pair<std::size_t, std::size_t>> blocks;
        for (std::size_t li = 0; li < layers.size(); ++li)
            for (std::size_t i = 0; i < (layers[li].*member).size(); ++i) blocks.emplace_back(li, i);
        rep.equations.push_back(sweep_blocks(
            tag, blocks.size(),
            [&](Nat b) {
                auto [li, i] = blocks[static_cast<std::size_t>(b)];
                const Elem& e = (layers[li].*member)[i];
                BlockOutcome o;
                bool ok = eval(e);
                o.checked = 1;
                if (!ok)
                    o.failure = Counterexample{
                        "|X|=" + std::to_string(layers[li].n) + " e=" + format_elem(e), "", 0, 0};
                return o;
            },
            policy));
    };

    // gamma . eta_inner = map eta_inner under the outer layer
    run("unit-inner", &Layer::sx, [&](const Elem& e) {
        Elem lhs = gam(eta_elem(inner, e));
        Elem rhs = map_at_depth(e, 1, [&](const Elem& k) { return eta_elem(inner, k); });
        return lhs == rhs;
    });

    // gamma . map eta_outer = eta_outer
    run("unit-outer", &Layer::tx, [&](const Elem& e) {
        Elem lifted = map_at_depth(e, 1, [&](const Elem& k) { return eta_elem(outer, k); });
        return gam(lifted) == eta_elem(outer, e);
    });

    // gamma . mu_inner = map mu_inner . gamma . map gamma
    run("mul-inner", &Layer::ttsx, [&](const Elem& e) {
        Elem lhs = gam(mu_elem(inner, e));
        Elem rhs = map_at_depth(gam(map_at_depth(e, 1, gam)), 1,
                                [&](const Elem& k) { return mu_elem(inner, k); });
        return lhs == rhs;
    });

    // gamma . map mu_outer = mu_outer . map gamma . gamma
    run("mul-outer", &Layer::tssx, [&](const Elem& e) {
        Elem lhs = gam(map_at_depth(e, 1, [&](const Elem& k) { return mu_elem(outer, k); }));
        Elem rhs = mu_elem(outer, map_at_depth(gam(e), 1, gam));
        return lhs == rhs;
    });

    // naturality in the underlying set
    {
        struct NatBlock {
            std::size_t lx, ly;
            Nat hrank;
        };
        std::vector<NatBlock> blocks;
        for (std::size_t lx = 0; lx < layers.size(); ++lx)
            for (std::size_t ly = 0; ly < layers.size(); ++ly) {
                Nat hcount = sat_pow(layers[ly].n, layers[lx].n);
                for (Nat h = 0; h < hcount; ++h) blocks.push_back({lx, ly, h});
            }
        rep.equations.push_back(sweep_blocks(
            "naturality", blocks.size(),
            [&](Nat b) {
                const NatBlock& nb = blocks[static_cast<std::size_t>(b)];
                const Layer& LX = layers[nb.lx];
                const Layer& LY = layers[nb.ly];
                std::vector<Idx> h(LX.n, 0);
                unrank_uniform(nb.hrank, LY.n, h);
                auto at_leaves = [&](const Elem& e) {
                    return map_at_depth(e, 2, [&](const Elem& k) { return leaf(h[k.head]); });
                };
                BlockOutcome o;
                for (const Elem& e : LX.tsx) {
                    Elem lhs = gam(at_leaves(e));
                    Elem rhs = map_at_depth(gam(e), 2, [&](const Elem& k) { return leaf(h[k.head]); });
                    o.checked = sat_add(o.checked, 1);
                    if (lhs != rhs && !o.failure) {
                        o.failure = Counterexample{"|X|=" + std::to_string(LX.n) + " |Y|=" +
                                                       std::to_string(LY.n) + " h=" + format_digits(h) +
                                                       " e=" + format_elem(e),
                                                   "", 0, 0};
                    }
                }
                return o;
            },
            policy));
    }

    return rep;
}

} // namespace contlab
