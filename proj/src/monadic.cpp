#include "contlab/monadic.hpp"

#include <set>

namespace contlab {

void validate_monadic(const MonadicContainer& m) {
    const Container& c = m.base;
    Idx S = c.shape_count();
    if (m.iota == kNoIdx) {
        if (!c.fueled) throw Error("monadic: unit shape missing on a finite container");
    } else if (m.iota >= S) {
        throw Error("monadic: unit shape out of range");
    }
    if (m.sigma.size() != S || m.pr.size() != S)
        throw Error("monadic: sigma/pr table shape count mismatch");
    for (Idx s = 0; s < S; ++s) {
        Nat fams = sat_pow(S, c.pos(s));
        if (m.sigma[s].size() != fams || m.pr[s].size() != fams)
            throw Error("monadic: family row count mismatch at shape " + std::to_string(s));
        std::vector<Idx> fam(c.pos(s), 0);
        for (Nat r = 0; r < fams; ++r) {
            Idx out = m.sigma[s][r];
            if (out == kNoIdx) {
                if (!c.fueled) throw Error("monadic: missing sigma entry on a finite container");
                if (!m.pr[s][r].empty()) throw Error("monadic: pr row present for out-of-fuel sigma");
            } else {
                if (out >= S) throw Error("monadic: sigma entry out of range");
                if (m.pr[s][r].size() != c.pos(out))
                    throw Error("monadic: pr row length mismatch at shape " + std::to_string(s) +
                                " family " + std::to_string(r));
                for (auto [p1, p2] : m.pr[s][r]) {
                    if (p1 >= c.pos(s)) throw Error("monadic: pr first component out of range");
                    if (p2 >= c.pos(fam[p1])) throw Error("monadic: pr second component out of range");
                }
            }
            for (std::size_t i = fam.size(); i-- > 0;) {
                if (++fam[i] < S) break;
                fam[i] = 0;
            }
        }
    }
}

Idx iota_at(const MonadicContainer& m) {
    if (m.iota == kNoIdx) throw DeferredSignal{};
    return m.iota;
}

Idx sigma_at(const MonadicContainer& m, Idx s, const Fam& f) {
    if (f.cont != &m.base || f.shape != s) throw BlockedSignal{};
    Nat r = rank_uniform(f.vals, m.shape_count());
    Idx out = m.sigma[s][r];
    if (out == kNoIdx) throw DeferredSignal{};
    return out;
}

std::pair<Pos, Pos> pr_at(const MonadicContainer& m, Idx s, const Fam& f, const Pos& p) {
    Idx out = sigma_at(m, s, f);
    if (p.cont != &m.base || p.shape != out) throw BlockedSignal{};
    Nat r = rank_uniform(f.vals, m.shape_count());
    auto [p1, p2] = m.pr[s][r][p.idx];
    return {Pos{&m.base, s, p1}, Pos{&m.base, f.vals[p1], p2}};
}

Fam fam_from_rank(const Container& c, Idx shape, Nat rank, Idx radix) {
    Fam f{&c, shape, std::vector<Idx>(c.pos(shape), 0)};
    unrank_uniform(rank, radix, f.vals);
    return f;
}

std::vector<std::pair<Idx, Nat>> shape_family_blocks(const Container& c, Idx codomain) {
    std::vector<std::pair<Idx, Nat>> blocks;
    for (Idx s = 0; s < c.shape_count(); ++s) {
        Nat fams = sat_pow(codomain, c.pos(s));
        if (fams > 20'000'000) throw Error("family space too large to enumerate");
        for (Nat r = 0; r < fams; ++r) blocks.emplace_back(s, r);
    }
    return blocks;
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
}

void tally(BlockOutcome& o, Outcome r, const std::function<std::string()>& bindings, Nat inner) {
    switch (r) {
    case Outcome::Pass: o.checked = sat_add(o.checked, 1); break;
    case Outcome::Fail:
        o.checked = sat_add(o.checked, 1);
        if (!o.failure) o.failure = Counterexample{bindings(), "", 0, inner};
        break;
    case Outcome::Blocked: o.blocked = sat_add(o.blocked, 1); break;
    case Outcome::Deferred: o.deferred = sat_add(o.deferred, 1); break;
    }
}

struct MndCheck {
    const MonadicContainer& m;
    const Container& c;
    Idx S;

    std::string svar(Idx s) const { return "s=" + std::to_string(s); }

    // sigma iota (const s) = s
    BlockOutcome unit_sigma_left(Nat b) const {
        BlockOutcome o;
        Idx s = static_cast<Idx>(b);
        auto r = guarded([&] { return sigma_at(m, iota_at(m), const_fam(c, iota_at(m), s)) == s; });
        tally(o, r, [&] { return svar(s); }, 0);
        return o;
    }

    // sigma s (const iota) = s
    BlockOutcome unit_sigma_right(Nat b) const {
        BlockOutcome o;
        Idx s = static_cast<Idx>(b);
        auto r = guarded([&] { return sigma_at(m, s, const_fam(c, s, iota_at(m))) == s; });
        tally(o, r, [&] { return svar(s); }, 0);
        return o;
    }

    // pr2 {iota}{const s} p = p
    BlockOutcome unit_pr_left(Nat b) const {
        BlockOutcome o;
        Idx s = static_cast<Idx>(b);
        Idx out;
        Fam f;
        try {
            f = const_fam(c, iota_at(m), s);
            out = sigma_at(m, iota_at(m), f);
        } catch (const DeferredSignal&) {
            o.deferred = 1;
            return o;
        }
        for (Idx p = 0; p < c.pos(out); ++p) {
            auto r = guarded([&] {
                Pos pp{&c, out, p};
                auto [a, bpos] = pr_at(m, m.iota, f, pp);
                (void)a;
                return eq_pos(bpos, pp);
            });
            tally(o, r, [&] { return svar(s) + " p=" + std::to_string(p); }, p);
        }
        return o;
    }

    // pr1 {s}{const iota} p = p
    BlockOutcome unit_pr_right(Nat b) const {
        BlockOutcome o;
        Idx s = static_cast<Idx>(b);
        Idx out;
        Fam f;
        try {
            f = const_fam(c, s, iota_at(m));
            out = sigma_at(m, s, f);
        } catch (const DeferredSignal&) {
            o.deferred = 1;
            return o;
        }
        for (Idx p = 0; p < c.pos(out); ++p) {
            auto r = guarded([&] {
                Pos pp{&c, out, p};
                auto [a, b2] = pr_at(m, s, f, pp);
                (void)b2;
                return eq_pos(a, pp);
            });
            tally(o, r, [&] { return svar(s) + " p=" + std::to_string(p); }, p);
        }
        return o;
    }

    // Shared frame for the associativity family: s, f : P s -> S,
    // g : (sum_p P(f p)) -> S.
    struct AssocFrame {
        Idx s;
        Fam f;
        Fam2 g;
        Nat gcount;
        bool sigma_sf_ok = false;
        Idx sigma_sf = 0;
        const std::vector<std::pair<Idx, Idx>>* prrow = nullptr;
        Fam scratch_lhs, scratch_rhs;
    };

    bool frame_init(AssocFrame& fr, const std::pair<Idx, Nat>& blk) const {
        fr.s = blk.first;
        fr.f = fam_from_rank(c, blk.first, blk.second, S);
        fr.g = make_fam2_space(c, fr.s, fr.f, c);
        fr.gcount = sat_pow(S, fr.g.total());
        Idx out = m.sigma[fr.s][blk.second];
        fr.sigma_sf_ok = out != kNoIdx;
        fr.sigma_sf = out;
        if (fr.sigma_sf_ok) fr.prrow = &m.pr[fr.s][blk.second];
        return fr.sigma_sf_ok;
    }

    std::string frame_vars(const AssocFrame& fr) const {
        return svar(fr.s) + " f=" + format_digits(fr.f.vals) + " g=" + format_digits(fr.g.vals);
    }

    // Left side family p |-> sigma (f p) (g . (p,-)); deferral propagates.
    // Family values are read straight off the tables: each application is
    // well-indexed by construction.
    const Fam& lhs_family(AssocFrame& fr) const {
        Fam& lf = fr.scratch_lhs;
        lf.cont = &c;
        lf.shape = fr.s;
        lf.vals.resize(c.pos(fr.s));
        for (Idx p = 0; p < c.pos(fr.s); ++p) {
            Idx fs = fr.f.vals[p];
            Nat rank = 0;
            Idx width = c.pos(fs);
            const Idx* sect = fr.g.vals.data() + fr.g.offsets[p];
            for (Idx k = 0; k < width; ++k) rank = rank * S + sect[k];
            Idx out = m.sigma[fs][rank];
            if (out == kNoIdx) throw DeferredSignal{};
            lf.vals[p] = out;
        }
        return lf;
    }

    // Right side family g . pr over positions of sigma(s, f).
    const Fam& rhs_family(AssocFrame& fr) const {
        Fam& rf = fr.scratch_rhs;
        rf.cont = &c;
        rf.shape = fr.sigma_sf;
        rf.vals.resize(c.pos(fr.sigma_sf));
        for (Idx p = 0; p < c.pos(fr.sigma_sf); ++p) {
            auto [a, b] = (*fr.prrow)[p];
            rf.vals[p] = fr.g.vals[fr.g.offsets[a] + b];
        }
        return rf;
    }

    BlockOutcome sigma_assoc(Nat bi, const std::vector<std::pair<Idx, Nat>>& blocks) const {
        BlockOutcome o;
        AssocFrame fr;
        if (!frame_init(fr, blocks[static_cast<std::size_t>(bi)])) {
            o.deferred = fr.gcount;
            return o;
        }
        for (Nat gr = 0; gr < fr.gcount; ++gr) {
            unrank_uniform(gr, S, fr.g.vals);
            auto r = guarded([&] {
                Idx lhs = sigma_at(m, fr.s, lhs_family(fr));
                Idx rhs = sigma_at(m, fr.sigma_sf, rhs_family(fr));
                return lhs == rhs;
            });
            tally(o, r, [&] { return frame_vars(fr); }, gr);
        }
        return o;
    }

    // The three position associativity laws share their instance frame:
    // p ranges over positions of sigma(sigma(s,f), g.pr).
    template <class Eval>
    BlockOutcome pr_assoc(Nat bi, const std::vector<std::pair<Idx, Nat>>& blocks, Eval&& eval) const {
        BlockOutcome o;
        AssocFrame fr;
        if (!frame_init(fr, blocks[static_cast<std::size_t>(bi)])) {
            o.deferred = fr.gcount;
            return o;
        }
        Fam grp, lhsf;
        for (Nat gr = 0; gr < fr.gcount; ++gr) {
            unrank_uniform(gr, S, fr.g.vals);
            Idx sigma2;
            try {
                grp = rhs_family(fr);
                sigma2 = sigma_at(m, fr.sigma_sf, grp);
            } catch (const DeferredSignal&) {
                o.deferred = sat_add(o.deferred, 1);
                continue;
            }
            bool lhs_ready = false;
            try {
                lhsf = lhs_family(fr);
                lhs_ready = true;
            } catch (const DeferredSignal&) {
            }
            if (!lhs_ready) {
                o.deferred = sat_add(o.deferred, c.pos(sigma2));
                continue;
            }
            for (Idx p = 0; p < c.pos(sigma2); ++p) {
                auto r = guarded([&] { return eval(fr, lhsf, grp, Pos{&c, sigma2, p}); });
                tally(o, r, [&] { return frame_vars(fr) + " p=" + std::to_string(p); }, gr * 64 + p);
            }
        }
        return o;
    }
};

} // namespace

EquationReport check_monadic(const MonadicContainer& m, const ExecPolicy& policy) {
    validate_monadic(m);
    const Container& c = m.base;
    MndCheck ck{m, c, m.shape_count()};
    EquationReport rep;
    rep.bounded_domain = c.fueled;

    Nat S = m.shape_count();
    rep.equations.push_back(sweep_blocks(
        "sigma-unit-l", S, [&](Nat b) { return ck.unit_sigma_left(b); }, policy));
    rep.equations.push_back(sweep_blocks(
        "sigma-unit-r", S, [&](Nat b) { return ck.unit_sigma_right(b); }, policy));
    rep.equations.push_back(sweep_blocks(
        "pr-unit-l", S, [&](Nat b) { return ck.unit_pr_left(b); }, policy));
    rep.equations.push_back(sweep_blocks(
        "pr-unit-r", S, [&](Nat b) { return ck.unit_pr_right(b); }, policy));

    auto blocks = shape_family_blocks(c, m.shape_count());
    Nat nb = blocks.size();
    rep.equations.push_back(sweep_blocks(
        "sigma-assoc", nb, [&](Nat b) { return ck.sigma_assoc(b, blocks); }, policy));

    // pr1 p = pr1 (pr1 p)
    rep.equations.push_back(sweep_blocks(
        "pr-assoc-1", nb,
        [&](Nat b) {
            return ck.pr_assoc(
                b, blocks,
                [&](MndCheck::AssocFrame& fr, const Fam& lhsf, const Fam& grp, Pos p) {
                    auto [a1, a2] = pr_at(m, fr.s, lhsf, p);
                    (void)a2;
                    auto [y1, y2] = pr_at(m, fr.sigma_sf, grp, p);
                    (void)y2;
                    auto [z1, z2] = pr_at(m, fr.s, fr.f, y1);
                    (void)z2;
                    return eq_pos(a1, z1);
                });
        },
        policy));

    // pr1 (pr2 p) = pr2 (pr1 p)
    rep.equations.push_back(sweep_blocks(
        "pr-assoc-21", nb,
        [&](Nat b) {
            return ck.pr_assoc(
                b, blocks,
                [&](MndCheck::AssocFrame& fr, const Fam& lhsf, const Fam& grp, Pos p) {
                    auto [p1, p2] = pr_at(m, fr.s, lhsf, p);
                    Fam sect = fam2_section(fr.g, p1);
                    auto [w1, w2] = pr_at(m, fr.f.vals[p1.idx], sect, p2);
                    (void)w2;
                    auto [y1, y2] = pr_at(m, fr.sigma_sf, grp, p);
                    (void)y2;
                    auto [z1, z2] = pr_at(m, fr.s, fr.f, y1);
                    (void)z1;
                    return eq_pos(w1, z2);
                });
        },
        policy));

    // pr2 (pr2 p) = pr2 p
    rep.equations.push_back(sweep_blocks(
        "pr-assoc-22", nb,
        [&](Nat b) {
            return ck.pr_assoc(
                b, blocks,
                [&](MndCheck::AssocFrame& fr, const Fam& lhsf, const Fam& grp, Pos p) {
                    auto [p1, p2] = pr_at(m, fr.s, lhsf, p);
                    Fam sect = fam2_section(fr.g, p1);
                    auto [w1, w2] = pr_at(m, fr.f.vals[p1.idx], sect, p2);
                    (void)w1;
                    auto [y1, y2] = pr_at(m, fr.sigma_sf, grp, p);
                    (void)y1;
                    return eq_pos(w2, y2);
                });
        },
        policy));

    return rep;
}

Elem eta_elem(const MonadicContainer& m, const Elem& below) {
    Idx i = iota_at(m);
    Elem e{i, {}};
    e.kids.assign(m.base.pos(i), below);
    return e;
}

Elem mu_elem(const MonadicContainer& m, const Elem& nested) {
    const Container& c = m.base;
    if (!c.valid_shape(nested.head) || nested.kids.size() != c.pos(nested.head))
        throw Error("mu: malformed nested element");
    Fam f{&c, nested.head, {}};
    f.vals.reserve(nested.kids.size());
    for (const Elem& k : nested.kids) {
        if (!c.valid_shape(k.head) || k.kids.size() != c.pos(k.head))
            throw Error("mu: malformed inner element");
        f.vals.push_back(k.head);
    }
    Idx out = sigma_at(m, nested.head, f);
    Elem res{out, {}};
    res.kids.reserve(c.pos(out));
    for (Idx p = 0; p < c.pos(out); ++p) {
        auto [a, b] = pr_at(m, nested.head, f, Pos{&c, out, p});
        res.kids.push_back(nested.kids[a.idx].kids[b.idx]);
    }
    return res;
}

namespace {

// Extension elements over an n-element collection, as canonical indices:
// shape-major, fills ranked with radix n. Offsets are precomputed per layer.
struct ExtLayer {
    Nat n = 0;               // size of the underlying collection
    std::vector<Nat> offsets;  // per shape, plus a final total
    Nat total() const { return offsets.back(); }
};

struct IndexedExt {
    const MonadicContainer& m;

    ExtLayer layer(Nat n) const {
        ExtLayer l;
        l.n = n;
        l.offsets.assign(m.shape_count() + 1, 0);
        for (Idx s = 0; s < m.shape_count(); ++s)
            l.offsets[s + 1] = sat_add(l.offsets[s], sat_pow(n, m.base.pos(s)));
        return l;
    }

    std::pair<Idx, Nat> decode(const ExtLayer& l, Nat idx) const {
        Idx s = 0;
        while (idx >= l.offsets[s + 1]) ++s;
        return {s, idx - l.offsets[s]};
    }

    Nat eta(const ExtLayer& l, Nat x) const {
        Idx i = m.iota;
        Nat rank = 0;
        for (Idx p = 0; p < m.base.pos(i); ++p) rank = rank * l.n + x;
        return l.offsets[i] + rank;
    }

    // in: index over layer(top) whose fills point into layer(in); the inner
    // fills are ranked with radix in.n
    Nat mu(const ExtLayer& in, const ExtLayer& top, Nat idx) const {
        auto [s, topfill] = decode(top, idx);
        Idx np = m.base.pos(s);
        std::vector<Nat> ffill(np);
        std::vector<Idx> fshape(np);
        for (Idx p = np; p-- > 0;) {
            auto [is, ifill] = decode(in, topfill % top.n);
            topfill /= top.n;
            fshape[p] = is;
            ffill[p] = ifill;
        }
        Nat frank = rank_uniform(fshape, m.shape_count());
        Idx out = m.sigma[s][frank];
        const auto& prrow = m.pr[s][frank];
        Nat rank = 0;
        for (Idx p2 = 0; p2 < m.base.pos(out); ++p2) {
            auto [a, b] = prrow[p2];
            // digit b of the fill of inner element a
            Nat fill = ffill[a];
            Idx width = m.base.pos(fshape[a]);
            Nat digit = 0;
            for (Idx k = width; k-- > 0;) {
                digit = fill % in.n;
                fill /= in.n;
                if (k == b) break;
            }
            rank = rank * in.n + digit;
        }
        return l_encode(in, out, rank);
    }

    Nat l_encode(const ExtLayer& l_over, Idx s, Nat rank) const {
        // encodes into the layer whose underlying collection is l_over's
        return l_over.offsets[s] + rank;
    }

    // functor action on fills: apply h to every digit, re-ranking into the
    // output layer
    Nat map_fill(const ExtLayer& l_in, const ExtLayer& l_out, const std::function<Nat(Nat)>& h,
                 Nat idx) const {
        auto [s, fill] = decode(l_in, idx);
        Idx np = m.base.pos(s);
        std::vector<Nat> digits(np);
        for (Idx p = np; p-- > 0;) {
            digits[p] = fill % l_in.n;
            fill /= l_in.n;
        }
        Nat rank = 0;
        for (Idx p = 0; p < np; ++p) rank = rank * l_out.n + h(digits[p]);
        return l_out.offsets[s] + rank;
    }
};

} // namespace

EquationReport monad_laws_oracle(const MonadicContainer& m, std::span<const Idx> sizes,
                                 const ExecPolicy& policy) {
    if (m.base.fueled) throw Error("monad_laws_oracle: finite container required");
    validate_monadic(m);
    IndexedExt ext{m};

    struct Stack {
        Idx n;
        ExtLayer l1, l2, l3;
    };
    std::vector<Stack> stacks;
    for (Idx n : sizes) {
        Stack st;
        st.n = n;
        st.l1 = ext.layer(n);
        st.l2 = ext.layer(st.l1.total());
        st.l3 = ext.layer(st.l2.total());
        stacks.push_back(std::move(st));
    }

    EquationReport rep;
    auto run = [&](const char* tag, int levels, auto&& eval) {
        struct Block {
            const Stack* st;
            Nat lo, hi;
        };
        std::vector<Block> blocks;
        for (const Stack& st : stacks) {
            Nat total = levels == 1 ? st.l1.total() : st.l3.total();
            // chunked so sweeps stay parallelizable on big layers
            Nat chunk = std::max<Nat>(1, total / 64);
            for (Nat lo = 0; lo < total; lo += chunk)
                blocks.push_back({&st, lo, std::min(total, lo + chunk)});
        }
        rep.equations.push_back(sweep_blocks(
            tag, blocks.size(),
            [&](Nat b) {
                const Block& blk = blocks[static_cast<std::size_t>(b)];
                BlockOutcome o;
                for (Nat i = blk.lo; i < blk.hi; ++i) {
                    o.checked = sat_add(o.checked, 1);
                    if (!eval(*blk.st, i) && !o.failure) {
                        o.failure = Counterexample{
                            "|X|=" + std::to_string(blk.st->n) + " element #" + std::to_string(i), "",
                            0, 0};
                    }
                }
                return o;
            },
            policy));
    };

    run("monad-unit-l", 1, [&](const Stack& st, Nat e) {
        // eta at the once-iterated extension, then mu
        Idx i = m.iota;
        Nat rank = 0;
        for (Idx p = 0; p < m.base.pos(i); ++p) rank = rank * st.l2.n + e;
        return ext.mu(st.l1, st.l2, st.l2.offsets[i] + rank) == e;
    });
    run("monad-unit-r", 1, [&](const Stack& st, Nat e) {
        Nat lifted = ext.map_fill(st.l1, st.l2, [&](Nat x) { return ext.eta(st.l1, x); }, e);
        return ext.mu(st.l1, st.l2, lifted) == e;
    });
    run("monad-assoc", 3, [&](const Stack& st, Nat e) {
        Nat lhs = ext.mu(st.l1, st.l2, ext.mu(st.l2, st.l3, e));
        Nat rhs = ext.mu(st.l1, st.l2,
                         ext.map_fill(st.l3, st.l2, [&](Nat x) { return ext.mu(st.l1, st.l2, x); }, e));
        return lhs == rhs;
    });
    return rep;
}

SigmaUniverseResult check_sigma_universe(const MonadicContainer& m) {
    validate_monadic(m);
    const Container& c = m.base;
    SigmaUniverseResult res;
    res.bounded = c.fueled;
    res.is_universe = true;

    if (m.iota == kNoIdx) {
        res.is_universe = false;
        res.failures.push_back("unit shape out of fuel");
        return res;
    }
    if (c.pos(m.iota) != 1) {
        res.is_universe = false;
        res.failures.push_back("unit shape has " + std::to_string(c.pos(m.iota)) +
                               " positions, expected 1");
    }

    Idx S = m.shape_count();
    for (Idx s = 0; s < S; ++s) {
        std::vector<Idx> fam(c.pos(s), 0);
        for (Nat r = 0; r < m.sigma[s].size(); ++r) {
            Idx out = m.sigma[s][r];
            if (out != kNoIdx) {
                Nat target = 0;
                for (Idx p : fam) target += c.pos(p);
                if (c.pos(out) != target) {
                    res.is_universe = false;
                    res.failures.push_back("pr not surjective at s=" + std::to_string(s) + " f=" +
                                           format_digits(fam));
                } else {
                    std::set<std::pair<Idx, Idx>> seen;
                    for (auto pq : m.pr[s][r]) seen.insert(pq);
                    if (seen.size() != m.pr[s][r].size()) {
                        res.is_universe = false;
                        res.failures.push_back("pr not injective at s=" + std::to_string(s) +
                                               " f=" + format_digits(fam));
                    }
                }
            }
            for (std::size_t i = fam.size(); i-- > 0;) {
                if (++fam[i] < S) break;
                fam[i] = 0;
            }
        }
    }
    return res;
}

} // namespace contlab
