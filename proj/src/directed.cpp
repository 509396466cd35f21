#include "contlab/directed.hpp"

namespace contlab {

void validate_directed(const DirectedContainer& d) {
    const Container& c = d.base;
    Idx S = c.shape_count();
    if (d.o.size() != S || d.down.size() != S || d.oplus.size() != S)
        throw Error("directed: table shape count mismatch");
    for (Idx s = 0; s < S; ++s) {
        if (c.pos(s) == 0) throw Error("directed: every shape needs a root position");
        if (d.o[s] >= c.pos(s)) throw Error("directed: root position out of range");
        if (d.down[s].size() != c.pos(s) || d.oplus[s].size() != c.pos(s))
            throw Error("directed: down/oplus row length mismatch");
        for (Idx p = 0; p < c.pos(s); ++p) {
            Idx sub = d.down[s][p];
            if (sub == kNoIdx) {
                if (!c.fueled) throw Error("directed: missing down entry on a finite container");
                if (!d.oplus[s][p].empty()) throw Error("directed: oplus row present beyond fuel");
                continue;
            }
            if (sub >= S) throw Error("directed: down entry out of range");
            if (d.oplus[s][p].size() != c.pos(sub))
                throw Error("directed: oplus row length mismatch at s=" + std::to_string(s));
            for (Idx v : d.oplus[s][p])
                if (v >= c.pos(s)) throw Error("directed: oplus entry out of range");
        }
    }
}

Pos o_at(const DirectedContainer& d, Idx s) { return Pos{&d.base, s, d.o[s]}; }

Idx down_at(const DirectedContainer& d, const Pos& p) {
    if (p.cont != &d.base) throw BlockedSignal{};
    Idx sub = d.down[p.shape][p.idx];
    if (sub == kNoIdx) throw DeferredSignal{};
    return sub;
}

Pos oplus_at(const DirectedContainer& d, const Pos& p, const Pos& p2) {
    Idx sub = down_at(d, p);
    if (p2.cont != &d.base || p2.shape != sub) throw BlockedSignal{};
    return Pos{&d.base, p.shape, d.oplus[p.shape][p.idx][p2.idx]};
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

void tally(BlockOutcome& o, Outcome r, const std::function<std::string()>& bindings) {
    switch (r) {
    case Outcome::Pass: o.checked = sat_add(o.checked, 1); break;
    case Outcome::Fail:
        o.checked = sat_add(o.checked, 1);
        if (!o.failure) o.failure = Counterexample{bindings(), "", 0, 0};
        break;
    case Outcome::Blocked: o.blocked = sat_add(o.blocked, 1); break;
    case Outcome::Deferred: o.deferred = sat_add(o.deferred, 1); break;
    }
}

} // namespace

EquationReport check_directed(const DirectedContainer& d, const ExecPolicy& policy) {
    validate_directed(d);
    const Container& c = d.base;
    Idx S = c.shape_count();
    EquationReport rep;
    rep.bounded_domain = c.fueled;

    // s | o = s
    rep.equations.push_back(sweep_blocks(
        "down-o", S,
        [&](Nat b) {
            BlockOutcome o;
            Idx s = static_cast<Idx>(b);
            tally(o, guarded([&] { return down_at(d, o_at(d, s)) == s; }),
                  [&] { return "s=" + std::to_string(s); });
            return o;
        },
        policy));

    // s | (p + p') = (s | p) | p'
    rep.equations.push_back(sweep_blocks(
        "down-oplus", S,
        [&](Nat b) {
            BlockOutcome o;
            Idx s = static_cast<Idx>(b);
            for (Idx p = 0; p < c.pos(s); ++p) {
                Pos pp{&c, s, p};
                Idx sub;
                try {
                    sub = down_at(d, pp);
                } catch (const DeferredSignal&) {
                    o.deferred = sat_add(o.deferred, 1);
                    continue;
                }
                for (Idx p2 = 0; p2 < c.pos(sub); ++p2) {
                    Pos pp2{&c, sub, p2};
                    tally(o, guarded([&] {
                              return down_at(d, oplus_at(d, pp, pp2)) == down_at(d, pp2);
                          }),
                          [&] {
                              return "s=" + std::to_string(s) + " p=" + std::to_string(p) +
                                     " p'=" + std::to_string(p2);
                          });
                }
            }
            return o;
        },
        policy));

    // p + o = p
    rep.equations.push_back(sweep_blocks(
        "oplus-unit-r", S,
        [&](Nat b) {
            BlockOutcome o;
            Idx s = static_cast<Idx>(b);
            for (Idx p = 0; p < c.pos(s); ++p) {
                Pos pp{&c, s, p};
                tally(o, guarded([&] {
                          return eq_pos(oplus_at(d, pp, o_at(d, down_at(d, pp))), pp);
                      }),
                      [&] { return "s=" + std::to_string(s) + " p=" + std::to_string(p); });
            }
            return o;
        },
        policy));

    // o + p = p
    rep.equations.push_back(sweep_blocks(
        "oplus-unit-l", S,
        [&](Nat b) {
            BlockOutcome o;
            Idx s = static_cast<Idx>(b);
            Idx sub;
            try {
                sub = down_at(d, o_at(d, s));
            } catch (const DeferredSignal&) {
                o.deferred = 1;
                return o;
            }
            for (Idx p = 0; p < c.pos(sub); ++p) {
                Pos pp{&c, sub, p};
                tally(o, guarded([&] {
                          return eq_pos(oplus_at(d, o_at(d, s), pp), pp);
                      }),
                      [&] { return "s=" + std::to_string(s) + " p=" + std::to_string(p); });
            }
            return o;
        },
        policy));

    // (p + p') + p'' = p + (p' + p'')
    rep.equations.push_back(sweep_blocks(
        "oplus-assoc", S,
        [&](Nat b) {
            BlockOutcome o;
            Idx s = static_cast<Idx>(b);
            for (Idx p = 0; p < c.pos(s); ++p) {
                Pos pp{&c, s, p};
                Idx sub;
                try {
                    sub = down_at(d, pp);
                } catch (const DeferredSignal&) {
                    o.deferred = sat_add(o.deferred, 1);
                    continue;
                }
                for (Idx p2 = 0; p2 < c.pos(sub); ++p2) {
                    Pos pp2{&c, sub, p2};
                    Idx sub2;
                    try {
                        sub2 = down_at(d, pp2);
                    } catch (const DeferredSignal&) {
                        o.deferred = sat_add(o.deferred, 1);
                        continue;
                    }
                    for (Idx p3 = 0; p3 < c.pos(sub2); ++p3) {
                        Pos pp3{&c, sub2, p3};
                        tally(o, guarded([&] {
                                  Pos lhs = oplus_at(d, oplus_at(d, pp, pp2), pp3);
                                  Pos rhs = oplus_at(d, pp, oplus_at(d, pp2, pp3));
                                  return eq_pos(lhs, rhs);
                              }),
                              [&] {
                                  return "s=" + std::to_string(s) + " p=" + std::to_string(p) +
                                         " p'=" + std::to_string(p2) + " p''=" + std::to_string(p3);
                              });
                    }
                }
            }
            return o;
        },
        policy));

    return rep;
}

} // namespace contlab
