#include "contlab/search.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace contlab {

const char* verdict_name(VerdictKind k) {
    switch (k) {
    case VerdictKind::Complete: return "Complete";
    case VerdictKind::PartialFound: return "PartialFound";
    case VerdictKind::BoundedUnsat: return "BoundedUnsat";
    case VerdictKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

namespace {

// Distinct from kNoIdx: kNoIdx in a partial table means "assigned to lie
// beyond fuel", kUnset means "not yet decided by the search".
constexpr Idx kUnset = static_cast<Idx>(-2);
constexpr Nat kNoCell = static_cast<Nat>(-1);

struct MutableTables {
    std::vector<std::vector<Idx>> u1;
    std::vector<std::vector<std::vector<Idx>>> u2;
    std::vector<std::vector<std::vector<std::vector<Idx>>>> v1;
    std::vector<std::vector<std::vector<std::vector<Idx>>>> v2;
};

struct Cell {
    std::uint8_t table;  // 0=u1 1=u2 2=v1 3=v2
    Idx s;
    Nat frank;
    Idx q;
    Idx p;
};

class PartialLawAccess : public LawAccess {
public:
    MutableTables t;
    const std::unordered_map<Nat, Nat>* cell_ids = nullptr;
    Nat key_mul = 1;

    Nat key(std::uint8_t table, Idx s, Nat frank, Idx q, Idx p) const {
        return (((static_cast<Nat>(table) * 1024 + s) * key_mul + frank) * 1024 + q) * 1024 + p;
    }

    Idx fetch(std::uint8_t table, Idx s, Nat frank, Idx q, Idx p, Idx stored) const {
        if (stored == kUnset) {
            auto it = cell_ids->find(key(table, s, frank, q, p));
            throw UnassignedSignal{it == cell_ids->end() ? kNoCell : it->second};
        }
        if (stored == kNoIdx) throw DeferredSignal{};
        return stored;
    }

    Idx u1(Idx s, Nat frank) const override { return fetch(0, s, frank, 0, 0, t.u1[s][frank]); }
    Idx u2(Idx s, Nat frank, Idx q) const override {
        if (t.u2[s][frank].size() <= q) throw UnassignedSignal{kNoCell};
        return fetch(1, s, frank, q, 0, t.u2[s][frank][q]);
    }
    Idx v1(Idx s, Nat frank, Idx q, Idx p) const override {
        if (t.v1[s][frank].size() <= q || t.v1[s][frank][q].size() <= p)
            throw UnassignedSignal{kNoCell};
        return fetch(2, s, frank, q, p, t.v1[s][frank][q][p]);
    }
    Idx v2(Idx s, Nat frank, Idx q, Idx p) const override {
        if (t.v2[s][frank].size() <= q || t.v2[s][frank][q].size() <= p)
            throw UnassignedSignal{kNoCell};
        return fetch(3, s, frank, q, p, t.v2[s][frank][q][p]);
    }
};

struct Instance {
    Idx eq;
    Nat block;
};

// Depth-first search over table cells with watched-cell propagation.
// Registration lists are append-only; entries whose instance no longer
// waits on the list are stale and skipped, so no registration is ever lost
// across backtracking.
class Searcher {
public:
    Searcher(const SearchProblem& p, bool stop_at_first)
        : prob(p), stop_first(stop_at_first) {
        skeleton = make_law_skeleton(p.kind, p.slot1, p.slot2);
        acc.t.u1 = skeleton.u1;
        for (auto& row : acc.t.u1) std::fill(row.begin(), row.end(), kUnset);
        Idx S1 = static_cast<Idx>(acc.t.u1.size());
        acc.t.u2.resize(S1);
        acc.t.v1.resize(S1);
        acc.t.v2.resize(S1);
        for (Idx s = 0; s < S1; ++s) {
            acc.t.u2[s].resize(acc.t.u1[s].size());
            acc.t.v1[s].resize(acc.t.u1[s].size());
            acc.t.v2[s].resize(acc.t.u1[s].size());
        }
        Nat maxfam = 1;
        for (const auto& row : acc.t.u1) maxfam = std::max<Nat>(maxfam, row.size());
        acc.key_mul = maxfam;
        acc.cell_ids = &cell_ids;
        view = LawView{p.kind, &skeleton.slot1, &skeleton.slot2, &acc};
        suite = build_law_suite(view);
        for (Idx e = 0; e < suite.size(); ++e)
            for (Nat b = 0; b < suite[e].blocks.size(); ++b)
                instances.push_back({e, b});
        inst_state.assign(instances.size(), State{});
    }

    SearchVerdict run() {
        SearchVerdict out;
        bool budget_hit = false;
        bool root_conflict = false;
        for (Nat i = 0; i < instances.size() && !root_conflict; ++i)
            if (!eval_instance(i)) root_conflict = true;
        if (!root_conflict) {
            try {
                dfs(0);
            } catch (const BudgetStop&) {
                budget_hit = true;
            }
        }
        out.stats = stats;
        bool fueled = prob.slot1.base().fueled;
        if (budget_hit) {
            out.kind = VerdictKind::BudgetExceeded;
        } else if (!found.empty()) {
            out.kind = fueled ? VerdictKind::PartialFound : VerdictKind::Complete;
            out.laws = std::move(found);
        } else {
            out.kind = fueled ? VerdictKind::BoundedUnsat : VerdictKind::Complete;
        }
        std::sort(out.laws.begin(), out.laws.end(), [](const DistLawData& a, const DistLawData& b) {
            return std::tie(a.u1, a.u2, a.v1, a.v2) < std::tie(b.u1, b.u2, b.v1, b.v2);
        });
        return out;
    }

private:
    struct State {
        bool done = false;
        Nat watch = kNoCell;  // kNoCell = parked without a specific cell
    };
    struct BudgetStop {};

    const SearchProblem& prob;
    bool stop_first;
    DistLawData skeleton;
    PartialLawAccess acc;
    LawView view;
    std::vector<LawEquation> suite;
    std::vector<Instance> instances;
    std::vector<State> inst_state;
    std::unordered_map<Nat, Nat> cell_ids;
    std::vector<Cell> cells;
    std::vector<std::vector<Nat>> watchers;  // cell id -> instance ids (lazy)
    std::vector<Nat> parked;                 // instances waiting on no cell (lazy)
    std::vector<std::pair<Nat, State>> trail;
    std::vector<DistLawData> found;
    SearchStats stats;

    Idx& cell_value(const Cell& c) {
        switch (c.table) {
        case 0: return acc.t.u1[c.s][c.frank];
        case 1: return acc.t.u2[c.s][c.frank][c.q];
        case 2: return acc.t.v1[c.s][c.frank][c.q][c.p];
        default: return acc.t.v2[c.s][c.frank][c.q][c.p];
        }
    }

    void enlist(Nat inst, const State& st) {
        if (st.done) return;
        if (st.watch == kNoCell) parked.push_back(inst);
        else watchers[st.watch].push_back(inst);
    }

    void set_state(Nat inst, State st) {
        trail.emplace_back(inst, inst_state[inst]);
        inst_state[inst] = st;
        enlist(inst, st);
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            auto [inst, st] = trail.back();
            trail.pop_back();
            inst_state[inst] = st;
            enlist(inst, st);
        }
    }

    // Evaluates one instance; false on a genuine violation.
    bool eval_instance(Nat inst) {
        ++stats.propagations;
        const Instance& in = instances[inst];
        const LawEquation& eq = suite[in.eq];
        try {
            BlockOutcome o = eq.eval(view, eq.blocks[static_cast<std::size_t>(in.block)], true);
            if (o.failure) return false;
            if (o.blocked > 0 || o.deferred > 0)
                set_state(inst, State{false, kNoCell});  // revisit on later stages / at the leaf
            else
                set_state(inst, State{true, 0});
            return true;
        } catch (const UnassignedSignal& u) {
            set_state(inst, State{false, u.cell});
            return true;
        }
    }

    static void prune_list(std::vector<Nat>& lst, const std::vector<State>& states, bool parked_list,
                           Nat cellid) {
        std::erase_if(lst, [&](Nat inst) {
            const State& st = states[inst];
            if (st.done) return true;
            return parked_list ? st.watch != kNoCell : st.watch != cellid;
        });
    }

    bool propagate(Nat cellid) {
        auto& lst = watchers[cellid];
        prune_list(lst, inst_state, false, cellid);
        std::size_t n0 = lst.size();
        for (std::size_t i = 0; i < n0; ++i) {
            Nat inst = lst[i];
            const State& st = inst_state[inst];
            if (st.done || st.watch != cellid) continue;  // moved meanwhile
            if (!eval_instance(inst)) return false;
        }
        return true;
    }

    bool kick_parked() {
        prune_list(parked, inst_state, true, kNoCell);
        std::size_t n0 = parked.size();
        std::set<Nat> seen;
        for (std::size_t i = 0; i < n0; ++i) {
            Nat inst = parked[i];
            const State& st = inst_state[inst];
            if (st.done || st.watch != kNoCell) continue;
            if (!seen.insert(inst).second) continue;
            if (!eval_instance(inst)) return false;
        }
        return true;
    }

    bool assign(Nat cellid, Idx value) {
        ++stats.nodes;
        if (stats.nodes > prob.budget) throw BudgetStop{};
        std::size_t mark = trail.size();
        cell_value(cells[cellid]) = value;
        if (propagate(cellid)) return true;
        undo_to(mark);
        cell_value(cells[cellid]) = kUnset;
        return false;
    }

    void unassign(Nat cellid, std::size_t mark) {
        undo_to(mark);
        cell_value(cells[cellid]) = kUnset;
    }

    // ---- stages ---------------------------------------------------------

    struct Stage {
        std::vector<Nat> cell_list;
        std::vector<std::pair<Nat, Idx>> forced;
        std::vector<Nat> forced_here;  // cells this stage actually assigned
    };

    Nat lookup_or_register(const Cell& c) {
        Nat k = acc.key(c.table, c.s, c.frank, c.q, c.p);
        auto it = cell_ids.find(k);
        if (it != cell_ids.end()) return it->second;
        Nat id = cells.size();
        cells.push_back(c);
        watchers.emplace_back();
        cell_ids.emplace(k, id);
        return id;
    }

    Stage build_stage(int stage) {
        Stage st;
        const Container& c1 = prob.slot1.base();
        const Container& c2 = prob.slot2.base();
        Idx S2 = c2.shape_count();
        auto cons_rank = [&](Idx s, Idx value) {
            std::vector<Idx> digits(c1.pos(s), value);
            return rank_uniform(digits, S2);
        };
        if (stage == 0) {
            for (Idx s = 0; s < c1.shape_count(); ++s)
                for (Nat fr = 0; fr < acc.t.u1[s].size(); ++fr)
                    st.cell_list.push_back(lookup_or_register({0, s, fr, 0, 0}));
            if (prob.kind == LawKind::MndDir) {
                // the root-position law determines u1 outright
                const DirectedContainer& d1 = prob.slot1.dir;
                for (Idx s = 0; s < c1.shape_count(); ++s) {
                    std::vector<Idx> digits(c1.pos(s));
                    for (Nat fr = 0; fr < acc.t.u1[s].size(); ++fr) {
                        unrank_uniform(fr, S2, digits);
                        st.forced.emplace_back(lookup_or_register({0, s, fr, 0, 0}), digits[d1.o[s]]);
                    }
                }
            } else {
                Idx i1 = prob.slot1.is_monadic() ? prob.slot1.mnd.iota : kNoIdx;
                if (i1 != kNoIdx)
                    for (Idx t = 0; t < S2; ++t)
                        st.forced.emplace_back(lookup_or_register({0, i1, cons_rank(i1, t), 0, 0}), t);
                if (prob.kind == LawKind::MndMnd) {
                    Idx i2 = prob.slot2.mnd.iota;
                    if (i2 != kNoIdx)
                        for (Idx s = 0; s < c1.shape_count(); ++s)
                            st.forced.emplace_back(lookup_or_register({0, s, cons_rank(s, i2), 0, 0}),
                                                   i2);
                }
            }
        } else if (stage == 1) {
            for (Idx s = 0; s < c1.shape_count(); ++s)
                for (Nat fr = 0; fr < acc.t.u1[s].size(); ++fr) {
                    Idx t = acc.t.u1[s][fr];
                    Idx len = (t == kNoIdx || t == kUnset) ? 0 : c2.pos(t);
                    acc.t.u2[s][fr].assign(len, kUnset);
                    for (Idx q = 0; q < len; ++q)
                        st.cell_list.push_back(lookup_or_register({1, s, fr, q, 0}));
                }
            Idx i1 = prob.slot1.is_monadic() ? prob.slot1.mnd.iota : kNoIdx;
            if (i1 != kNoIdx && prob.kind != LawKind::MndDir)
                for (Idx t = 0; t < S2; ++t) {
                    Nat fr = cons_rank(i1, t);
                    if (acc.t.u1[i1][fr] == t)
                        for (Idx q = 0; q < acc.t.u2[i1][fr].size(); ++q)
                            st.forced.emplace_back(lookup_or_register({1, i1, fr, q, 0}), i1);
                }
            if (prob.kind != LawKind::DirMnd && prob.slot2.is_monadic()) {
                Idx i2 = prob.slot2.mnd.iota;
                if (i2 != kNoIdx)
                    for (Idx s = 0; s < c1.shape_count(); ++s) {
                        Nat fr = cons_rank(s, i2);
                        if (acc.t.u1[s][fr] == i2)
                            for (Idx q = 0; q < acc.t.u2[s][fr].size(); ++q)
                                st.forced.emplace_back(lookup_or_register({1, s, fr, q, 0}), s);
                    }
            }
        } else {
            auto& tab = stage == 2 ? acc.t.v1 : acc.t.v2;
            for (Idx s = 0; s < c1.shape_count(); ++s)
                for (Nat fr = 0; fr < acc.t.u1[s].size(); ++fr) {
                    tab[s][fr].assign(acc.t.u2[s][fr].size(), {});
                    for (Idx q = 0; q < acc.t.u2[s][fr].size(); ++q) {
                        Idx a = acc.t.u2[s][fr][q];
                        Idx len = (a == kNoIdx || a == kUnset) ? 0 : c1.pos(a);
                        tab[s][fr][q].assign(len, kUnset);
                        for (Idx p = 0; p < len; ++p)
                            st.cell_list.push_back(
                                lookup_or_register({static_cast<std::uint8_t>(stage), s, fr, q, p}));
                    }
                }
        }
        return st;
    }

    void teardown_stage(int stage, const Stage& st) {
        for (Nat cid : st.cell_list) cell_value(cells[cid]) = kUnset;
        for (Nat cid : st.forced_here) cell_value(cells[cid]) = kUnset;
        if (stage == 1) {
            for (auto& rows : acc.t.u2)
                for (auto& row : rows) row.clear();
        } else if (stage == 2 || stage == 3) {
            auto& tab = stage == 2 ? acc.t.v1 : acc.t.v2;
            for (auto& rows : tab)
                for (auto& row : rows) row.clear();
        }
    }

    std::vector<Idx> domain_of(const Cell& c) const {
        const Container& c1 = prob.slot1.base();
        const Container& c2 = prob.slot2.base();
        std::vector<Idx> vals;
        switch (c.table) {
        case 0:
            for (Idx t = 0; t < c2.shape_count(); ++t) vals.push_back(t);
            break;
        case 1:
            for (Idx a = 0; a < c1.shape_count(); ++a) vals.push_back(a);
            if (c1.fueled) vals.push_back(kNoIdx);  // value beyond fuel
            break;
        case 2:
            for (Idx x = 0; x < c1.pos(c.s); ++x) vals.push_back(x);
            break;
        default: {
            Idx x = acc.t.v1[c.s][c.frank][c.q][c.p];
            if (x == kUnset || x == kNoIdx) break;
            std::vector<Idx> digits(c1.pos(c.s));
            unrank_uniform(c.frank, c2.shape_count(), digits);
            for (Idx y = 0; y < c2.pos(digits[x]); ++y) vals.push_back(y);
            break;
        }
        }
        return vals;
    }

    void dfs(int stage) {
        if (stage == 4) {
            leaf();
            return;
        }
        Stage st = build_stage(stage);
        std::size_t mark = trail.size();
        bool ok = kick_parked();
        if (ok) {
            for (auto [cid, val] : st.forced) {
                Idx cur = cell_value(cells[cid]);
                if (cur != kUnset) {
                    if (cur != val) {
                        ok = false;
                        break;
                    }
                    continue;
                }
                if (!assign(cid, val)) {
                    ok = false;
                    break;
                }
                st.forced_here.push_back(cid);
            }
        }
        if (ok) assign_next(stage, st, 0);
        undo_to(mark);
        teardown_stage(stage, st);
    }

    void assign_next(int stage, const Stage& st, std::size_t idx) {
        while (idx < st.cell_list.size() && cell_value(cells[st.cell_list[idx]]) != kUnset) ++idx;
        if (idx == st.cell_list.size()) {
            dfs(stage + 1);
            return;
        }
        Nat cid = st.cell_list[idx];
        for (Idx val : domain_of(cells[cid])) {
            std::size_t mark = trail.size();
            if (assign(cid, val)) {
                assign_next(stage, st, idx + 1);
                unassign(cid, mark);
            }
            if (stop_first && !found.empty()) return;
        }
    }

    void leaf() {
        for (Nat i = 0; i < instances.size(); ++i) {
            if (inst_state[i].done) continue;
            const Instance& in = instances[i];
            const LawEquation& eq = suite[in.eq];
            try {
                BlockOutcome o = eq.eval(view, eq.blocks[static_cast<std::size_t>(in.block)], true);
                if (o.failure || o.blocked > 0) return;
            } catch (const UnassignedSignal&) {
                return;  // references rows outside the assigned fragment
            }
        }
        DistLawData law = skeleton;
        law.u1 = acc.t.u1;
        law.u2 = acc.t.u2;
        law.v1 = acc.t.v1;
        law.v2 = acc.t.v2;
        found.push_back(std::move(law));
    }
};

} // namespace

SearchVerdict search_laws(const SearchProblem& p) {
    if (p.slot1.base().fueled || p.slot2.base().fueled)
        throw Error("search_laws: finite slots required (use refute for a fueled slot1)");
    Searcher s(p, /*stop_at_first=*/false);
    SearchVerdict v = s.run();
    for (const DistLawData& law : v.laws)
        if (check_law(law).refuted()) throw Error("search_laws: enumerated law fails its own suite");
    return v;
}

SearchVerdict refute_bounded(const SearchProblem& p) {
    if (!p.slot1.base().fueled) throw Error("refute_bounded: fueled slot1 required");
    if (p.slot2.base().fueled) throw Error("refute_bounded: finite slot2 required");
    Searcher s(p, /*stop_at_first=*/true);
    return s.run();
}

std::vector<DistLawData> enumerate_all_law_tables(const Slot& slot1, const Slot& slot2, LawKind kind,
                                                  Nat limit) {
    if (slot1.base().fueled || slot2.base().fueled)
        throw Error("enumerate_all_law_tables: finite slots required");
    std::vector<DistLawData> out;
    DistLawData law = make_law_skeleton(kind, slot1, slot2);
    const Container& c1 = law.c1();
    const Container& c2 = law.c2();

    struct CellRef {
        std::uint8_t table;
        Idx s;
        Nat frank;
        Idx q;
        Idx p;
    };

    std::vector<CellRef> u1cells;
    for (Idx s = 0; s < c1.shape_count(); ++s)
        for (Nat fr = 0; fr < law.u1[s].size(); ++fr) u1cells.push_back({0, s, fr, 0, 0});

    Nat produced = 0;
    std::function<void(int, std::size_t, const std::vector<CellRef>&)> rec =
        [&](int stage, std::size_t idx, const std::vector<CellRef>& cs) {
            if (idx == cs.size()) {
                std::vector<CellRef> next;
                if (stage == 0) {
                    for (Idx s = 0; s < c1.shape_count(); ++s)
                        for (Nat fr = 0; fr < law.u1[s].size(); ++fr) {
                            law.u2[s][fr].assign(c2.pos(law.u1[s][fr]), 0);
                            for (Idx q = 0; q < law.u2[s][fr].size(); ++q)
                                next.push_back({1, s, fr, q, 0});
                        }
                    rec(1, 0, next);
                } else if (stage == 1) {
                    for (Idx s = 0; s < c1.shape_count(); ++s)
                        for (Nat fr = 0; fr < law.u1[s].size(); ++fr) {
                            law.v1[s][fr].assign(law.u2[s][fr].size(), {});
                            law.v2[s][fr].assign(law.u2[s][fr].size(), {});
                            for (Idx q = 0; q < law.u2[s][fr].size(); ++q) {
                                Idx a = law.u2[s][fr][q];
                                law.v1[s][fr][q].assign(c1.pos(a), 0);
                                law.v2[s][fr][q].assign(c1.pos(a), 0);
                                for (Idx p = 0; p < c1.pos(a); ++p) next.push_back({2, s, fr, q, p});
                            }
                        }
                    rec(2, 0, next);
                } else if (stage == 2) {
                    for (Idx s = 0; s < c1.shape_count(); ++s)
                        for (Nat fr = 0; fr < law.u1[s].size(); ++fr)
                            for (Idx q = 0; q < law.u2[s][fr].size(); ++q)
                                for (Idx p = 0; p < law.v2[s][fr][q].size(); ++p)
                                    next.push_back({3, s, fr, q, p});
                    rec(3, 0, next);
                } else {
                    if (++produced > limit) throw Error("enumerate_all_law_tables: limit exceeded");
                    out.push_back(law);
                }
                return;
            }
            const CellRef& c = cs[idx];
            Idx count;
            switch (c.table) {
            case 0: count = c2.shape_count(); break;
            case 1: count = c1.shape_count(); break;
            case 2: count = c1.pos(c.s); break;
            default: {
                std::vector<Idx> digits(c1.pos(c.s));
                unrank_uniform(c.frank, c2.shape_count(), digits);
                count = c2.pos(digits[law.v1[c.s][c.frank][c.q][c.p]]);
                break;
            }
            }
            for (Idx v = 0; v < count; ++v) {
                switch (c.table) {
                case 0: law.u1[c.s][c.frank] = v; break;
                case 1: law.u2[c.s][c.frank][c.q] = v; break;
                case 2: law.v1[c.s][c.frank][c.q][c.p] = v; break;
                default: law.v2[c.s][c.frank][c.q][c.p] = v; break;
                }
                rec(stage, idx + 1, cs);
            }
            // zero-count domains rule out any filling of this prefix
        };
    rec(0, 0, u1cells);
    return out;
}

bool check_singleton(const MonadicContainer& m) {
    return m.iota != kNoIdx && m.base.pos(m.iota) == 1;
}

std::vector<Idx> constant_shapes(const MonadicContainer& m) {
    std::vector<Idx> out;
    for (Idx s = 0; s < m.shape_count(); ++s)
        if (m.base.pos(s) == 0) out.push_back(s);
    return out;
}

std::optional<S3Witness> check_S3(const MonadicContainer& m, Idx min_positions) {
    if (m.iota == kNoIdx) return std::nullopt;
    const Container& c = m.base;
    Idx S = m.shape_count();
    Idx need = std::max<Idx>(min_positions, 1);
    for (Idx s = 0; s < S; ++s) {
        if (c.pos(s) < need) continue;
        Nat fams = sat_pow(S, c.pos(s));
        if (fams > 20'000'000) throw Error("check_S3: family space too large");
        std::vector<Idx> fam(c.pos(s), 0);
        for (Nat r = 0; r < fams; ++r) {
            bool witness = true;
            for (Idx p = 0; p < c.pos(s) && witness; ++p) {
                std::vector<Idx> sub = fam;
                sub[p] = m.iota;
                Idx out = m.sigma[s][rank_uniform(sub, S)];
                if (out == kNoIdx || out != m.iota) witness = false;
            }
            if (witness) return S3Witness{s, fam};
            for (std::size_t i = fam.size(); i-- > 0;) {
                if (++fam[i] < S) break;
                fam[i] = 0;
            }
        }
    }
    return std::nullopt;
}

NogoCertificate nogo_certificate(const MonadicContainer& m1, const MonadicContainer& m2) {
    NogoCertificate cert;
    std::vector<std::string> missing;
    if (!check_singleton(m1)) missing.push_back("slot1 lacks the singleton property");
    auto wit = check_S3(m1, 2);
    if (!wit) missing.push_back("slot1 has no witness shape with two distinct positions");
    auto consts = constant_shapes(m2);
    if (consts.size() < 2) missing.push_back("slot2 has fewer than two distinct constant shapes");
    if (!missing.empty()) {
        cert.applicable = false;
        for (std::size_t i = 0; i < missing.size(); ++i) cert.reason += (i ? "; " : "") + missing[i];
        return cert;
    }
    cert.applicable = true;
    cert.witness = *wit;
    cert.position_a = 0;
    cert.position_b = 1;
    cert.constant_a = consts[0];
    cert.constant_b = consts[1];
    cert.reason = "singleton unit; witness shape " + std::to_string(wit->s) + " with family " +
                  format_digits(wit->f) + "; constant shapes " + std::to_string(consts[0]) + " and " +
                  std::to_string(consts[1]);
    return cert;
}

EquationReport check_left_zero(const MonadicContainer& m, const ExecPolicy& policy) {
    validate_monadic(m);
    auto consts = constant_shapes(m);
    EquationReport rep;
    rep.bounded_domain = m.base.fueled;
    rep.equations.push_back(sweep_blocks(
        "left-zero", consts.size(),
        [&](Nat b) {
            Idx s = consts[static_cast<std::size_t>(b)];
            BlockOutcome o;
            Idx out = m.sigma[s][0];  // the one empty family
            if (out == kNoIdx) {
                o.deferred = 1;
            } else {
                o.checked = 1;
                if (out != s) o.failure = Counterexample{"s=" + std::to_string(s), "", 0, 0};
            }
            return o;
        },
        policy));
    return rep;
}

} // namespace contlab
