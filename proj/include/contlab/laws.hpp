#pragma once

#include "contlab/directed.hpp"
#include "contlab/monadic.hpp"

namespace contlab {

// Which equation suite a law is subject to, and which structure flavor each
// slot carries. Slots are positional: slot1 is the container whose shapes
// u1 consumes (the inner carrier of the induced composite), slot2 the one
// whose shapes u1 produces (the outer carrier). The CLI exposes them as
// --inner and --outer.
enum class LawKind { MndMnd, MndDir, DirMnd };

const char* law_kind_name(LawKind k);

struct Slot {
    enum class Flavor { Monadic, Directed };
    Flavor flavor = Flavor::Monadic;
    MonadicContainer mnd;
    DirectedContainer dir;

    const Container& base() const { return flavor == Flavor::Monadic ? mnd.base : dir.base; }
    bool is_monadic() const { return flavor == Flavor::Monadic; }
};

Slot monadic_slot(MonadicContainer m);
Slot directed_slot(DirectedContainer d);

// Distributive-law data between the two slots:
//   u1[s][f]       : slot2 shape,              f : Pos1(s) -> Shapes2
//   u2[s][f][q]    : slot1 shape,              q < pos2(u1[s][f])
//   v1[s][f][q][p] : position of s in slot1,   p < pos1(u2[s][f][q])
//   v2[s][f][q][p] : position of f(v1[s][f][q][p]) in slot2
// Families are keyed by uniform-radix rank with radix |Shapes2|. Entries may
// be kNoIdx only under a fueled slot1, meaning the value lies beyond fuel.
struct DistLawData {
    LawKind kind = LawKind::MndMnd;
    Slot slot1, slot2;
    std::vector<std::vector<Idx>> u1;
    std::vector<std::vector<std::vector<Idx>>> u2;
    std::vector<std::vector<std::vector<std::vector<Idx>>>> v1;
    std::vector<std::vector<std::vector<std::vector<Idx>>>> v2;

    const Container& c1() const { return slot1.base(); }
    const Container& c2() const { return slot2.base(); }

    bool same_tables(const DistLawData& o) const {
        return u1 == o.u1 && u2 == o.u2 && v1 == o.v1 && v2 == o.v2;
    }
};

void validate_law(const DistLawData& law);

// Builds empty tables with the right key structure for the given slots
// (entries initialised to kNoIdx).
DistLawData make_law_skeleton(LawKind kind, Slot slot1, Slot slot2);

// Read access to law tables; the search substitutes a partial assignment.
class LawAccess {
public:
    virtual ~LawAccess() = default;
    virtual Idx u1(Idx s, Nat frank) const = 0;
    virtual Idx u2(Idx s, Nat frank, Idx q) const = 0;
    virtual Idx v1(Idx s, Nat frank, Idx q, Idx p) const = 0;
    virtual Idx v2(Idx s, Nat frank, Idx q, Idx p) const = 0;
};

class DenseLawAccess : public LawAccess {
public:
    explicit DenseLawAccess(const DistLawData& law) : law_(&law) {}
    Idx u1(Idx s, Nat frank) const override { return law_->u1[s][frank]; }
    Idx u2(Idx s, Nat frank, Idx q) const override { return law_->u2[s][frank][q]; }
    Idx v1(Idx s, Nat frank, Idx q, Idx p) const override { return law_->v1[s][frank][q][p]; }
    Idx v2(Idx s, Nat frank, Idx q, Idx p) const override { return law_->v2[s][frank][q][p]; }

private:
    const DistLawData* law_;
};

// A law plus an access path, with the dependent-typing wrappers used by all
// equation evaluators.
struct LawView {
    LawKind kind;
    const Slot* slot1;
    const Slot* slot2;
    const LawAccess* acc;

    const Container& c1() const { return slot1->base(); }
    const Container& c2() const { return slot2->base(); }
    Idx s2_count() const { return c2().shape_count(); }

    Nat frank_of(const Fam& f) const { return rank_uniform(f.vals, s2_count()); }

    Idx u1_at(Idx s, const Fam& f) const;
    Idx u2_at(Idx s, const Fam& f, const Pos& q) const;
    Pos v1_at(Idx s, const Fam& f, const Pos& q, const Pos& p) const;
    Pos v2_at(Idx s, const Fam& f, const Pos& q, const Pos& p) const;
};

LawView view_of(const DistLawData& law, const LawAccess& acc);

// One equation of a suite: named blocks plus an evaluator that scans the
// block's instances. With stop_early the evaluator returns at the first
// outcome other than pass (used by the search).
struct LawBlock {
    Idx s = 0;     // slot1 shape, or slot2 shape for the unit-S equations
    Nat frank = 0; // family rank where applicable
};

struct LawEquation {
    std::string tag;
    std::string note;
    std::vector<LawBlock> blocks;
    std::function<BlockOutcome(const LawView&, const LawBlock&, bool stop_early)> eval;
};

// The equation suite for the law's kind: 18 (both monadic), 13 (monadic over
// directed) or 16 (directed over monadic) equations, tagged as in the
// reports.
std::vector<LawEquation> build_law_suite(const LawView& v);

EquationReport run_law_suite(const LawView& v, const ExecPolicy& policy);

EquationReport check_mnd_mnd(const DistLawData& law, const ExecPolicy& policy = ExecPolicy::serial());
EquationReport check_mnd_dir(const DistLawData& law, const ExecPolicy& policy = ExecPolicy::serial());
EquationReport check_dir_mnd(const DistLawData& law, const ExecPolicy& policy = ExecPolicy::serial());

// Runs the checker matching law.kind.
EquationReport check_law(const DistLawData& law, const ExecPolicy& policy = ExecPolicy::serial());

// The natural transformation carried by a MndMnd law: reshuffles an element
// of the slot1-over-slot2 composite extension into the slot2-over-slot1 one.
Elem law_gamma(const DistLawData& law, const Elem& e);

// Direct verification of the two unit triangles, the two multiplication
// pentagons and naturality, pointwise on finite sets of each listed size,
// using the interpreted monads of the two slots. Ground truth for
// check_mnd_mnd.
EquationReport beck_oracle(const DistLawData& law, std::span<const Idx> sizes,
                           const ExecPolicy& policy = ExecPolicy::serial());

} // namespace contlab
