#pragma once

#include "contlab/laws.hpp"

namespace contlab {

struct SearchProblem {
    Slot slot1, slot2;
    LawKind kind = LawKind::MndMnd;
    Nat budget = 10'000'000;
};

struct SearchStats {
    Nat nodes = 0;
    Nat propagations = 0;
};

enum class VerdictKind { Complete, PartialFound, BoundedUnsat, BudgetExceeded };

const char* verdict_name(VerdictKind k);

struct SearchVerdict {
    VerdictKind kind = VerdictKind::Complete;
    std::vector<DistLawData> laws;  // Complete: every law, canonically ordered;
                                    // PartialFound: the first consistent fragment
    SearchStats stats;
};

// Depth-first assignment of the law tables in canonical order (u1 rows, then
// u2, v1, v2), with unit rows pre-forced and every equation block re-checked
// as soon as the entries it reads are assigned. Finite slots only; the
// result is the complete set of laws of the given kind.
SearchVerdict search_laws(const SearchProblem& p);

// The same search over a fueled slot1: only in-fuel table entries are
// assigned and only equation instances that stay within fuel are enforced.
// BoundedUnsat means no consistent fragment exists, hence no total law.
SearchVerdict refute_bounded(const SearchProblem& p);

// Every filling of the law tables, with no pruning. Ground truth for the
// pruned search at desk scale.
std::vector<DistLawData> enumerate_all_law_tables(const Slot& slot1, const Slot& slot2, LawKind kind,
                                                  Nat limit = 50'000'000);

// Unit shape with exactly one position.
bool check_singleton(const MonadicContainer& m);

// Shapes with no positions.
std::vector<Idx> constant_shapes(const MonadicContainer& m);

struct S3Witness {
    Idx s = 0;
    std::vector<Idx> f;
};

// First shape/family pair (canonical order) such that replacing the family
// value at any single position by the unit collapses the substitution to the
// unit. Witness shapes need at least min_positions positions.
std::optional<S3Witness> check_S3(const MonadicContainer& m, Idx min_positions = 1);

struct NogoCertificate {
    bool applicable = false;
    std::string reason;
    S3Witness witness;
    Idx position_a = 0, position_b = 0;  // two distinct witness positions
    Idx constant_a = 0, constant_b = 0;  // two distinct constant shapes of m2
};

// Hypotheses of the too-many-constants obstruction: slot1 has the singleton
// property and a witness with two distinct positions, slot2 has two distinct
// constant shapes. Applicable means no mnd-mnd law with these slots exists.
NogoCertificate nogo_certificate(const MonadicContainer& m1, const MonadicContainer& m2);

// Constant shapes absorb substitution: sigma s f = s whenever s has no
// positions.
EquationReport check_left_zero(const MonadicContainer& m,
                               const ExecPolicy& policy = ExecPolicy::serial());

} // namespace contlab
