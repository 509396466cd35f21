#pragma once

#include "contlab/compose.hpp"

namespace contlab {

struct Monoid {
    Idx size = 1;
    Idx unit = 0;
    std::vector<std::vector<Idx>> mult;

    Idx times(Idx a, Idx b) const { return mult[a][b]; }
    bool operator==(const Monoid&) const = default;
};

// Unit and associativity laws are checked; invalid tables are rejected.
Monoid make_monoid(Idx size, Idx unit, std::vector<std::vector<Idx>> mult);
bool monoid_laws_hold(const Monoid& m);
Monoid cyclic_monoid(Idx n);

// Monadic container constructors ----------------------------------------

// One value-carrying shape plus e_count absorbing shapes with no positions.
MonadicContainer mk_exception(Idx e_count);
MonadicContainer mk_maybe();
// Monoid elements as shapes, one position each.
MonadicContainer mk_writer(const Monoid& m);
// One shape with a_count positions; sigma and pr are forced by the unit laws.
MonadicContainer mk_reader(Idx a_count);
// Functions s -> s as shapes, s positions each.
MonadicContainer mk_state(Idx s_count);
// Lengths 0..fuel as shapes; substitution is the sum of the parts when it
// stays within fuel.
MonadicContainer mk_list(Idx fuel);

// Directed container constructors ----------------------------------------

// a_count shapes with one position each; the structure is forced.
DirectedContainer mk_writer_directed(Idx a_count);
// One shape with the monoid as positions.
DirectedContainer mk_reader_directed(const Monoid& m);

// Canonical law fixtures ---------------------------------------------------

// The unique law with exceptions inside any monadic container: failures
// absorb, the value branch passes through.
DistLawData exception_law(Idx e_count, MonadicContainer outer);
// The unique law with a reader outside any monadic container: the inner
// shape is broadcast, positions pair up with the environment.
DistLawData reader_law(MonadicContainer inner, Idx a_count);
// The unique mixed law of a reader monadic container over a writer directed
// container.
DistLawData reader_writer_mixed_law(Idx a_count, Idx b_count);

// Monoid correspondences ----------------------------------------------------

struct MatchingPair {
    Monoid a, b;
    std::vector<std::vector<Idx>> alpha;  // A x B -> A
    std::vector<std::vector<Idx>> beta;   // A x B -> B

    bool operator==(const MatchingPair&) const = default;
};

// Validity of a matching pair is checked through its law: the pair is
// well-formed iff the converted writer/writer law passes its suite.
DistLawData law_from_matching_pair(const MatchingPair& mp);
MatchingPair matching_pair_from_law(const DistLawData& law);
bool matching_pair_valid(const MatchingPair& mp);

// The same data wired as a directed-over-monadic law between the writer
// monadic container and the reader directed container.
DistLawData dir_mnd_law_from_matching_pair(const MatchingPair& mp);

// The monoid carried by the composite of the two writers along the law of a
// matching pair. Carrier indices encode pairs (b, a) with b major.
Monoid zappa_szep(const MatchingPair& mp);

struct FunctionalAction {
    Monoid a, b;
    std::vector<std::vector<Idx>> alpha;  // [rank of f : A -> B][element of A] -> A

    Idx apply(Nat frank, Idx x) const { return alpha[frank][x]; }
};

// The four functional-action equations, checked directly.
bool functional_action_valid(const FunctionalAction& fa);

DistLawData mixed_law_from_functional_action(const FunctionalAction& fa);
FunctionalAction functional_action_from_mixed_law(const DistLawData& law);

// Composite universe with one layer of predicate codes on top of a
// substitution-closed universe; requires the input to pass the universe
// check.
CompatibleComposite mk_predicate_universe(const MonadicContainer& m);
// The composite shape representing an original shape under the always-true
// predicate.
Idx predicate_universe_embed(const CompatibleComposite& comp, Idx original_shape);

} // namespace contlab
