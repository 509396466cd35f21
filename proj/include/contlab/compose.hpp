#pragma once

#include "contlab/laws.hpp"

namespace contlab {

// A monadic structure living on the composite of two monadic containers
// (outer's positions filled with inner shapes). Its unit shape must encode
// (outer unit, constantly inner unit).
struct CompatibleComposite {
    CompositeContainer cc;
    MonadicContainer mc;  // mc.base mirrors cc.base
    enum class Provenance { FromLaw, UserSupplied };
    Provenance provenance = Provenance::UserSupplied;
};

// Builds the composite monadic structure induced by a mnd-mnd law. The law
// must not be refuted by its own equation suite.
CompatibleComposite composite_from_law(const DistLawData& law,
                                       const ExecPolicy& policy = ExecPolicy::serial());

// The sixteen equation families of a compatible composite: the eight
// monadic container axioms on the composite, one shape plus two position
// compatibility laws per unit injection, and the two middle unitary laws.
EquationReport check_compatible(const CompatibleComposite& comp, const MonadicContainer& outer,
                                const MonadicContainer& inner,
                                const ExecPolicy& policy = ExecPolicy::serial());

// Recovers the distributive law from a compatible composite; inverse of
// composite_from_law table-for-table. Requires check_compatible to pass.
DistLawData law_from_composite(const CompatibleComposite& comp, const MonadicContainer& outer,
                               const MonadicContainer& inner,
                               const ExecPolicy& policy = ExecPolicy::serial());

// Assembles a CompatibleComposite from explicit tables, validating the unit
// shape invariant.
CompatibleComposite make_compatible_composite(const MonadicContainer& outer,
                                              const MonadicContainer& inner,
                                              MonadicContainer structure);

} // namespace contlab
