#pragma once

#include "contlab/eval.hpp"
#include "contlab/parallel.hpp"
#include "contlab/report.hpp"

namespace contlab {

// A container whose positions carry a root (o), subshape selection (down)
// and position composition (oplus). Interprets to a comonad; here it is the
// carrier for one side of the mixed distributive laws.
struct DirectedContainer {
    Container base;
    std::vector<Idx> o;                                    // [s] -> position of s
    std::vector<std::vector<Idx>> down;                    // [s][p] -> shape (kNoIdx beyond fuel)
    std::vector<std::vector<std::vector<Idx>>> oplus;      // [s][p][p'] -> position of s

    Idx shape_count() const { return base.shape_count(); }
};

void validate_directed(const DirectedContainer& d);

Pos o_at(const DirectedContainer& d, Idx s);
Idx down_at(const DirectedContainer& d, const Pos& p);                     // shape below p
Pos oplus_at(const DirectedContainer& d, const Pos& p, const Pos& p2);     // p2 in down(p)

// The five directed container laws: down at the root, down under
// composition, right and left root units for oplus, and oplus
// associativity.
EquationReport check_directed(const DirectedContainer& d, const ExecPolicy& policy = ExecPolicy::serial());

} // namespace contlab
