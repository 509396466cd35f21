#pragma once

#include "contlab/container.hpp"

namespace contlab {

// Evaluation of equation instances over tabulated dependent functions.
//
// Every position value carries the container and shape whose position set it
// inhabits. Table application validates that the argument inhabits the
// expected index set; a mismatch means the instance's well-typedness rests on
// an equation that failed at this instance, so the instance is reported as
// blocked instead of compared. Equality comparison between positions of
// different index sets is likewise blocked. Fueled structures signal deferral
// when a required entry lies beyond fuel.

struct BlockedSignal {};
struct DeferredSignal {};
// Raised by partial-assignment tables during search; carries the cell the
// evaluation got stuck on.
struct UnassignedSignal {
    std::uint64_t cell;
};

struct Pos {
    const Container* cont = nullptr;
    Idx shape = 0;
    Idx idx = 0;
};

inline bool same_space(const Pos& a, const Pos& b) {
    return a.cont == b.cont && a.shape == b.shape;
}

// Compare two positions; blocked unless they inhabit the same index set.
inline bool eq_pos(const Pos& a, const Pos& b) {
    if (!same_space(a, b)) throw BlockedSignal{};
    return a.idx == b.idx;
}

// A family over the positions of one shape. Values are indices into an
// arbitrary codomain (shapes of some container, typically).
struct Fam {
    const Container* cont = nullptr;
    Idx shape = 0;
    std::vector<Idx> vals;

    Idx size() const { return static_cast<Idx>(vals.size()); }

    Idx at(const Pos& p) const {
        if (p.cont != cont || p.shape != shape) throw BlockedSignal{};
        return vals[p.idx];
    }
};

inline Fam const_fam(const Container& c, Idx shape, Idx value) {
    return Fam{&c, shape, std::vector<Idx>(c.pos(shape), value)};
}

// A family over the dependent pair space  sum_{p : P(base_shape)} P'(f(p)),
// where f assigns to each base position a shape of pos_cont. Application
// checks both components against the defining data. The shape family is
// copied in, so pair families stay valid wherever they are moved.
struct Fam2 {
    const Container* base_cont = nullptr;
    Idx base_shape = 0;
    std::vector<Idx> fshapes;         // pos_cont shape per base position
    const Container* pos_cont = nullptr;
    std::vector<Idx> offsets;         // prefix sums of pos_cont.pos(fshapes[p])
    std::vector<Idx> vals;

    Idx total() const { return static_cast<Idx>(vals.size()); }

    Idx flat(const Pos& p1, const Pos& p2) const {
        if (p1.cont != base_cont || p1.shape != base_shape) throw BlockedSignal{};
        Idx inner_shape = fshapes[p1.idx];
        if (p2.cont != pos_cont || p2.shape != inner_shape) throw BlockedSignal{};
        return offsets[p1.idx] + p2.idx;
    }

    Idx at(const Pos& p1, const Pos& p2) const { return vals[flat(p1, p2)]; }

    std::pair<Pos, Pos> unflat(Idx fl) const;
};

// Scaffolding for a Fam2 (offsets/total) before values are filled in.
Fam2 make_fam2_space(const Container& base_cont, Idx base_shape, const Fam& f,
                     const Container& pos_cont);

// Restriction g(p, -) of a pair family to one base position.
Fam fam2_section(const Fam2& g, const Pos& p1);

} // namespace contlab
