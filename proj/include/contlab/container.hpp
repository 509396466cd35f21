#pragma once

#include "contlab/kernel.hpp"

#include <functional>
#include <string>
#include <vector>

namespace contlab {

// A container: a set of shapes, each with a finite number of positions.
// Fueled containers enumerate only a prefix of a countable shape space;
// operations that would leave the prefix report "deferred" outcomes rather
// than failing.
struct Container {
    std::vector<std::string> labels;
    std::vector<Idx> positions;
    bool fueled = false;

    Idx shape_count() const { return static_cast<Idx>(positions.size()); }
    Idx pos(Idx shape) const;
    const std::string& label(Idx shape) const;
    bool valid_shape(Idx shape) const { return shape < shape_count(); }

    bool same_profile(const Container& o) const {
        return positions == o.positions && fueled == o.fueled;
    }
};

Container make_finite_container(std::vector<std::string> labels, std::vector<Idx> positions);
Container make_fueled_container(std::vector<std::string> labels, std::vector<Idx> positions);

// Morphism (u, f): shape map u plus, per source shape s, a position map
// from positions of u(s) back to positions of s.
struct ContainerMorphism {
    std::vector<Idx> shape_map;
    std::vector<std::vector<Idx>> position_maps;
};

void validate_morphism(const Container& src, const Container& dst, const ContainerMorphism& m);

// An element of the container extension at a finite set X = {0..x_size-1}:
// a shape together with one X-value per position.
struct ExtElement {
    Idx shape;
    std::vector<Idx> fill;

    bool operator==(const ExtElement&) const = default;
};

ExtElement make_ext_element(const Container& c, Idx shape, std::vector<Idx> fill, Idx x_size);

// Functor action on a map h : X -> Y (h given as a table of size |X|).
ExtElement ext_map(const Container& c, std::span<const Idx> h, const ExtElement& e, Idx x_size);

// Action of a morphism on extension elements: (u s, fill . f_s).
ExtElement interpret_morphism(const Container& src, const Container& dst,
                              const ContainerMorphism& m, const ExtElement& e);

// Nested extension elements (elements of iterated applications of container
// functors). Leaves carry a bare value with no children.
struct Elem {
    Idx head = 0;
    std::vector<Elem> kids;

    bool operator==(const Elem&) const = default;
};

Elem leaf(Idx v);

// All elements of the extension of c at the given underlying collection.
std::vector<Elem> enumerate_ext(const Container& c, const std::vector<Elem>& below);
std::vector<Elem> enumerate_atoms(Idx x_size);

// Apply fn to every subterm at the given depth (0 = the element itself).
Elem map_at_depth(const Elem& e, unsigned depth, const std::function<Elem(const Elem&)>& fn);

std::string format_elem(const Elem& e);

// Composite container: shapes are pairs (outer shape, family of inner shapes
// over its positions), encoded through the family's uniform-radix rank;
// positions are flattened sums.
struct CompositeShape {
    Idx outer_shape;
    std::vector<Idx> inner_family;  // one inner shape per outer position
    std::vector<Idx> pos_offsets;   // prefix sums of inner position counts
    Idx pos_total;
};

struct CompositeContainer {
    Container base;
    Container outer;
    Container inner;
    std::vector<CompositeShape> shapes;

    Idx encode_shape(Idx outer_shape, std::span<const Idx> inner_family) const;
    const CompositeShape& decode_shape(Idx composite_shape) const;
    Idx encode_pos(Idx composite_shape, Idx outer_pos, Idx inner_pos) const;
    std::pair<Idx, Idx> decode_pos(Idx composite_shape, Idx flat_pos) const;
};

// Composite of outer over inner (outer's positions filled with inner shapes).
// Fueled outer is unsupported; fueled inner yields a fueled composite over
// the in-fuel inner shapes.
CompositeContainer compose_containers(const Container& outer, const Container& inner);

} // namespace contlab
