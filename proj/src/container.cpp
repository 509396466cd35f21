#include "contlab/container.hpp"

#include <functional>

namespace contlab {

Idx Container::pos(Idx shape) const {
    if (!valid_shape(shape))
        throw Error("shape index " + std::to_string(shape) + " out of range (have " +
                    std::to_string(shape_count()) + (fueled ? " in fuel)" : ")"));
    return positions[shape];
}

const std::string& Container::label(Idx shape) const {
    if (!valid_shape(shape)) throw Error("shape index out of range");
    return labels[shape];
}

Container make_finite_container(std::vector<std::string> labels, std::vector<Idx> positions) {
    if (labels.size() != positions.size()) throw Error("container: label/position length mismatch");
    Container c;
    c.labels = std::move(labels);
    c.positions = std::move(positions);
    return c;
}

Container make_fueled_container(std::vector<std::string> labels, std::vector<Idx> positions) {
    Container c = make_finite_container(std::move(labels), std::move(positions));
    c.fueled = true;
    return c;
}

void validate_morphism(const Container& src, const Container& dst, const ContainerMorphism& m) {
    if (m.shape_map.size() != src.shape_count() || m.position_maps.size() != src.shape_count())
        throw Error("morphism: table length does not match source shape count");
    for (Idx s = 0; s < src.shape_count(); ++s) {
        Idx u = m.shape_map[s];
        if (!dst.valid_shape(u)) throw Error("morphism: shape map lands outside target at s=" + std::to_string(s));
        if (m.position_maps[s].size() != dst.pos(u))
            throw Error("morphism: position map length mismatch at s=" + std::to_string(s));
        for (Idx p : m.position_maps[s])
            if (p >= src.pos(s)) throw Error("morphism: position map out of range at s=" + std::to_string(s));
    }
}

ExtElement make_ext_element(const Container& c, Idx shape, std::vector<Idx> fill, Idx x_size) {
    if (fill.size() != c.pos(shape)) throw Error("extension element: fill length mismatch");
    for (Idx v : fill)
        if (v >= x_size) throw Error("extension element: fill value out of range");
    return ExtElement{shape, std::move(fill)};
}

ExtElement ext_map(const Container& c, std::span<const Idx> h, const ExtElement& e, Idx x_size) {
    if (e.fill.size() != c.pos(e.shape)) throw Error("ext_map: fill length mismatch");
    ExtElement out{e.shape, {}};
    out.fill.reserve(e.fill.size());
    for (Idx v : e.fill) {
        if (v >= h.size()) throw Error("ext_map: fill value outside the domain of h");
        Idx w = h[v];
        if (w >= x_size) throw Error("ext_map: h value out of range");
        out.fill.push_back(w);
    }
    return out;
}

ExtElement interpret_morphism(const Container& src, const Container& dst,
                              const ContainerMorphism& m, const ExtElement& e) {
    if (!src.valid_shape(e.shape) || e.fill.size() != src.pos(e.shape))
        throw Error("interpret_morphism: element does not belong to the source extension");
    Idx t = m.shape_map[e.shape];
    const auto& fmap = m.position_maps[e.shape];
    ExtElement out{t, {}};
    out.fill.reserve(fmap.size());
    for (Idx q = 0; q < dst.pos(t); ++q) out.fill.push_back(e.fill[fmap[q]]);
    return out;
}

Elem leaf(Idx v) { return Elem{v, {}}; }

std::vector<Elem> enumerate_atoms(Idx x_size) {
    std::vector<Elem> out;
    out.reserve(x_size);
    for (Idx i = 0; i < x_size; ++i) out.push_back(leaf(i));
    return out;
}

std::vector<Elem> enumerate_ext(const Container& c, const std::vector<Elem>& below) {
    std::vector<Elem> out;
    for (Idx s = 0; s < c.shape_count(); ++s) {
        Idx n = c.pos(s);
        Nat count = sat_pow(below.size(), n);
        if (count == 0) continue;
        if (count > 50'000'000) throw Error("enumerate_ext: extension too large to enumerate");
        std::vector<Idx> digits(n, 0);
        for (Nat r = 0; r < count; ++r) {
            Elem e{s, {}};
            e.kids.reserve(n);
            for (Idx i = 0; i < n; ++i) e.kids.push_back(below[digits[i]]);
            out.push_back(std::move(e));
            for (std::size_t i = digits.size(); i-- > 0;) {
                if (++digits[i] < below.size()) break;
                digits[i] = 0;
            }
        }
    }
    return out;
}

Elem map_at_depth(const Elem& e, unsigned depth, const std::function<Elem(const Elem&)>& fn) {
    if (depth == 0) return fn(e);
    Elem out{e.head, {}};
    out.kids.reserve(e.kids.size());
    for (const Elem& k : e.kids) out.kids.push_back(map_at_depth(k, depth - 1, fn));
    return out;
}

std::string format_elem(const Elem& e) {
    if (e.kids.empty()) return std::to_string(e.head);
    std::string s = "(" + std::to_string(e.head) + ";";
    for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i) s += " ";
        s += format_elem(e.kids[i]);
    }
    s += ")";
    return s;
}

Idx CompositeContainer::encode_shape(Idx outer_shape, std::span<const Idx> inner_family) const {
    if (!outer.valid_shape(outer_shape)) throw Error("composite: outer shape out of range");
    if (inner_family.size() != outer.pos(outer_shape)) throw Error("composite: family length mismatch");
    for (Idx v : inner_family)
        if (!inner.valid_shape(v)) throw Error("composite: inner shape out of range");
    Nat offset = 0;
    for (Idx s = 0; s < outer_shape; ++s)
        offset += sat_pow(inner.shape_count(), outer.pos(s));
    Nat r = offset + rank_uniform(inner_family, inner.shape_count());
    return static_cast<Idx>(r);
}

const CompositeShape& CompositeContainer::decode_shape(Idx composite_shape) const {
    if (composite_shape >= shapes.size()) throw Error("composite: shape index out of range");
    return shapes[composite_shape];
}

Idx CompositeContainer::encode_pos(Idx composite_shape, Idx outer_pos, Idx inner_pos) const {
    const CompositeShape& cs = decode_shape(composite_shape);
    if (outer_pos >= cs.inner_family.size()) throw Error("composite: outer position out of range");
    Idx flat = cs.pos_offsets[outer_pos] + inner_pos;
    if (inner_pos >= inner.pos(cs.inner_family[outer_pos]))
        throw Error("composite: inner position out of range");
    return flat;
}

std::pair<Idx, Idx> CompositeContainer::decode_pos(Idx composite_shape, Idx flat_pos) const {
    const CompositeShape& cs = decode_shape(composite_shape);
    if (flat_pos >= cs.pos_total) throw Error("composite: flat position out of range");
    Idx lo = 0, hi = static_cast<Idx>(cs.inner_family.size());
    while (lo + 1 < hi) {
        Idx mid = (lo + hi) / 2;
        if (cs.pos_offsets[mid] <= flat_pos) lo = mid;
        else hi = mid;
    }
    return {lo, flat_pos - cs.pos_offsets[lo]};
}

CompositeContainer compose_containers(const Container& outer, const Container& inner) {
    if (outer.fueled) throw Error("compose_containers: fueled outer container unsupported");
    CompositeContainer cc;
    cc.outer = outer;
    cc.inner = inner;
    for (Idx s = 0; s < outer.shape_count(); ++s) {
        Idx n = outer.pos(s);
        Nat fams = sat_pow(inner.shape_count(), n);
        if (fams > 10'000'000) throw Error("compose_containers: composite shape space too large");
        std::vector<Idx> fam(n, 0);
        for (Nat r = 0; r < fams; ++r) {
            CompositeShape cs;
            cs.outer_shape = s;
            cs.inner_family = fam;
            cs.pos_offsets.resize(n);
            Idx total = 0;
            for (Idx i = 0; i < n; ++i) {
                cs.pos_offsets[i] = total;
                total += inner.pos(fam[i]);
            }
            cs.pos_total = total;
            std::string lbl = "(" + outer.label(s) + ",";
            for (Idx i = 0; i < n; ++i) lbl += (i ? " " : "") + inner.label(fam[i]);
            lbl += ")";
            cc.base.labels.push_back(std::move(lbl));
            cc.base.positions.push_back(total);
            cc.shapes.push_back(std::move(cs));
            for (std::size_t i = fam.size(); i-- > 0;) {
                if (++fam[i] < inner.shape_count()) break;
                fam[i] = 0;
            }
        }
    }
    cc.base.fueled = inner.fueled;
    return cc;
}

} // namespace contlab
