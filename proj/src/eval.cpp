#include "contlab/eval.hpp"

namespace contlab {

std::pair<Pos, Pos> Fam2::unflat(Idx fl) const {
    Idx n = static_cast<Idx>(offsets.size());
    Idx lo = 0, hi = n;
    while (lo + 1 < hi) {
        Idx mid = (lo + hi) / 2;
        if (offsets[mid] <= fl) lo = mid;
        else hi = mid;
    }
    Pos p1{base_cont, base_shape, lo};
    Pos p2{pos_cont, fshapes[lo], fl - offsets[lo]};
    return {p1, p2};
}

Fam2 make_fam2_space(const Container& base_cont, Idx base_shape, const Fam& f,
                     const Container& pos_cont) {
    Fam2 g;
    g.base_cont = &base_cont;
    g.base_shape = base_shape;
    g.fshapes = f.vals;
    g.pos_cont = &pos_cont;
    Idx n = base_cont.pos(base_shape);
    g.offsets.resize(n);
    Idx total = 0;
    for (Idx i = 0; i < n; ++i) {
        g.offsets[i] = total;
        total += pos_cont.pos(f.vals[i]);
    }
    g.vals.assign(total, 0);
    return g;
}

Fam fam2_section(const Fam2& g, const Pos& p1) {
    if (p1.cont != g.base_cont || p1.shape != g.base_shape) throw BlockedSignal{};
    Idx inner_shape = g.fshapes[p1.idx];
    Idx n = g.pos_cont->pos(inner_shape);
    Fam out{g.pos_cont, inner_shape, {}};
    out.vals.assign(g.vals.begin() + g.offsets[p1.idx], g.vals.begin() + g.offsets[p1.idx] + n);
    return out;
}

} // namespace contlab
