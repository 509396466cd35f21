#include <doctest.h>

#include "contlab/container.hpp"
#include "contlab/zoo.hpp"

using namespace contlab;

namespace {

Container unit_container() { return make_finite_container({"*"}, {1}); }

std::vector<Idx> identity_map(Idx n) {
    std::vector<Idx> h(n);
    for (Idx i = 0; i < n; ++i) h[i] = i;
    return h;
}

} // namespace

TEST_CASE("composite shape count follows the sum over outer shapes") {
    Container exc = mk_exception(1).base;          // shapes: ok(1 pos), err(0 pos)
    Container wr = mk_writer(cyclic_monoid(2)).base;
    CompositeContainer cc = compose_containers(exc, wr);
    CHECK(cc.base.shape_count() == 3);  // 2^1 + 2^0

    // positions of (s, f) are the sums of inner position counts
    for (Idx cs = 0; cs < cc.base.shape_count(); ++cs) {
        const CompositeShape& x = cc.decode_shape(cs);
        Idx total = 0;
        for (Idx v : x.inner_family) total += wr.pos(v);
        CHECK(cc.base.pos(cs) == total);
    }
}

TEST_CASE("composing with the one-shape one-position container keeps the profile") {
    Container c = mk_exception(2).base;
    CompositeContainer right = compose_containers(c, unit_container());
    CHECK(right.base.positions == c.positions);
    CompositeContainer left = compose_containers(unit_container(), c);
    CHECK(left.base.positions == c.positions);
}

TEST_CASE("shape encode/decode round-trips") {
    CompositeContainer cc = compose_containers(mk_reader(2).base, mk_writer(cyclic_monoid(2)).base);
    for (Idx cs = 0; cs < cc.base.shape_count(); ++cs) {
        const CompositeShape& x = cc.decode_shape(cs);
        CHECK(cc.encode_shape(x.outer_shape, x.inner_family) == cs);
        for (Idx fl = 0; fl < cc.base.pos(cs); ++fl) {
            auto [p, q] = cc.decode_pos(cs, fl);
            CHECK(cc.encode_pos(cs, p, q) == fl);
        }
    }
}

TEST_CASE("ext_map does nothing on the identity and acts pointwise") {
    Container list3 = mk_list(3).base;
    ExtElement e = make_ext_element(list3, 2, {0, 1}, 2);
    CHECK(ext_map(list3, identity_map(2), e, 2) == e);

    std::vector<Idx> swap{1, 0};
    ExtElement swapped = ext_map(list3, swap, e, 2);
    CHECK(swapped.fill == std::vector<Idx>{1, 0});
}

TEST_CASE("ext_map respects composition, exhaustively on small sets") {
    for (const Container& c : {mk_exception(1).base, mk_writer(cyclic_monoid(2)).base, mk_reader(2).base}) {
        for (Idx nx = 0; nx <= 3; ++nx)
            for (Idx ny = 0; ny <= 3; ++ny)
                for (Idx nz = 1; nz <= 3; ++nz) {
                    Nat h1count = sat_pow(ny, nx), h2count = sat_pow(nz, ny);
                    std::vector<Idx> h1(nx), h2(ny);
                    for (Nat r1 = 0; r1 < h1count; ++r1) {
                        unrank_uniform(r1, ny, h1);
                        for (Nat r2 = 0; r2 < h2count; ++r2) {
                            unrank_uniform(r2, nz, h2);
                            std::vector<Idx> h21(nx);
                            for (Idx i = 0; i < nx; ++i) h21[i] = h2[h1[i]];
                            for (Idx s = 0; s < c.shape_count(); ++s) {
                                Nat fills = sat_pow(nx, c.pos(s));
                                std::vector<Idx> fill(c.pos(s));
                                for (Nat fr = 0; fr < fills; ++fr) {
                                    unrank_uniform(fr, nx, fill);
                                    ExtElement e{s, fill};
                                    CHECK(ext_map(c, h21, e, nz) ==
                                          ext_map(c, h2, ext_map(c, h1, e, ny), nz));
                                }
                            }
                        }
                    }
                }
    }
}

TEST_CASE("the list tail morphism drops the head") {
    Container src = mk_list(3).base;
    Container dst = make_fueled_container({"none", "some0", "some1", "some2"}, {0, 0, 1, 2});
    ContainerMorphism tail;
    tail.shape_map = {0, 1, 2, 3};
    tail.position_maps = {{}, {}, {1}, {1, 2}};
    validate_morphism(src, dst, tail);

    ExtElement e = make_ext_element(src, 3, {10, 11, 12}, 13);
    ExtElement out = interpret_morphism(src, dst, tail, e);
    CHECK(out.shape == 3);
    CHECK(out.fill == std::vector<Idx>{11, 12});

    SUBCASE("identity morphism is the identity on elements") {
        ContainerMorphism id;
        id.shape_map = identity_map(src.shape_count());
        for (Idx s = 0; s < src.shape_count(); ++s) id.position_maps.push_back(identity_map(src.pos(s)));
        CHECK(interpret_morphism(src, src, id, e) == e);
    }

    SUBCASE("morphism action is natural in the underlying set") {
        for (Idx nx = 0; nx <= 3; ++nx)
            for (Idx ny = 1; ny <= 2; ++ny) {
                Nat hcount = sat_pow(ny, nx);
                std::vector<Idx> h(nx);
                for (Nat hr = 0; hr < hcount; ++hr) {
                    unrank_uniform(hr, ny, h);
                    for (Idx s = 0; s < src.shape_count(); ++s) {
                        Nat fills = sat_pow(nx, src.pos(s));
                        std::vector<Idx> fill(src.pos(s));
                        for (Nat fr = 0; fr < fills; ++fr) {
                            unrank_uniform(fr, nx, fill);
                            ExtElement el{s, fill};
                            CHECK(interpret_morphism(src, dst, tail, ext_map(src, h, el, ny)) ==
                                  ext_map(dst, h, interpret_morphism(src, dst, tail, el), ny));
                        }
                    }
                }
            }
    }
}

TEST_CASE("malformed elements and maps are rejected") {
    Container list3 = mk_list(3).base;
    CHECK_THROWS_AS(make_ext_element(list3, 2, {0}, 2), Error);
    CHECK_THROWS_AS(make_ext_element(list3, 2, {0, 5}, 2), Error);
    ExtElement e = make_ext_element(list3, 2, {0, 1}, 2);
    std::vector<Idx> too_short{0};
    CHECK_THROWS_AS(ext_map(list3, too_short, e, 2), Error);
}

TEST_CASE("fueled containers compose only on the inside") {
    Container li = mk_list(3).base;
    Container exc = mk_exception(1).base;
    CHECK_THROWS_AS(compose_containers(li, exc), Error);
    CompositeContainer cc = compose_containers(exc, li);
    CHECK(cc.base.fueled);
    CHECK(cc.base.shape_count() == 4 + 1);  // ok over four lengths, plus the bare error
}
