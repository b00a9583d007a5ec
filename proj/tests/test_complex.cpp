#include "doctest.h"

#include "spin4/builders.hpp"

using namespace spin4;

TEST_CASE("boundary of the 3-simplex is a 2-sphere") {
    auto cx = build_boundary_simplex(3);
    cx->validate();
    CHECK(cx->count(0) == 4);
    CHECK(cx->count(1) == 6);
    CHECK(cx->count(2) == 4);
    CHECK(cx->euler_characteristic() == 2);
    auto o = orient(*cx);
    CHECK(o.orientable);
    // A compatible orientation has zero boundary.
    for (const auto& [f, c] : o.chain.boundary()) {
        (void)f;
        CHECK(c == 0);
    }
}

TEST_CASE("staircase product of two circles is a torus") {
    auto c1 = build_boundary_simplex(2);
    auto c2 = build_boundary_simplex(2);
    auto pr = product_triangulation(*c1, *c2);
    pr.complex->validate();
    pr.pi1.validate();
    pr.pi2.validate();
    CHECK(pr.complex->count(0) == 9);
    CHECK(pr.complex->count(2) == 18);   // 9 squares... 3*3 maximal cell pairs, 2 staircases each
    CHECK(pr.complex->euler_characteristic() == 0);
    CHECK(orient(*pr.complex).orientable);
}

TEST_CASE("product of two 2-spheres") {
    auto s1 = build_boundary_simplex(3);
    auto s2 = build_boundary_simplex(3);
    auto pr = product_triangulation(*s1, *s2);
    pr.complex->validate();
    CHECK(pr.complex->dim() == 4);
    CHECK(pr.complex->count(0) == 16);
    CHECK(pr.complex->count(4) == 4 * 4 * 6);  // C(4,2) staircases per cell pair
    CHECK(pr.complex->euler_characteristic() == 4);
    auto o = orient(*pr.complex);
    CHECK(o.orientable);
    for (const auto& [f, c] : o.chain.boundary()) {
        (void)f;
        CHECK(c == 0);
    }
}

TEST_CASE("barycentric subdivision of the 2-sphere") {
    auto cx = build_boundary_simplex(3);
    auto bs = barycentric_subdivide(*cx);
    bs.complex->validate();
    CHECK(bs.complex->count(0) == 4 + 6 + 4);
    CHECK(bs.complex->count(2) == 24);
    CHECK(bs.complex->euler_characteristic() == 2);
}

TEST_CASE("cone and suspension") {
    auto cx = build_boundary_simplex(3);
    auto cn = cone(*cx);
    cn.complex->validate();
    CHECK(cn.complex->euler_characteristic() == 1);
    auto su = suspension(*cx);
    su.complex->validate();
    CHECK(su.complex->dim() == 3);
    CHECK(su.complex->euler_characteristic() == 0);  // S^3
    CHECK(orient(*su.complex).orientable);
}

TEST_CASE("prism over the 2-sphere with matching ends") {
    auto cx = build_boundary_simplex(3);
    auto pr = prism(*cx, *cx);
    pr.complex->validate();
    pr.incl0.validate();
    pr.incl1.validate();
    CHECK(pr.complex->dim() == 3);
    CHECK(pr.complex->euler_characteristic() == 2);  // S^2 x I retracts to S^2
    // The ends are honest subcomplexes.
    for (const Simplex& s : cx->simplices(2)) {
        auto im0 = pr.incl0.apply(s);
        auto im1 = pr.incl1.apply(s);
        CHECK_FALSE(im0.degenerate);
        CHECK_FALSE(im1.degenerate);
        CHECK(pr.complex->contains(im0.simplex));
        CHECK(pr.complex->contains(im1.simplex));
    }
}

TEST_CASE("prism tolerates a different vertex order on the top end") {
    auto cx = build_boundary_simplex(3);
    std::vector<int> rr = {3, 1, 0, 2};  // reversed-ish ranks
    auto top = reorder_vertices(*cx, rr);
    top->validate();
    auto pr = prism(*cx, *top);
    pr.complex->validate();
    pr.incl0.validate();
    pr.incl1.validate();
    CHECK(pr.complex->euler_characteristic() == 2);
}

TEST_CASE("projective plane and 3-space") {
    auto p2 = build_rp_n(2);
    p2.complex->validate();
    CHECK(p2.complex->euler_characteristic() == 1);
    CHECK_FALSE(orient(*p2.complex).orientable);

    auto p3 = build_rp_n(3);
    p3.complex->validate();
    CHECK(p3.complex->euler_characteristic() == 0);
    CHECK(orient(*p3.complex).orientable);
}
