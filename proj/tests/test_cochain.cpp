#include "doctest.h"

#include "test_util.hpp"

using namespace spin4;
using namespace spin4::testing;

TEST_CASE("coboundary squares to zero") {
    std::mt19937_64 rng(7);
    auto cx = build_boundary_simplex(4);
    for (int deg = 0; deg <= 2; ++deg) {
        for (Ring ring : {Ring::Z2, Ring::Z}) {
            Cochain c = random_cochain(*cx, deg, ring, rng);
            CHECK(coboundary(coboundary(c)).is_zero());
        }
        Cochain q(cx.get(), deg, Ring::QZ);
        for (const Simplex& s : cx->simplices(deg))
            q.set(s, QZ((long long)(rng() % 16), 16));
        CHECK(coboundary(coboundary(q)).is_zero());
    }
}

TEST_CASE("special lift is a {0,1} integer lift") {
    std::mt19937_64 rng(8);
    auto cx = build_boundary_simplex(4);
    Cochain c = random_cochain(*cx, 2, Ring::Z2, rng);
    Cochain l = special_lift(c);
    CHECK(l.ring() == Ring::Z);
    for (const auto& [s, v] : l.isupport()) {
        (void)s;
        CHECK(v == 1);
    }
    CHECK(mod2(l) == c);
}

TEST_CASE("coefficient map halves a mod-2 cochain into Q/Z") {
    auto cx = build_simplex(2);
    Cochain c(cx.get(), 1, Ring::Z2);
    c.set(cx->canon({0, 1}), 1);
    Cochain h = coefficient_map(c, Ring::QZ, Frac(1, 2));
    CHECK(h.qval(cx->canon({0, 1})) == QZ(1, 2));
    CHECK(h.qval(cx->canon({0, 2})).is_zero());
    CHECK_THROWS(coefficient_map(c, Ring::QZ, Frac(1, 4)));  // 1/4 * 2 is not integral
}

TEST_CASE("pullback commutes with coboundary") {
    std::mt19937_64 rng(9);
    auto cx = build_boundary_simplex(3);
    auto su = suspension(*cx);
    // Include the base as the equator of its suspension.
    SimplicialMap incl;
    incl.source = cx.get();
    incl.target = su.complex.get();
    incl.vertex_assignment.resize(cx->num_vertices());
    for (std::int32_t v = 0; v < cx->num_vertices(); ++v) incl.vertex_assignment[v] = v;
    incl.validate();
    for (int deg = 0; deg <= 1; ++deg) {
        Cochain c = random_cochain(*su.complex, deg, Ring::Z, rng);
        CHECK(pullback(incl, coboundary(c)) == coboundary(pullback(incl, c)));
    }
}

TEST_CASE("integration against the fundamental chain") {
    auto cx = build_boundary_simplex(3);
    auto o = orient(*cx);
    REQUIRE(o.orientable);
    // A coboundary integrates to zero over a cycle.
    std::mt19937_64 rng(10);
    Cochain c = random_cochain(*cx, 1, Ring::Z, rng);
    CHECK(integrate_i(coboundary(c), o.chain) == 0);
    Cochain q(cx.get(), 1, Ring::QZ);
    for (const Simplex& s : cx->simplices(1)) q.set(s, QZ((long long)(rng() % 8), 8));
    CHECK(integrate_q(coboundary(q), o.chain).is_zero());
}
