#include "doctest.h"

#include "test_util.hpp"
#include "spin4/cup.hpp"

using namespace spin4;
using namespace spin4::testing;

namespace {

Cochain scale(const Cochain& c, long long k) {
    Cochain r(c.complex(), c.degree(), c.ring(), c.modulus());
    for (const auto& [s, v] : c.isupport()) r.set(s, k * v);
    return r;
}

} // namespace

TEST_CASE("cup_1 on a 3-simplex matches the classical convention") {
    auto cx = build_simplex(3);
    std::mt19937_64 rng(11);
    Cochain a = random_cochain(*cx, 2, Ring::Z, rng);
    Cochain b = random_cochain(*cx, 2, Ring::Z, rng);
    Cochain p = cup(a, b, 1);
    Simplex top = cx->canon({0, 1, 2, 3});
    long long want = a.ival(cx->canon({0, 1, 3})) * b.ival(cx->canon({1, 2, 3}))
                   - a.ival(cx->canon({0, 2, 3})) * b.ival(cx->canon({0, 1, 2}));
    CHECK(p.ival(top) == want);
}

TEST_CASE("cup_0 is the front-back face product and is associative") {
    auto cx = build_boundary_simplex(4);
    std::mt19937_64 rng(12);
    Cochain a = random_cochain(*cx, 1, Ring::Z, rng);
    Cochain b = random_cochain(*cx, 1, Ring::Z, rng);
    Cochain c = random_cochain(*cx, 1, Ring::Z, rng);
    CHECK(cup(cup(a, b, 0), c, 0) == cup(a, cup(b, c, 0), 0));
    // Direct evaluation of (a cup b) on a 2-simplex.
    const Simplex& s = cx->simplices(2)[0];
    Simplex front{s[0], s[1]}, back{s[1], s[2]};
    CHECK(cup(a, b, 0).ival(s) == a.ival(front) * b.ival(back));
}

TEST_CASE("integral coboundary identity for cup_i") {
    std::mt19937_64 rng(13);
    auto cx = build_simplex(5);
    for (auto [p, q, i] : {std::tuple{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2},
                           {3, 2, 2}, {1, 2, 1}, {3, 3, 3}, {1, 3, 1}}) {
        Cochain x = random_cochain(*cx, p, Ring::Z, rng);
        Cochain y = random_cochain(*cx, q, Ring::Z, rng);
        int pq = p * q;
        Cochain lhs = coboundary(cup(x, y, i));
        Cochain rhs = cup(coboundary(x), y, i) + scale(cup(x, coboundary(y), i), p % 2 ? -1 : 1)
                    - cup(x, y, i - 1) - scale(cup(y, x, i - 1), (i + pq) % 2 ? -1 : 1);
        CHECK(lhs == scale(rhs, i % 2 ? -1 : 1));
    }
}

TEST_CASE("special lifts satisfy the doubling identities") {
    std::mt19937_64 rng(14);
    auto cx = build_boundary_simplex(4);
    // d(lift of a 1-cocycle) = 2 * lift^2, d(lift of a 2-cocycle) = 2 * lift cup_1 lift.
    Cochain a2 = random_coboundary(*cx, 1, Ring::Z2, rng);
    Cochain A = special_lift(a2);
    CHECK(coboundary(A) == scale(cup(A, A, 0), 2));
    Cochain b2 = random_coboundary(*cx, 2, Ring::Z2, rng);
    Cochain B = special_lift(b2);
    CHECK(coboundary(B) == scale(cup(B, B, 1), 2));
}

TEST_CASE("suspension of cochains intertwines cup_i up to sign") {
    std::mt19937_64 rng(15);
    auto cx = build_boundary_simplex(3);
    auto su = suspension(*cx);
    for (auto [p, q, i] : {std::tuple{1, 1, 0}, {1, 1, 1}, {2, 1, 1}, {1, 2, 0}, {2, 2, 2}}) {
        Cochain x = random_cochain(*cx, p, Ring::Z, rng);
        Cochain y = random_cochain(*cx, q, Ring::Z, rng);
        Cochain lhs = suspend_cochain(cup(x, y, i), *su.complex, su.upper);
        Cochain sx = suspend_cochain(x, *su.complex, su.upper);
        Cochain sy = suspend_cochain(y, *su.complex, su.upper);
        Cochain rhs = scale(cup(sx, sy, i + 1), (p + i + 1) % 2 ? -1 : 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("suspended cochains square to zero") {
    std::mt19937_64 rng(16);
    auto cx = build_boundary_simplex(4);
    auto su = suspension(*cx);
    Cochain a = random_cochain(*cx, 1, Ring::Z2, rng);
    Cochain sa = suspend_cochain(a, *su.complex, su.upper);
    CHECK(sa.degree() == 2);
    CHECK_FALSE(sa.is_zero());
    CHECK(cup(sa, sa, 0).is_zero());
    // Coboundary and suspension commute mod 2.
    CHECK(coboundary(sa) == suspend_cochain(coboundary(a), *su.complex, su.upper));
}

TEST_CASE("steenrod squares on cocycle representatives") {
    std::mt19937_64 rng(17);
    auto cx = build_boundary_simplex(4);
    Cochain c = random_coboundary(*cx, 2, Ring::Z2, rng);
    // Top square is the cup square, sq_0 is the identity on cocycles.
    CHECK(sq(c, 2) == cup(c, c, 0));
    CHECK(sq(c, 0) == c);
    CHECK(is_cocycle(sq(c, 1)));
}
