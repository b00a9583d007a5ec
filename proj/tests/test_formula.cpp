#include "doctest.h"

#include "test_util.hpp"
#include "spin4/cup.hpp"
#include "spin4/formula.hpp"

using namespace spin4;
using namespace spin4::testing;

TEST_CASE("generator formulas evaluate the argument") {
    auto cx = build_boundary_simplex(4);
    std::mt19937_64 rng(21);
    Cochain a = random_cochain(*cx, 2, Ring::Z2, rng);
    Formula g = Formula::generator(2, 1, 0);
    CHECK(g.apply({&a}, *cx) == a);
}

TEST_CASE("formula cup matches the cochain cup mod 2") {
    auto cx = build_boundary_simplex(4);
    std::mt19937_64 rng(22);
    Cochain a = random_cochain(*cx, 2, Ring::Z2, rng);
    Cochain b = random_cochain(*cx, 1, Ring::Z2, rng);
    Formula ga = Formula::generator(2, 2, 0);
    Formula gb = Formula::generator(1, 2, 1);
    for (int i = 0; i <= 1; ++i) {
        Formula f = cup(ga, gb, i);
        CHECK(f.apply({&a, &b}, *cx) == cup(a, b, i));
    }
    // Iterated products expand correctly.
    Formula f = cup(ga, cup(gb, gb, 0), 1);
    CHECK(f.apply({&a, &b}, *cx) == cup(a, cup(b, b, 0), 1));
}

TEST_CASE("formula coboundary matches the cochain coboundary") {
    auto cx = build_boundary_simplex(4);
    std::mt19937_64 rng(23);
    Cochain a = random_cochain(*cx, 1, Ring::Z2, rng);
    Cochain b = random_cochain(*cx, 1, Ring::Z2, rng);
    Formula ga = Formula::generator(1, 2, 0);
    Formula gb = Formula::generator(1, 2, 1);
    Formula f = cup(ga, gb, 0).d();
    CHECK(f.apply({&a, &b}, *cx) == coboundary(cup(a, b, 0)));
    // d is a derivation mod 2, so dd cancels termwise.
    CHECK(f.d().is_zero());
}

TEST_CASE("substituting a coboundary argument") {
    auto cx = build_boundary_simplex(4);
    std::mt19937_64 rng(24);
    Cochain r = random_cochain(*cx, 1, Ring::Z2, rng);
    Cochain dr = coboundary(r);
    Formula g2 = Formula::generator(2, 1, 0);
    Formula f = cup(g2, g2, 1);               // a cup_1 a, |a| = 2
    Formula fs = f.substitute_coboundary(0);  // (dr) cup_1 (dr), |r| = 1
    CHECK(fs.apply({&r}, *cx) == cup(dr, dr, 1));
}

TEST_CASE("substituting a sum of arguments") {
    auto cx = build_boundary_simplex(4);
    std::mt19937_64 rng(25);
    Cochain a = random_cochain(*cx, 2, Ring::Z2, rng);
    Cochain b = random_cochain(*cx, 2, Ring::Z2, rng);
    Cochain ab = a + b;
    Formula g = Formula::generator(2, 1, 0);
    Formula sq1 = cup(g, g, 1);
    Formula expanded = sq1.substitute_sum(0, 0, 1, 2);
    CHECK(expanded.apply({&a, &b}, *cx) == cup(ab, ab, 1));
}

TEST_CASE("degeneracy pullbacks kill products of generators") {
    Formula g = Formula::generator(2, 1, 0);
    Formula f = cup(cup(g, g, 0), g, 2);
    for (int j = 0; j < f.degree(); ++j)
        CHECK(f.degeneracy_pullback(j).is_zero());
}

TEST_CASE("batch evaluation matches direct evaluation") {
    auto cx = build_simplex(4);
    std::mt19937_64 rng(26);
    Formula g = Formula::generator(2, 1, 0);
    Formula f = cup(g, g, 0);  // degree 4 on the 4-simplex
    BatchEval be(f, 4);
    const Simplex& top = cx->simplices(4)[0];
    std::vector<std::vector<uint64_t>> values(1, std::vector<uint64_t>(be.num_faces(), 0));
    std::vector<Cochain> samples;
    for (int lane = 0; lane < 64; ++lane) {
        Cochain a = random_cochain(*cx, 2, Ring::Z2, rng);
        for (const Simplex& s : cx->simplices(2))
            if (a.ival(s)) values[0][be.face_id(s)] |= 1ULL << lane;
        samples.push_back(std::move(a));
    }
    uint64_t out = be.eval(values);
    for (int lane = 0; lane < 64; ++lane)
        CHECK(((out >> lane) & 1) == (uint64_t)f.eval({&samples[lane]}, top));
}
