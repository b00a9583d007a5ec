#include "doctest.h"

#include <random>
#include <vector>

#include "spin4/builders.hpp"
#include "spin4/cup.hpp"
#include "spin4/linalg.hpp"
#include "spin4/natural_ops.hpp"
#include "test_util.hpp"

using namespace spin4;
using namespace spin4::testing;

namespace {

// Fill 64 value lanes for a degree-d cochain argument on the n-simplex from
// per-lane masks, one bit per d-face in the BatchEval face order.
void fill_faces(const BatchEval& be, int d, const std::vector<uint64_t>& masks,
                std::vector<uint64_t>& values) {
    std::fill(values.begin(), values.end(), 0);
    int bit = 0;
    for (int fid = 0; fid < be.num_faces(); ++fid) {
        if (be.faces()[(size_t)fid].dim() != d) continue;
        uint64_t lanes = 0;
        for (int lane = 0; lane < (int)masks.size(); ++lane)
            if ((masks[(size_t)lane] >> bit) & 1) lanes |= 1ULL << lane;
        values[(size_t)fid] = lanes;
        ++bit;
    }
}

// Fill lanes for a degree-2 cocycle on the n-simplex from masks over the
// basis d(edge (i,j)), 1 <= i < j <= n: bit k turns on the triangles that
// contain both endpoints of the k-th edge.
void fill_cocycle2(const BatchEval& be, int n, const std::vector<uint32_t>& masks,
                   std::vector<uint64_t>& values) {
    std::fill(values.begin(), values.end(), 0);
    int bit = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++bit) {
            uint64_t lanes = 0;
            for (int lane = 0; lane < (int)masks.size(); ++lane)
                if ((masks[(size_t)lane] >> bit) & 1) lanes |= 1ULL << lane;
            if (!lanes) continue;
            for (int u = 0; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v)
                    for (int w = v + 1; w <= n; ++w) {
                        bool has_i = (u == i || v == i || w == i);
                        bool has_j = (u == j || v == j || w == j);
                        if (has_i && has_j)
                            values[(size_t)be.face_id(Simplex{u, v, w})] ^= lanes;
                    }
        }
}

// A formula vanishes on every lane of every batch produced by `next_batch`.
template <typename Fill>
bool vanishes_over(const Formula& f, int n, int num_batches, Fill&& fill_batch) {
    BatchEval be(f, n);
    std::vector<std::vector<uint64_t>> values(
        (size_t)f.arity(), std::vector<uint64_t>((size_t)be.num_faces()));
    for (int b = 0; b < num_batches; ++b) {
        fill_batch(be, b, values);
        if (be.eval(values) != 0) return false;
    }
    return true;
}

// Decide whether a degree-4 formula in degree-2 cocycle arguments is the
// coboundary of a natural degree-3 formula. Candidate primitives are spanned
// by monomials in the per-argument cocycle coordinates on the 3-simplex; the
// equation is imposed on every cocycle tuple on the 4-simplex, which is the
// universal instance for a degree-4 operation.
bool natural_coboundary_cocycle_args(const Formula& f) {
    REQUIRE(f.degree() == 4);
    const int arity = f.arity();
    std::vector<FFactor> vars;
    for (int arg = 0; arg < arity; ++arg)
        for (int i = 0; i <= 2; ++i)
            for (int j = i + 1; j <= 2; ++j) vars.push_back(FFactor{arg, Simplex{i, j, 3}});
    const int nv = (int)vars.size();
    std::vector<BatchEval> dmono;
    for (uint32_t mask = 1; mask < (1u << nv); ++mask) {
        FTerm t;
        for (int k = 0; k < nv; ++k)
            if ((mask >> k) & 1) t.push_back(vars[(size_t)k]);
        dmono.emplace_back(Formula::from_terms(3, arity, {t}).d(), 4);
    }
    const int nm = (int)dmono.size();
    BatchEval rhs(f, 4);
    std::vector<std::vector<uint64_t>> values(
        (size_t)arity, std::vector<uint64_t>((size_t)rhs.num_faces()));
    SparseGF2 sys(nm + 1);
    const int total_bits = 6 * arity;  // dim Z^2(simplex-4) = 6 per argument
    const int batches = 1 << (total_bits - 6);
    for (int b = 0; b < batches; ++b) {
        std::vector<uint32_t> am(64), bm(64);
        for (int lane = 0; lane < 64; ++lane) {
            uint32_t idx = ((uint32_t)b << 6) | (uint32_t)lane;
            am[(size_t)lane] = idx & 63u;
            bm[(size_t)lane] = idx >> 6;
        }
        fill_cocycle2(rhs, 4, am, values[0]);
        if (arity == 2) fill_cocycle2(rhs, 4, bm, values[1]);
        uint64_t r = rhs.eval(values);
        std::vector<uint64_t> cols((size_t)nm);
        for (int m = 0; m < nm; ++m) cols[(size_t)m] = dmono[(size_t)m].eval(values);
        for (int lane = 0; lane < 64; ++lane) {
            std::vector<int> row;
            for (int m = 0; m < nm; ++m)
                if ((cols[(size_t)m] >> lane) & 1) row.push_back(m);
            if ((r >> lane) & 1) row.push_back(nm);
            sys.add_row(std::move(row));
        }
    }
    return solve_sentinel(sys).has_value();
}

// Same decision for a degree-4 formula in one unconstrained 1-cochain
// argument: primitives are monomials in the six edge values on the 3-simplex,
// equations run over all 2^10 1-cochains on the 4-simplex.
bool natural_coboundary_onecochain_arg(const Formula& f) {
    REQUIRE(f.degree() == 4);
    REQUIRE(f.arity() == 1);
    std::vector<FFactor> vars;
    for (int i = 0; i <= 2; ++i)
        for (int j = i + 1; j <= 3; ++j) vars.push_back(FFactor{0, Simplex{i, j}});
    const int nv = (int)vars.size();
    std::vector<BatchEval> dmono;
    for (uint32_t mask = 1; mask < (1u << nv); ++mask) {
        FTerm t;
        for (int k = 0; k < nv; ++k)
            if ((mask >> k) & 1) t.push_back(vars[(size_t)k]);
        dmono.emplace_back(Formula::from_terms(3, 1, {t}).d(), 4);
    }
    const int nm = (int)dmono.size();
    BatchEval rhs(f, 4);
    std::vector<std::vector<uint64_t>> values(1, std::vector<uint64_t>((size_t)rhs.num_faces()));
    SparseGF2 sys(nm + 1);
    for (int b = 0; b < (1 << 4); ++b) {
        std::vector<uint64_t> masks(64);
        for (int lane = 0; lane < 64; ++lane)
            masks[(size_t)lane] = ((uint64_t)b << 6) | (uint64_t)lane;
        fill_faces(rhs, 1, masks, values[0]);
        uint64_t r = rhs.eval(values);
        std::vector<uint64_t> cols((size_t)nm);
        for (int m = 0; m < nm; ++m) cols[(size_t)m] = dmono[(size_t)m].eval(values);
        for (int lane = 0; lane < 64; ++lane) {
            std::vector<int> row;
            for (int m = 0; m < nm; ++m)
                if ((cols[(size_t)m] >> lane) & 1) row.push_back(m);
            if ((r >> lane) & 1) row.push_back(nm);
            sys.add_row(std::move(row));
        }
    }
    return solve_sentinel(sys).has_value();
}

Formula arg0_only(const Formula& f) {
    std::vector<FTerm> keep;
    for (const FTerm& t : f.terms()) {
        bool pure = true;
        for (const FFactor& fac : t)
            if (fac.arg != 0) pure = false;
        if (pure) keep.push_back(t);
    }
    return Formula::from_terms(f.degree(), 1, std::move(keep));
}

Formula arg1_only_as_arg0(const Formula& f) {
    std::vector<FTerm> keep;
    for (const FTerm& t : f.terms()) {
        bool pure = true;
        FTerm r;
        for (const FFactor& fac : t) {
            if (fac.arg != 1) pure = false;
            r.push_back(FFactor{0, fac.face});
        }
        if (pure) keep.push_back(std::move(r));
    }
    return Formula::from_terms(f.degree(), 1, std::move(keep));
}

// d x(a) = a^2 cup_2 a^2 + (a cup_1 a)^2 for the degree-2 generator a.
Formula dx_target() {
    Formula a = Formula::generator(2, 1, 0);
    Formula aa = cup(a, a, 0), sq1 = cup(a, a, 1);
    return cup(aa, aa, 2) + cup(sq1, sq1, 0);
}

} // namespace

TEST_CASE("x matches its printed expansion") {
    CHECK(x_medina_formula() ==
          Formula::from_terms(5, 1,
                              {{FFactor{0, {0, 1, 2}}, FFactor{0, {2, 3, 5}},
                                FFactor{0, {0, 2, 3}}, FFactor{0, {3, 4, 5}}}}));
    // a(a cup_1 a)(012345) = a(012)[a(235)a(345) + a(245)a(234)].
    CHECK(x_formula() ==
          x_medina_formula() +
              Formula::from_terms(5, 1,
                                  {{FFactor{0, {0, 1, 2}}, FFactor{0, {2, 3, 5}},
                                    FFactor{0, {3, 4, 5}}},
                                   {FFactor{0, {0, 1, 2}}, FFactor{0, {2, 4, 5}},
                                    FFactor{0, {2, 3, 4}}}}));
}

TEST_CASE("coboundaries of x_M and x agree with the composite squares on every cocycle") {
    // Exhaustive over all 2^15 2-cocycles on the 6-simplex (basis: coboundaries
    // of the edges avoiding vertex 0).
    auto fill = [](const BatchEval& be, int b, std::vector<std::vector<uint64_t>>& values) {
        std::vector<uint32_t> masks(64);
        for (int lane = 0; lane < 64; ++lane)
            masks[(size_t)lane] = ((uint32_t)b << 6) | (uint32_t)lane;
        fill_cocycle2(be, 6, masks, values[0]);
    };
    CHECK(vanishes_over(x_medina_formula().d() + dx_target(), 6, 1 << 9, fill));
    CHECK(vanishes_over(x_formula().d() + dx_target(), 6, 1 << 9, fill));
}

TEST_CASE("x on exact cocycles by direct substitution") {
    auto cx = build_simplex(5);
    const Simplex top{0, 1, 2, 3, 4, 5};
    for (const Simplex& e : cx->simplices(1)) {
        Cochain r(cx.get(), 1, Ring::Z2);
        r.set(e, 1);
        Cochain a = coboundary(r);
        CHECK(x_medina_formula().eval({&a}, top) == 0);
    }
    Cochain r(cx.get(), 1, Ring::Z2);
    r.set(Simplex{0, 1}, 1);
    r.set(Simplex{2, 3}, 1);
    r.set(Simplex{3, 4}, 1);
    Cochain a = coboundary(r);
    CHECK(x_medina_formula().eval({&a}, top) == 1);
    CHECK(x_formula().eval({&a}, top) == 0);
    CHECK(x_op(a).ival(top) == 0);
}

TEST_CASE("x vanishes at zero and on suspensions, and rejects non-cocycles") {
    auto cx = build_simplex(5);
    Cochain zero(cx.get(), 2, Ring::Z2);
    CHECK(x_op(zero).is_zero());

    auto base = build_boundary_simplex(5);
    auto su = suspension(*base);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 5; ++it) {
        Cochain alpha = random_coboundary(*base, 1, Ring::Z2, rng);
        Cochain salpha = suspend_cochain(alpha, *su.complex, su.upper);
        REQUIRE(is_cocycle(salpha));
        if (!salpha.is_zero()) CHECK(x_op(salpha).is_zero());
    }

    Cochain bad(cx.get(), 2, Ring::Z2);
    bad.set(Simplex{0, 1, 2}, 1);
    CHECK_THROWS_AS(x_op(bad), std::invalid_argument);
}

TEST_CASE("both nonlinearity terms vanish when an argument is zero") {
    auto cx = build_simplex(5);
    std::mt19937_64 rng(5);
    Cochain zero(cx.get(), 2, Ring::Z2);
    for (int it = 0; it < 4; ++it) {
        Cochain a = random_coboundary(*cx, 2, Ring::Z2, rng);
        auto [big1, small1] = delta_terms(a, zero);
        CHECK(big1.is_zero());
        CHECK(small1.is_zero());
        auto [big2, small2] = delta_terms(zero, a);
        CHECK(big2.is_zero());
        CHECK(small2.is_zero());
    }
}

TEST_CASE("the nine-term component collapses to a2 cup_3 a2 on the diagonal") {
    Formula a = Formula::generator(2, 1, 0);
    Formula aa = cup(a, a, 0);
    Formula diff = small_delta_x_formula().rename_args({0, 0}, 1) + cup(aa, aa, 3);
    // Exhaustive over the 1024 cocycles on the 5-simplex.
    auto fill = [](const BatchEval& be, int b, std::vector<std::vector<uint64_t>>& values) {
        std::vector<uint32_t> masks(64);
        for (int lane = 0; lane < 64; ++lane)
            masks[(size_t)lane] = ((uint32_t)b << 6) | (uint32_t)lane;
        fill_cocycle2(be, 5, masks, values[0]);
    };
    CHECK(vanishes_over(diff, 5, 1 << 4, fill));
}

TEST_CASE("the nonlinearity defect is a cocycle") {
    std::mt19937_64 rng(17);
    auto check_on = [&](const OrderedComplex& cx) {
        for (int it = 0; it < 3; ++it) {
            Cochain a = random_coboundary(cx, 2, Ring::Z2, rng);
            Cochain b = random_coboundary(cx, 2, Ring::Z2, rng);
            auto [big, small] = delta_terms(a, b);
            CHECK(is_cocycle(big + small));
        }
    };
    check_on(*build_simplex(6));      // one 6-simplex makes the check non-vacuous
    check_on(*build_boundary_simplex(7));
}

TEST_CASE("the quartic correction bounds the defect on every cocycle pair") {
    CHECK(y4_formula().num_terms() == 174);
    Formula defect = y4_formula().d() + delta_x_formula() + small_delta_x_formula();
    // Exhaustive over all 2^20 cocycle pairs on the 5-simplex.
    auto fill = [](const BatchEval& be, int b, std::vector<std::vector<uint64_t>>& values) {
        std::vector<uint32_t> am(64), bm(64);
        for (int lane = 0; lane < 64; ++lane) {
            uint32_t pair = ((uint32_t)b << 6) | (uint32_t)lane;
            am[(size_t)lane] = pair & 1023u;
            bm[(size_t)lane] = pair >> 10;
        }
        fill_cocycle2(be, 5, am, values[0]);
        fill_cocycle2(be, 5, bm, values[1]);
    };
    CHECK(vanishes_over(defect, 5, 1 << 14, fill));
}

TEST_CASE("the quartic correction bounds the defect on complexes") {
    std::mt19937_64 rng(23);
    auto check_on = [&](const OrderedComplex& cx) {
        for (int it = 0; it < 3; ++it) {
            Cochain a = random_coboundary(cx, 2, Ring::Z2, rng);
            Cochain b = random_coboundary(cx, 2, Ring::Z2, rng);
            auto [big, small] = delta_terms(a, b);
            CHECK(coboundary(y4_op(a, b)) == big + small);
        }
    };
    check_on(*build_simplex(6));
    check_on(*build_boundary_simplex(7));
}

TEST_CASE("side conditions of the quartic correction are natural coboundaries") {
    CHECK(natural_coboundary_cocycle_args(arg0_only(y4_formula())));
    CHECK(natural_coboundary_cocycle_args(arg1_only_as_arg0(y4_formula())));
    Formula a = Formula::generator(2, 1, 0);
    Formula diag = y4_formula().rename_args({0, 0}, 1) + cup(a, cup(a, a, 1), 1) + cup(a, a, 0);
    CHECK(natural_coboundary_cocycle_args(diag));
}

TEST_CASE("operations commute with simplicial maps") {
    auto big = build_simplex(6);
    auto small = build_simplex(5);
    std::mt19937_64 rng(31);

    // Monotone collapse of the 6-simplex onto the 5-simplex: x is normalized,
    // so it commutes even with degenerate maps.
    SimplicialMap collapse;
    collapse.source = big.get();
    collapse.target = small.get();
    collapse.vertex_assignment = {0, 1, 2, 3, 3, 4, 5};
    collapse.validate();

    // Order-preserving inclusion of the 5-simplex into the 6-simplex, the
    // naturality all three operations satisfy.
    SimplicialMap incl;
    incl.source = small.get();
    incl.target = big.get();
    incl.vertex_assignment = {0, 1, 2, 4, 5, 6};
    incl.validate();

    for (int it = 0; it < 5; ++it) {
        Cochain a = random_coboundary(*small, 2, Ring::Z2, rng);
        Cochain b = random_coboundary(*small, 2, Ring::Z2, rng);
        Cochain r = random_cochain(*small, 1, Ring::Z2, rng);
        CHECK(pullback(collapse, x_op(a)) == x_op(pullback(collapse, a)));

        Cochain A = random_coboundary(*big, 2, Ring::Z2, rng);
        Cochain B = random_coboundary(*big, 2, Ring::Z2, rng);
        Cochain R = random_cochain(*big, 1, Ring::Z2, rng);
        CHECK(pullback(incl, x_op(A)) == x_op(pullback(incl, A)));
        CHECK(pullback(incl, y4_op(A, B)) == y4_op(pullback(incl, A), pullback(incl, B)));
        CHECK(pullback(incl, z_op(R)) == z_op(pullback(incl, R)));
    }

    // z is normalized, so it also commutes with vertex-collapsing maps.
    SimplicialMap collapse01;
    collapse01.source = big.get();
    collapse01.target = small.get();
    collapse01.vertex_assignment = {0, 0, 1, 2, 3, 4, 5};
    collapse01.validate();
    for (int it = 0; it < 5; ++it) {
        Cochain r = random_cochain(*small, 1, Ring::Z2, rng);
        CHECK(pullback(collapse01, z_op(r)) == z_op(pullback(collapse01, r)));
        CHECK(pullback(collapse, z_op(r)) == z_op(pullback(collapse, r)));
    }

    // The quartic correction is not normalized (see the degeneracy test
    // below), so it cannot commute with vertex-collapsing maps; pin down an
    // explicit failure so the limitation stays visible.
    bool y4_breaks = false;
    for (int it = 0; it < 50 && !y4_breaks; ++it) {
        Cochain a = random_coboundary(*small, 2, Ring::Z2, rng);
        Cochain b = random_coboundary(*small, 2, Ring::Z2, rng);
        if (pullback(collapse, y4_op(a, b)) !=
            y4_op(pullback(collapse, a), pullback(collapse, b)))
            y4_breaks = true;
    }
    CHECK(y4_breaks);
}

TEST_CASE("degeneracy behavior of the operation formulas") {
    // Everything built from generators, cup products and coboundaries is
    // normalized: it vanishes identically on degenerate simplices.
    for (int j = 0; j <= 4; ++j) CHECK(x_formula().degeneracy_pullback(j).is_zero());
    for (int j = 0; j <= 4; ++j) CHECK(delta_x_formula().degeneracy_pullback(j).is_zero());
    for (int j = 0; j <= 4; ++j) CHECK(small_delta_x_formula().degeneracy_pullback(j).is_zero());

    // The printed quartic correction is not normalized: collapsing vertices
    // 2,3 leaves the residue a(012)b(012) as a function of cocycle pairs, and
    // collapsing 3,4 leaves the diagonal residue. The sum of the two residues
    // is d(a(012)b(012)), the only nonzero natural coboundary available in
    // degree 3, so no coboundary shift of the correction removes them: the
    // defect is intrinsic to the operation, not a transcription error.
    for (int j = 0; j <= 1; ++j) CHECK(y4_formula().degeneracy_pullback(j).is_zero());
    Formula res2 = y4_formula().degeneracy_pullback(2);
    Formula res3 = y4_formula().degeneracy_pullback(3);
    CHECK(res2.num_terms() == 9);
    CHECK(res3.num_terms() == 3);
    Formula cupform = Formula::from_terms(2, 2, {{FFactor{0, {0, 1, 2}}, FFactor{1, {0, 1, 2}}}});
    // res2 + res3 = d(a(012)b(012)) on every cocycle pair on the 3-simplex.
    auto fill = [](const BatchEval& be, int b, std::vector<std::vector<uint64_t>>& values) {
        std::vector<uint32_t> am(64), bm(64);
        for (int lane = 0; lane < 64; ++lane) {
            uint32_t pair = ((uint32_t)b << 6) | (uint32_t)lane;
            am[(size_t)lane] = pair & 7u;
            bm[(size_t)lane] = pair >> 3;
        }
        fill_cocycle2(be, 3, am, values[0]);
        fill_cocycle2(be, 3, bm, values[1]);
    };
    CHECK(vanishes_over(res2 + res3 + cupform.d(), 3, 1, fill));
    CHECK_FALSE(vanishes_over(res2, 3, 1, fill));
    CHECK_FALSE(vanishes_over(res3, 3, 1, fill));

    // z is normalized; its corrective term cancels the one residue the other
    // nine terms leave under the 0th degeneracy.
    for (int j = 0; j <= 3; ++j) CHECK(z_formula().degeneracy_pullback(j).is_zero());
}

TEST_CASE("z bounds the defect of x on exact cocycles") {
    // Nine hand-derived terms plus the corrective term r(12)r(23)r(34) that
    // the defining identity requires.
    CHECK(z_medina_formula().num_terms() == 10);
    auto cx = build_simplex(4);
    Cochain zero(cx.get(), 1, Ring::Z2);
    CHECK(z_op(zero).is_zero());

    // x(dr) + Sq2(r dr) + Sq1(r) Sq1(dr) + d z(r) = 0, exhaustively over all
    // 2^15 1-cochains on the 5-simplex. Since r and r dr are not closed, the
    // squares carry their cup_{n-i+1} coboundary corrections.
    Formula r = Formula::generator(1, 1, 0);
    Formula dr = r.d();
    Formula rdr = cup(r, dr, 0);
    Formula sq2_rdr = cup(rdr, rdr, 1) + cup(rdr, cup(dr, dr, 0), 2);
    Formula sq1_r = cup(r, r, 0) + cup(r, dr, 1);
    Formula lhs = x_formula().substitute_coboundary(0) + sq2_rdr +
                  cup(sq1_r, cup(dr, dr, 1), 0) + z_formula().d();
    auto fill = [](const BatchEval& be, int b, std::vector<std::vector<uint64_t>>& values) {
        std::vector<uint64_t> masks(64);
        for (int lane = 0; lane < 64; ++lane)
            masks[(size_t)lane] = ((uint64_t)b << 6) | (uint64_t)lane;
        fill_faces(be, 1, masks, values[0]);
    };
    CHECK(vanishes_over(lhs, 5, 1 << 9, fill));
}

TEST_CASE("quarter identity for special lifts on the 2-simplex") {
    // (1/4) d R = (1/4) Dr + (1/2) Sq1(r) in Q/Z, R and Dr the 0/1 integer
    // lifts of r and dr, exhaustively over the eight 1-cochains.
    auto cx = build_simplex(2);
    const std::vector<Simplex> edges = {{0, 1}, {0, 2}, {1, 2}};
    for (int mask = 0; mask < 8; ++mask) {
        Cochain r(cx.get(), 1, Ring::Z2);
        for (int k = 0; k < 3; ++k)
            if ((mask >> k) & 1) r.set(edges[(size_t)k], 1);
        Cochain lhs = coefficient_map(coboundary(special_lift(r)), Ring::QZ, Frac(1, 4));
        Cochain rhs = coefficient_map(special_lift(coboundary(r)), Ring::QZ, Frac(1, 4)) +
                      coefficient_map(sq(r, 1), Ring::QZ, Frac(1, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cone contraction yields a primitive of a natural cocycle") {
    Formula r = Formula::generator(1, 1, 0);
    Formula dr = r.d();
    Formula rdr = cup(r, dr, 0);
    Formula sq2_rdr = cup(rdr, rdr, 1) + cup(rdr, cup(dr, dr, 0), 2);
    Formula sq1_r = cup(r, r, 0) + cup(r, dr, 1);
    Formula target = x_medina_formula().substitute_coboundary(0) + sq2_rdr + cup(sq1_r, cup(dr, dr, 1), 0);
    Formula phi = derive_via_cone(target);
    CHECK(phi.degree() == 4);

    // d phi = target as functions of every 1-cochain on the 5-simplex.
    auto fill = [](const BatchEval& be, int b, std::vector<std::vector<uint64_t>>& values) {
        std::vector<uint64_t> masks(64);
        for (int lane = 0; lane < 64; ++lane)
            masks[(size_t)lane] = ((uint64_t)b << 6) | (uint64_t)lane;
        fill_faces(be, 1, masks, values[0]);
    };
    CHECK(vanishes_over(phi.d() + target, 5, 1 << 9, fill));

    // Same identity applied on complexes with 5-cells.
    std::mt19937_64 rng(41);
    auto cx6 = build_simplex(6);
    auto bd7 = build_boundary_simplex(7);
    for (const OrderedComplex* cx :
         {(const OrderedComplex*)cx6.get(), (const OrderedComplex*)bd7.get()}) {
        for (int it = 0; it < 3; ++it) {
            Cochain rr = random_cochain(*cx, 1, Ring::Z2, rng);
            CHECK(coboundary(phi.apply({&rr}, *cx)) == target.apply({&rr}, *cx));
        }
    }

    // The derived primitive agrees with the printed one up to a natural
    // coboundary.
    CHECK(natural_coboundary_onecochain_arg(phi + z_medina_formula()));

    CHECK(derive_via_cone(Formula(3, 1)).is_zero());
    CHECK_THROWS_AS(derive_via_cone(Formula::generator(2, 1, 0)), std::invalid_argument);
}

TEST_CASE("rediscovering the quartic correction from its defining system") {
    DiscoverResult plain = discover_y4(false);
    REQUIRE(plain.found);
    DiscoverResult sided = discover_y4(true);
    REQUIRE(sided.found);

    // Spot check on random cocycle pairs (the solver already verified all
    // 2^20 internally).
    Formula defect = sided.formula.d() + delta_x_formula() + small_delta_x_formula();
    std::mt19937_64 rng(59);
    auto fill = [&rng](const BatchEval& be, int, std::vector<std::vector<uint64_t>>& values) {
        std::vector<uint32_t> am(64), bm(64);
        for (int lane = 0; lane < 64; ++lane) {
            uint64_t v = rng();
            am[(size_t)lane] = (uint32_t)(v & 1023u);
            bm[(size_t)lane] = (uint32_t)((v >> 10) & 1023u);
        }
        fill_cocycle2(be, 5, am, values[0]);
        fill_cocycle2(be, 5, bm, values[1]);
    };
    CHECK(vanishes_over(defect, 5, 160, fill));  // 10240 random pairs

    // Both solutions match the printed formula up to a natural coboundary.
    CHECK(natural_coboundary_cocycle_args(sided.formula + y4_formula()));
    CHECK(natural_coboundary_cocycle_args(plain.formula + y4_formula()));

    // Flipping the diagonal side condition shifts the solution by ab.
    DiscoverResult flipped = discover_y4(true, true);
    REQUIRE(flipped.found);
    Formula ab = cup(Formula::generator(2, 2, 0), Formula::generator(2, 2, 1), 0);
    CHECK(natural_coboundary_cocycle_args(flipped.formula + y4_formula() + ab));
}

TEST_CASE("suspension form of the quartic correction") {
    // y4(sa, sb) = s(a (a cup_1 b) b) up to coboundaries on a suspension.
    auto base = build_boundary_simplex(4);
    auto su = suspension(*base);
    std::mt19937_64 rng(67);
    for (int it = 0; it < 4; ++it) {
        Cochain a = random_coboundary(*base, 1, Ring::Z2, rng);
        Cochain b = random_coboundary(*base, 1, Ring::Z2, rng);
        Cochain sa = suspend_cochain(a, *su.complex, su.upper);
        Cochain sb = suspend_cochain(b, *su.complex, su.upper);
        REQUIRE(is_cocycle(sa));
        REQUIRE(is_cocycle(sb));
        Cochain w = cup(a, cup(cup(a, b, 1), b, 0), 0);
        Cochain diff = y4_op(sa, sb) + suspend_cochain(w, *su.complex, su.upper);
        CHECK(is_coboundary_z2(diff));
    }
}
