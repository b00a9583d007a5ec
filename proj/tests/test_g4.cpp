#include "doctest.h"

#include "test_util.hpp"
#include "spin4/cup.hpp"
#include "spin4/g4.hpp"
#include "spin4/linalg.hpp"
#include "spin4/natural_ops.hpp"

using namespace spin4;
using namespace spin4::testing;

namespace {

Cochain random_qz(const OrderedComplex& cx, int deg, std::mt19937_64& rng, long long den = 8) {
    Cochain c(&cx, deg, Ring::QZ);
    if (deg > cx.dim()) return c;
    for (const Simplex& s : cx.simplices(deg))
        c.set(s, QZ((long long)(rng() % (unsigned long long)den), den));
    return c;
}

// A random member of the triple set: a = de is an exact 2-cocycle, and
// p = e cup a + (coboundary) satisfies dp = a^2 since d(e cup a) = a^2 mod 2.
Triple random_triple(const OrderedComplex& cx, std::mt19937_64& rng) {
    Cochain e = random_cochain(cx, 1, Ring::Z2, rng);
    Cochain a = coboundary(e);
    Cochain p = cup(e, a, 0) + random_coboundary(cx, 3, Ring::Z2, rng);
    return {random_qz(cx, 4, rng), p, a};
}

RelationPair random_relation(const OrderedComplex& cx, std::mt19937_64& rng) {
    return {random_cochain(cx, 2, Ring::Z2, rng), random_cochain(cx, 1, Ring::Z2, rng)};
}

// A random Kernel(D) member: a relation image times a closed (w, 0, 0).
Triple random_kernel_triple(const OrderedComplex& cx, std::mt19937_64& rng) {
    Triple closed = zero_triple(cx);
    closed.w = coboundary(random_qz(cx, 3, rng));
    return triple_product(d_prime(random_relation(cx, rng)), closed);
}

// A random G3 member: dw = (1/2)p^2 holds because p = df gives
// (1/2)p^2 = (1/2)d(f cup df).
G3Triple random_g3(const OrderedComplex& cx, std::mt19937_64& rng) {
    Cochain f = random_cochain(cx, 1, Ring::Z2, rng);
    Cochain p = coboundary(f);
    Cochain w = coefficient_map(cup(f, p, 0), Ring::QZ, Frac(1, 2)) +
                coboundary(random_qz(cx, 2, rng));
    return {w, p, coboundary(random_cochain(cx, 0, Ring::Z2, rng))};
}

} // namespace

TEST_CASE("basic equation: k is closed and vanishing cases") {
    std::mt19937_64 rng(50);
    auto s5 = build_boundary_simplex(6);
    CHECK(basic_equation_D(zero_triple(*s5)).is_zero());
    for (int trial = 0; trial < 5; ++trial) {
        Triple t = random_triple(*s5, rng);
        CHECK(is_cocycle(k_invariant(t.p, t.a)));
    }
    for (int trial = 0; trial < 5; ++trial) {
        auto cx = random_complex(rng, 9, 5, 6);
        Triple t = random_triple(*cx, rng);
        CHECK(is_cocycle(k_invariant(t.p, t.a)));
    }
    // (0, 0, s alpha) is in the kernel on suspended projective spaces.
    for (int n = 2; n <= 3; ++n) {
        auto rp = build_rp_n(n);
        auto susp = suspension(*rp.complex);
        Cochain alpha(rp.complex.get(), 1, Ring::Z2);
        for (const auto& [s, v] : rp.deck_cocycle_support) alpha.set(s, v);
        Triple t = zero_triple(*susp.complex);
        t.a = suspend_cochain(alpha, *susp.complex, susp.upper);
        CHECK(basic_equation_D(t).is_zero());
    }
}

TEST_CASE("triple product: identity, D-additivity, associativity") {
    std::mt19937_64 rng(51);
    auto s5 = build_boundary_simplex(6);
    for (int trial = 0; trial < 4; ++trial) {
        Triple t1 = random_triple(*s5, rng), t2 = random_triple(*s5, rng);
        Triple t3 = random_triple(*s5, rng);
        // Multiplying by (0,0,0) changes nothing.
        Triple e = triple_product(t1, zero_triple(*s5));
        CHECK(e.w == t1.w);
        CHECK(e.p == t1.p);
        CHECK(e.a == t1.a);
        // D is additive over the product, as an exact cochain identity.
        CHECK(basic_equation_D(triple_product(t1, t2)) ==
              basic_equation_D(t1) + basic_equation_D(t2));
        // Associative up to the (df,0,0) quotient.
        Triple lhs = triple_product(triple_product(t1, t2), t3);
        Triple rhs = triple_product(t1, triple_product(t2, t3));
        CHECK(lhs.p == rhs.p);
        CHECK(lhs.a == rhs.a);
        CHECK(is_coboundary_qz2(lhs.w - rhs.w));
    }
    // The restricted product on (w, p, 0) triples collapses, exactly.
    for (int trial = 0; trial < 4; ++trial) {
        Triple t1 = zero_triple(*s5), t2 = zero_triple(*s5);
        t1.w = random_qz(*s5, 4, rng);
        t2.w = random_qz(*s5, 4, rng);
        t1.p = random_coboundary(*s5, 3, Ring::Z2, rng);
        t2.p = random_coboundary(*s5, 3, Ring::Z2, rng);
        Triple pr = triple_product(t1, t2);
        CHECK(pr.w == t1.w + t2.w + coefficient_map(cup(t1.p, t2.p, 2), Ring::QZ, Frac(1, 2)));
        CHECK(pr.p == t1.p + t2.p);
        CHECK(pr.a.is_zero());
    }
}

TEST_CASE("triple inverse") {
    std::mt19937_64 rng(52);
    auto s5 = build_boundary_simplex(6);
    auto s4 = build_boundary_simplex(5);
    Triple z = zero_triple(*s4);
    Triple zi = triple_inverse(z);
    CHECK((zi.w.is_zero() && zi.p.is_zero() && zi.a.is_zero()));
    for (const OrderedComplex* cx : {s5.get(), s4.get()}) {
        for (int trial = 0; trial < 4; ++trial) {
            Triple t = random_triple(*cx, rng);
            Triple pr = triple_product(t, triple_inverse(t));
            CHECK(pr.p.is_zero());
            CHECK(pr.a.is_zero());
            CHECK(is_coboundary_qz2(pr.w));
        }
    }
    // Involution modulo nullity, on kernel members where nullity is defined.
    for (int trial = 0; trial < 3; ++trial) {
        Triple t = random_kernel_triple(*s4, rng);
        Triple tt = triple_inverse(triple_inverse(t));
        CHECK(tt.p == t.p);
        CHECK(tt.a == t.a);
        NullResult res = is_null_triple(triple_product(tt, triple_inverse(t)));
        CHECK(res.status == NullStatus::Yes);
    }
}

TEST_CASE("relation differential and relation product") {
    std::mt19937_64 rng(53);
    auto s5 = build_boundary_simplex(6);
    Triple z = d_prime(zero_relation(*s5));
    CHECK((z.w.is_zero() && z.p.is_zero() && z.a.is_zero()));
    auto check_on = [&](const OrderedComplex& cx) {
        RelationPair r1 = random_relation(cx, rng), r2 = random_relation(cx, rng);
        // D after D' vanishes identically.
        CHECK(basic_equation_D(d_prime(r1)).is_zero());
        // (c, 0) maps to the closed-form second relation.
        RelationPair c_only{r1.c, Cochain(&cx, 1, Ring::Z2)};
        Triple second = d_prime(c_only);
        CHECK(second.w == coefficient_map(sq(r1.c, 2), Ring::QZ, Frac(1, 2)));
        CHECK(second.p == coboundary(r1.c));
        CHECK(second.a.is_zero());
        // D' is multiplicative up to (df,0,0).
        Triple lhs = d_prime(relation_product(r1, r2));
        Triple rhs = triple_product(d_prime(r1), d_prime(r2));
        CHECK(lhs.p == rhs.p);
        CHECK(lhs.a == rhs.a);
        CHECK(is_coboundary_qz2(lhs.w - rhs.w));
        // Group inverse in the relation source.
        RelationPair e = relation_product(r1, relation_inverse(r1));
        CHECK(e.c.is_zero());
        CHECK(e.r.is_zero());
        // All three relation families are closed under D.
        Triple first = zero_triple(cx);
        first.w = coboundary(random_qz(cx, 3, rng));
        CHECK(basic_equation_D(first).is_zero());
        RelationPair r_only{Cochain(&cx, 2, Ring::Z2), r1.r};
        CHECK(basic_equation_D(d_prime(r_only)).is_zero());
        // z of an exact 1-cochain is half a coboundary; the null decision
        // relies on this when it scans coset representatives.
        Cochain ds = coboundary(random_cochain(cx, 0, Ring::Z2, rng));
        CHECK(is_coboundary_qz2(coefficient_map(z_op(ds), Ring::QZ, Frac(1, 2))));
    };
    for (int trial = 0; trial < 3; ++trial) check_on(*s5);
    for (int trial = 0; trial < 4; ++trial) {
        auto cx = random_complex(rng, 9, 5, 6);
        check_on(*cx);
    }
}

TEST_CASE("null decisions and commutators") {
    std::mt19937_64 rng(54);
    auto s4 = build_boundary_simplex(5);
    // Relation images are null, with an exactly verifying witness.
    for (int trial = 0; trial < 4; ++trial) {
        Triple t = random_kernel_triple(*s4, rng);
        NullResult res = is_null_triple(t);
        REQUIRE(res.status == NullStatus::Yes);
        REQUIRE(res.witness.has_value());
        Triple df = zero_triple(*s4);
        df.w = coboundary(res.witness->f);
        Triple rebuilt = triple_product(d_prime({res.witness->c, res.witness->r}), df);
        CHECK(rebuilt.w == t.w);
        CHECK(rebuilt.p == t.p);
        CHECK(rebuilt.a == t.a);
    }
    // Commutators are null with r = 0 witnesses.
    for (int trial = 0; trial < 3; ++trial) {
        Triple t1 = random_kernel_triple(*s4, rng), t2 = random_kernel_triple(*s4, rng);
        Triple comm = triple_product(triple_product(t1, t2),
                                     triple_product(triple_inverse(t1), triple_inverse(t2)));
        NullResult res = is_null_triple(comm);
        REQUIRE(res.status == NullStatus::Yes);
        CHECK(res.witness->r.is_zero());
    }
    // A non-exact third coordinate is rejected outright.
    auto rp = build_rp_n(2);
    auto susp = suspension(*rp.complex);
    Cochain alpha(rp.complex.get(), 1, Ring::Z2);
    for (const auto& [s, v] : rp.deck_cocycle_support) alpha.set(s, v);
    Triple t = zero_triple(*susp.complex);
    t.a = suspend_cochain(alpha, *susp.complex, susp.upper);
    CHECK(is_null_triple(t).status == NullStatus::No);
    // Budget exhaustion reports honestly.
    Triple k = random_kernel_triple(*s4, rng);
    CHECK(is_null_triple(k, 0).status == NullStatus::Undecided);
}

TEST_CASE("third relation factorization") {
    std::mt19937_64 rng(55);
    auto s4 = build_boundary_simplex(5);
    Triple t = random_kernel_triple(*s4, rng);
    Cochain zero1(s4.get(), 1, Ring::Z2);
    Triple same = factor_by_third_relation(t, zero1);
    CHECK(same.p == t.p);
    CHECK(same.a == t.a);
    CHECK(is_coboundary_qz2(same.w - t.w));
    for (int trial = 0; trial < 3; ++trial) {
        Cochain r = random_cochain(*s4, 1, Ring::Z2, rng);
        Triple moved = factor_by_third_relation(t, r);
        CHECK(moved.a == t.a + coboundary(r));
        // Equivalent to t: the quotient is null by construction.
        NullResult res = is_null_triple(triple_product(moved, triple_inverse(t)));
        CHECK(res.status == NullStatus::Yes);
    }
}

TEST_CASE("alternate product and the Pontrjagin square") {
    std::mt19937_64 rng(56);
    auto s5 = build_boundary_simplex(6);
    for (int trial = 0; trial < 4; ++trial) {
        Triple t1 = random_triple(*s5, rng), t2 = random_triple(*s5, rng);
        auto twist = [](const Triple& t) {
            Triple s = t;
            s.w = t.w + coefficient_map(pontrjagin_square(t.a), Ring::QZ, Frac(1, 4));
            return s;
        };
        Triple lhs = twist(triple_product(t1, t2));
        Triple rhs = triple_product(twist(t1), twist(t2), /*alternate=*/true);
        CHECK(lhs.p == rhs.p);
        CHECK(lhs.a == rhs.a);
        CHECK(is_coboundary_qz2(lhs.w - rhs.w));
    }
}

TEST_CASE("products one and two dimensions down") {
    std::mt19937_64 rng(57);
    auto s4 = build_boundary_simplex(5);
    auto rp3 = build_rp_n(3);
    auto g3_check = [&](const OrderedComplex& cx) {
        G3Triple t1 = random_g3(cx, rng), t2 = random_g3(cx, rng);
        G3Triple e = g3_product(t1, zero_g3(cx));
        CHECK(e.w == t1.w);
        CHECK(e.p == t1.p);
        CHECK(e.a == t1.a);
        // The product solves its own basic equation, exactly.
        G3Triple pr = g3_product(t1, t2);
        CHECK(coboundary(pr.w) ==
              coefficient_map(cup(pr.p, pr.p, 0), Ring::QZ, Frac(1, 2)));
    };
    for (int trial = 0; trial < 4; ++trial) g3_check(*s4);
    for (int trial = 0; trial < 2; ++trial) g3_check(*rp3.complex);

    // Two dimensions down: abelian modulo the exact term (1/2)d(a cup_1 b).
    for (int trial = 0; trial < 4; ++trial) {
        G2Pair p1{coboundary(random_qz(*s4, 1, rng)),
                  coboundary(random_cochain(*s4, 0, Ring::Z2, rng))};
        G2Pair p2{coboundary(random_qz(*s4, 1, rng)),
                  coboundary(random_cochain(*s4, 0, Ring::Z2, rng))};
        G2Pair e = g2_product(p1, zero_g2(*s4));
        CHECK(e.p == p1.p);
        CHECK(e.a == p1.a);
        Cochain flip = g2_product(p1, p2).p - g2_product(p2, p1).p;
        CHECK(flip ==
              coboundary(coefficient_map(cup(p1.a, p2.a, 1), Ring::QZ, Frac(1, 2))));
    }
}

TEST_CASE("special lift cube identity for degree-one cocycles") {
    // (1/4)A^2 B - (1/4)A B^2 = d((1/8)AB) for special lifts of 1-cocycles,
    // checked over every exact pair on small simplices and random complexes.
    auto run_all = [](const OrderedComplex& cx) {
        const auto& verts = cx.simplices(0);
        const size_t n = verts.size();
        for (unsigned long long m1 = 0; m1 < (1ull << n); ++m1)
            for (unsigned long long m2 = 0; m2 < (1ull << n); ++m2) {
                Cochain e1(&cx, 0, Ring::Z2), e2(&cx, 0, Ring::Z2);
                for (size_t i = 0; i < n; ++i) {
                    if ((m1 >> i) & 1) e1.set(verts[i], 1);
                    if ((m2 >> i) & 1) e2.set(verts[i], 1);
                }
                Cochain A = special_lift(coboundary(e1));
                Cochain B = special_lift(coboundary(e2));
                Cochain lhs = coefficient_map(
                    cup(cup(A, A, 0), B, 0) - cup(A, cup(B, B, 0), 0), Ring::QZ, Frac(1, 4));
                CHECK(lhs == coboundary(coefficient_map(cup(A, B, 0), Ring::QZ, Frac(1, 8))));
            }
    };
    run_all(*build_simplex(3));
    run_all(*build_simplex(4));
    std::mt19937_64 rng(58);
    for (int trial = 0; trial < 5; ++trial) {
        auto cx = random_complex(rng, 7, 3, 5);
        Cochain A = special_lift(coboundary(random_cochain(*cx, 0, Ring::Z2, rng)));
        Cochain B = special_lift(coboundary(random_cochain(*cx, 0, Ring::Z2, rng)));
        Cochain lhs = coefficient_map(
            cup(cup(A, A, 0), B, 0) - cup(A, cup(B, B, 0), 0), Ring::QZ, Frac(1, 4));
        CHECK(lhs == coboundary(coefficient_map(cup(A, B, 0), Ring::QZ, Frac(1, 8))));
    }
}

TEST_CASE("suspension of triples") {
    std::mt19937_64 rng(59);
    auto s4 = build_boundary_simplex(5);
    auto susp = suspension(*s4);
    for (int trial = 0; trial < 4; ++trial) {
        G3Triple t1 = random_g3(*s4, rng), t2 = random_g3(*s4, rng);
        Triple s1 = suspend_triple(t1, susp), s2 = suspend_triple(t2, susp);
        // Suspensions land in the kernel.
        CHECK(basic_equation_D(s1).is_zero());
        // The product desuspends: s(t1) s(t2) and s(t1 t2) agree up to null.
        Triple prod = triple_product(s1, s2);
        Triple down = suspend_triple(g3_product(t1, t2), susp);
        CHECK(prod.a == down.a);
        NullResult res = is_null_triple(triple_product(prod, triple_inverse(down)));
        CHECK(res.status == NullStatus::Yes);
    }
    // Two steps down: a suspended pair satisfies the middle equation.
    G2Pair p{coboundary(random_qz(*s4, 1, rng)),
             coboundary(random_cochain(*s4, 0, Ring::Z2, rng))};
    G3Triple sp = suspend_pair(p, susp);
    CHECK(coboundary(sp.w) == coefficient_map(cup(sp.p, sp.p, 0), Ring::QZ, Frac(1, 2)));
    CHECK(sp.a.is_zero());
}

TEST_CASE("filtration and extension invariants on small spaces") {
    // Contractible: everything trivial.
    auto d4 = build_simplex(4);
    FiltrationReport fc = filtration_quotients(*d4);
    CHECK(fc.dim_ssh2 == 0);
    CHECK(fc.dim_sh3 == 0);
    CHECK(fc.qh4_free_rank == 0);
    CHECK(fc.qh4_torsion_order == 1);
    ExtensionReport ec = extension_invariants(*d4);
    CHECK(ec.sq1_rank == 0);
    CHECK(ec.sq2_rank == 0);

    // Suspended projective plane: one class at each stage, and Sq^1 of the
    // suspended generator is nonzero, forcing a Z/4 in the middle quotient.
    auto rp2 = build_rp_n(2);
    auto susp = suspension(*rp2.complex);
    FiltrationReport fs = filtration_quotients(*susp.complex);
    CHECK(fs.dim_ssh2 == 1);
    CHECK(fs.dim_sh3 == 1);
    CHECK(fs.qh4_free_rank == 0);
    CHECK(fs.qh4_torsion_order == 1);
    ExtensionReport es = extension_invariants(*susp.complex);
    CHECK(es.sq1_rank == 1);
    REQUIRE(es.basis_lifts.size() == 1);
    CHECK(basic_equation_D(es.basis_lifts[0]).is_zero());
    CHECK(basic_equation_D(es.lift_squares[0]).is_zero());
    // The square-of-a-lift formula matches the product modulo null.
    Triple sq_prod = triple_product(es.basis_lifts[0], es.basis_lifts[0]);
    NullResult agree =
        is_null_triple(triple_product(sq_prod, triple_inverse(es.lift_squares[0])));
    CHECK(agree.status == NullStatus::Yes);
}
