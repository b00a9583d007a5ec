#include "spin4/g4.hpp"

#include <stdexcept>

#include "spin4/cup.hpp"
#include "spin4/linalg.hpp"
#include "spin4/natural_ops.hpp"

namespace spin4 {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

const Frac kHalf(1, 2), kQuarter(1, 4), kEighth(1, 8);

// Membership in the triple set: degrees, rings, da = 0, dp = a^2.
void check_triple(const Triple& t) {
    require(t.w.complex() && t.w.complex() == t.p.complex() &&
                t.w.complex() == t.a.complex(),
            "triple: complex mismatch");
    require(t.w.ring() == Ring::QZ && t.p.ring() == Ring::Z2 && t.a.ring() == Ring::Z2,
            "triple: wrong coefficient rings");
    require(t.w.degree() == 4 && t.p.degree() == 3 && t.a.degree() == 2,
            "triple: wrong degrees");
    require(is_cocycle(t.a), "triple: a is not a cocycle");
    require(coboundary(t.p) == cup(t.a, t.a, 0), "triple: dp != a^2");
}

void check_relation(const RelationPair& rel) {
    require(rel.c.complex() && rel.c.complex() == rel.r.complex(),
            "relation: complex mismatch");
    require(rel.c.ring() == Ring::Z2 && rel.r.ring() == Ring::Z2,
            "relation: wrong coefficient rings");
    require(rel.c.degree() == 2 && rel.r.degree() == 1, "relation: wrong degrees");
}

void check_g3(const G3Triple& t) {
    require(t.w.complex() && t.w.complex() == t.p.complex() &&
                t.w.complex() == t.a.complex(),
            "g3 triple: complex mismatch");
    require(t.w.ring() == Ring::QZ && t.p.ring() == Ring::Z2 && t.a.ring() == Ring::Z2,
            "g3 triple: wrong coefficient rings");
    require(t.w.degree() == 3 && t.p.degree() == 2 && t.a.degree() == 1,
            "g3 triple: wrong degrees");
    require(is_cocycle(t.p) && is_cocycle(t.a), "g3 triple: p or a not a cocycle");
    require(coboundary(t.w) == coefficient_map(cup(t.p, t.p, 0), Ring::QZ, kHalf),
            "g3 triple: dw != (1/2)p^2");
}

void check_g2(const G2Pair& p) {
    require(p.p.complex() && p.p.complex() == p.a.complex(), "g2 pair: complex mismatch");
    require(p.p.ring() == Ring::QZ && p.a.ring() == Ring::Z2,
            "g2 pair: wrong coefficient rings");
    require(p.p.degree() == 2 && p.a.degree() == 1, "g2 pair: wrong degrees");
    require(is_cocycle(p.p) && is_cocycle(p.a), "g2 pair: not cocycles");
}

Cochain mask_sum(Cochain base, const std::vector<Cochain>& reps, unsigned long long mask) {
    for (size_t i = 0; i < reps.size(); ++i)
        if ((mask >> i) & 1) base = base + reps[i];
    return base;
}

// log2 of the order of a subgroup of (Z/2)^n given as a list of member masks;
// throws if the set is not closed (it must be, all our tests are linear or
// secondary operations on cohomology).
int subgroup_dim(const std::vector<unsigned long long>& members, int n,
                 std::vector<unsigned long long>* basis_out = nullptr) {
    SparseGF2 span(n);
    std::vector<unsigned long long> basis;
    for (unsigned long long m : members) {
        std::vector<int> row;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1) row.push_back(i);
        if (span.add_row(std::move(row))) basis.push_back(m);
    }
    if ((1ull << basis.size()) != members.size())
        throw std::logic_error("subgroup_dim: member set is not a subgroup");
    if (basis_out) *basis_out = basis;
    return (int)basis.size();
}

}  // namespace

Triple zero_triple(const OrderedComplex& cx) {
    return {Cochain(&cx, 4, Ring::QZ), Cochain(&cx, 3, Ring::Z2), Cochain(&cx, 2, Ring::Z2)};
}

RelationPair zero_relation(const OrderedComplex& cx) {
    return {Cochain(&cx, 2, Ring::Z2), Cochain(&cx, 1, Ring::Z2)};
}

G3Triple zero_g3(const OrderedComplex& cx) {
    return {Cochain(&cx, 3, Ring::QZ), Cochain(&cx, 2, Ring::Z2), Cochain(&cx, 1, Ring::Z2)};
}

G2Pair zero_g2(const OrderedComplex& cx) {
    return {Cochain(&cx, 2, Ring::QZ), Cochain(&cx, 1, Ring::Z2)};
}

Cochain k_invariant(const Cochain& p, const Cochain& a) {
    require(p.complex() && p.complex() == a.complex(), "k_invariant: complex mismatch");
    require(p.ring() == Ring::Z2 && a.ring() == Ring::Z2 && p.degree() == 3 &&
                a.degree() == 2 && is_cocycle(a) && coboundary(p) == cup(a, a, 0),
            "k_invariant: need dp = a^2 with a a 2-cocycle");
    Cochain A = special_lift(a);
    return coefficient_map(sq(p, 2), Ring::QZ, kHalf) +
           coefficient_map(cup(A, cup(A, A, 1), 0), Ring::QZ, kQuarter) +
           coefficient_map(x_op(a), Ring::QZ, kHalf);
}

Cochain basic_equation_D(const Triple& t) {
    check_triple(t);
    return coboundary(t.w) - k_invariant(t.p, t.a);
}

Triple triple_product(const Triple& t1, const Triple& t2, bool alternate) {
    check_triple(t1);
    check_triple(t2);
    require(t1.w.complex() == t2.w.complex(), "triple_product: complex mismatch");
    Cochain A = special_lift(t1.a), B = special_lift(t2.a);
    Cochain ab1 = cup(t1.a, t2.a, 1);
    Cochain u = coefficient_map(cup(t1.p, t2.p, 2), Ring::QZ, kHalf) +
                coefficient_map(cup(cup(t1.a, t1.a, 0), t2.p, 3), Ring::QZ, kHalf) +
                coefficient_map(cup(t1.p + t2.p, ab1, 2), Ring::QZ, kHalf) +
                coefficient_map(cup(A, B, 0), Ring::QZ, kEighth) +
                coefficient_map(cup(cup(A, A, 1), B, 1), Ring::QZ, -kQuarter) +
                coefficient_map(cup(A + B, cup(A, B, 2), 0), Ring::QZ, -kQuarter) +
                coefficient_map(y4_op(t1.a, t2.a), Ring::QZ, kHalf);
    if (alternate)
        u = u + coefficient_map(cup(t1.a, t2.a, 0), Ring::QZ, kHalf);
    return {t1.w + t2.w + u, t1.p + t2.p + ab1, t1.a + t2.a};
}

Triple triple_inverse(const Triple& t) {
    check_triple(t);
    Cochain A = special_lift(t.a);
    Cochain sq1a = sq(t.a, 1);
    Cochain w = -t.w + coefficient_map(cup(A, A, 0), Ring::QZ, Frac(-3, 8)) +
                coefficient_map(cup(cup(A, A, 1), A, 1), Ring::QZ, -kQuarter) +
                coefficient_map(cup(sq1a, t.p, 2), Ring::QZ, kHalf);
    return {w, t.p + sq1a, t.a};
}

Cochain pontrjagin_square(const Cochain& a) {
    require(a.ring() == Ring::Z2 && a.degree() == 2 && is_cocycle(a),
            "pontrjagin_square: need a 2-cocycle mod 2");
    Cochain A = special_lift(a);
    return cup(A, A, 0) + cup(A, coboundary(A), 1);
}

Triple d_prime(const RelationPair& rel) {
    check_relation(rel);
    Cochain dr = coboundary(rel.r);
    Cochain rdr = cup(rel.r, dr, 0);
    Cochain R = special_lift(rel.r);
    Cochain Dr = special_lift(dr);
    Cochain w = coefficient_map(cup(coboundary(rel.c), rdr, 2), Ring::QZ, kHalf) +
                coefficient_map(sq(rel.c, 2), Ring::QZ, kHalf) +
                coefficient_map(z_op(rel.r), Ring::QZ, kHalf) +
                coefficient_map(cup(R, coboundary(Dr), 0), Ring::QZ, kEighth);
    return {w, coboundary(rel.c) + rdr, dr};
}

RelationPair relation_product(const RelationPair& r1, const RelationPair& r2) {
    check_relation(r1);
    check_relation(r2);
    require(r1.c.complex() == r2.c.complex(), "relation_product: complex mismatch");
    Cochain c = r1.c + r2.c + cup(r1.r, coboundary(r2.r), 1) + cup(r2.r, r1.r, 0);
    return {c, r1.r + r2.r};
}

RelationPair relation_inverse(const RelationPair& rp) {
    check_relation(rp);
    Cochain c = rp.c + cup(rp.r, coboundary(rp.r), 1) + cup(rp.r, rp.r, 0);
    return {c, rp.r};
}

Triple factor_by_third_relation(const Triple& t, const Cochain& r) {
    require(r.ring() == Ring::Z2 && r.degree() == 1 && r.complex() == t.w.complex(),
            "factor_by_third_relation: need a mod-2 1-cochain on the same complex");
    return triple_product(t, d_prime({Cochain(r.complex(), 2, Ring::Z2), r}));
}

NullResult is_null_triple(const Triple& t, long long budget) {
    require(basic_equation_D(t).is_zero(), "is_null_triple: D(t) != 0");
    const OrderedComplex& cx = *t.w.complex();
    // Any null expression t = D'(c,r)(df,0,0) has dr = t.a exactly.
    auto r0 = extend_cocycle(cx, 1, {}, &t.a);
    if (!r0) return {NullStatus::No, std::nullopt};
    auto h1 = cohomology_basis_z2(cx, 1);
    auto h2 = cohomology_basis_z2(cx, 2);
    if (h1.size() + h2.size() > 24) return {NullStatus::Undecided, std::nullopt};
    // Coboundary shifts of r and c move the residual first coordinate by Q/Z
    // coboundaries and preserve stage-two solvability, so scanning H^1 and
    // H^2 coset representatives covers the full cochain-level ambiguity.
    long long used = 0;
    for (unsigned long long m1 = 0; m1 < (1ull << h1.size()); ++m1) {
        Cochain r = mask_sum(*r0, h1, m1);
        Cochain rdr = cup(r, coboundary(r), 0);
        Cochain target = t.p + rdr;
        auto c0 = extend_cocycle(cx, 2, {}, &target);
        if (!c0) continue;
        for (unsigned long long m2 = 0; m2 < (1ull << h2.size()); ++m2) {
            if (used >= budget) return {NullStatus::Undecided, std::nullopt};
            ++used;
            Cochain c = mask_sum(*c0, h2, m2);
            Triple rel = d_prime({c, r});
            auto f = solve_coboundary_qz2(t.w - rel.w);
            if (f) return {NullStatus::Yes, NullWitness{c, r, *f}};
        }
    }
    return {NullStatus::No, std::nullopt};
}

G3Triple g3_product(const G3Triple& t1, const G3Triple& t2) {
    check_g3(t1);
    check_g3(t2);
    require(t1.w.complex() == t2.w.complex(), "g3_product: complex mismatch");
    Cochain A = special_lift(t1.a), B = special_lift(t2.a);
    Cochain ab = cup(t1.a, t2.a, 0);
    Cochain u = coefficient_map(cup(t1.p, t2.p, 1), Ring::QZ, kHalf) +
                coefficient_map(cup(t1.p + t2.p, ab, 1), Ring::QZ, kHalf) +
                coefficient_map(cup(cup(t1.a, cup(t1.a, t2.a, 1), 0), t2.a, 0), Ring::QZ,
                                kHalf) +
                coefficient_map(cup(cup(A, A, 0), B, 0), Ring::QZ, kQuarter);
    return {t1.w + t2.w + u, t1.p + t2.p + ab, t1.a + t2.a};
}

G2Pair g2_product(const G2Pair& p1, const G2Pair& p2) {
    check_g2(p1);
    check_g2(p2);
    require(p1.p.complex() == p2.p.complex(), "g2_product: complex mismatch");
    Cochain p = p1.p + p2.p + coefficient_map(cup(p1.a, p2.a, 0), Ring::QZ, kHalf);
    return {p, p1.a + p2.a};
}

Triple suspend_triple(const G3Triple& t, const SuspensionResult& susp) {
    check_g3(t);
    return {suspend_cochain(t.w, *susp.complex, susp.upper),
            suspend_cochain(t.p, *susp.complex, susp.upper),
            suspend_cochain(t.a, *susp.complex, susp.upper)};
}

G3Triple suspend_pair(const G2Pair& p, const SuspensionResult& susp) {
    check_g2(p);
    return {suspend_cochain(p.p, *susp.complex, susp.upper),
            suspend_cochain(p.a, *susp.complex, susp.upper),
            Cochain(susp.complex.get(), 1, Ring::Z2)};
}

namespace {

// Secondary obstruction for a 2-cocycle a with a^2 = dp0: does some H^3
// shift z make k(p0 + z, a) a Q/Z coboundary?
bool secondary_vanishes(const Cochain& a, const Cochain& p0,
                        const std::vector<Cochain>& h3, Cochain* p_out = nullptr,
                        Cochain* w_out = nullptr) {
    for (unsigned long long m = 0; m < (1ull << h3.size()); ++m) {
        Cochain p = mask_sum(p0, h3, m);
        auto f = solve_coboundary_qz2(k_invariant(p, a));
        if (f) {
            if (p_out) *p_out = p;
            if (w_out) *w_out = *f;
            return true;
        }
    }
    return false;
}

}  // namespace

FiltrationReport filtration_quotients(const OrderedComplex& cx) {
    auto h2 = cohomology_basis_z2(cx, 2);
    auto h3 = cohomology_basis_z2(cx, 3);
    if (h2.size() > 16 || h3.size() > 16)
        throw std::logic_error("filtration_quotients: cohomology too large to enumerate");
    FiltrationReport rep;

    // SSH^2: a^2 must be a coboundary and the secondary obstruction vanish.
    std::vector<unsigned long long> ssh2;
    Cochain zero2(&cx, 2, Ring::Z2);
    for (unsigned long long m = 0; m < (1ull << h2.size()); ++m) {
        Cochain a = mask_sum(zero2, h2, m);
        auto p0 = solve_coboundary_z2(cup(a, a, 0));
        if (!p0) continue;
        if (secondary_vanishes(a, *p0, h3)) ssh2.push_back(m);
    }
    std::vector<unsigned long long> basis_masks;
    rep.dim_ssh2 = subgroup_dim(ssh2, (int)h2.size(), &basis_masks);
    for (unsigned long long m : basis_masks) rep.ssh2_basis.push_back(mask_sum(zero2, h2, m));

    // SH^3: kernel of pbar -> (1/2)Sq^2 pbar in H^5(Q/Z).
    std::vector<unsigned long long> sh3;
    Cochain zero3(&cx, 3, Ring::Z2);
    for (unsigned long long m = 0; m < (1ull << h3.size()); ++m) {
        Cochain p = mask_sum(zero3, h3, m);
        if (is_coboundary_qz2(coefficient_map(sq(p, 2), Ring::QZ, kHalf))) sh3.push_back(m);
    }
    rep.dim_sh3 = subgroup_dim(sh3, (int)h3.size());

    // QH^4 = H^4(Q/Z) / (1/2)Sq^2 H^2. H^4(Q/Z) is a free rank of Q/Z
    // summands plus the torsion of H_4(Z); the killed subgroup is the image
    // of abar -> (1/2)abar^2, of order 2^(h2 - kernel dim).
    rep.qh4_free_rank = (int)homology_free_rank(cx, 4);
    rep.qh4_torsion_order = 1;
    for (long long t : homology_torsion(cx, 4)) rep.qh4_torsion_order *= t;
    std::vector<unsigned long long> sq2_kernel;
    for (unsigned long long m = 0; m < (1ull << h2.size()); ++m) {
        Cochain a = mask_sum(zero2, h2, m);
        if (is_coboundary_qz2(coefficient_map(cup(a, a, 0), Ring::QZ, kHalf)))
            sq2_kernel.push_back(m);
    }
    int killed = (int)h2.size() - subgroup_dim(sq2_kernel, (int)h2.size());
    if (rep.qh4_torsion_order % (1ll << killed) != 0)
        throw std::logic_error("filtration_quotients: killed subgroup exceeds torsion");
    rep.qh4_torsion_order >>= killed;
    return rep;
}

Triple triple_square_formula(const Triple& t) {
    check_triple(t);
    Cochain A = special_lift(t.a);
    Cochain c1 = cup(A, cup(A, A, 1), 1);
    Cochain corr = cup(A, A, 0) + c1 + c1;
    return {t.w + t.w - coefficient_map(corr, Ring::QZ, kEighth), sq(t.a, 1),
            Cochain(t.a.complex(), 2, Ring::Z2)};
}

ExtensionReport extension_invariants(const OrderedComplex& cx) {
    ExtensionReport rep;
    FiltrationReport filt = filtration_quotients(cx);
    auto h3 = cohomology_basis_z2(cx, 3);
    auto h5 = cohomology_basis_z2(cx, 5);

    SparseGF2 span1((int)h3.size());
    for (const Cochain& a : filt.ssh2_basis) {
        auto coords = class_coordinates_z2(sq(a, 1), h3);
        if (!coords) throw std::logic_error("extension_invariants: Sq^1 coordinates failed");
        rep.sq1_matrix.push_back(*coords);
        std::vector<int> row;
        for (size_t i = 0; i < coords->size(); ++i)
            if ((*coords)[i]) row.push_back((int)i);
        span1.add_row(std::move(row));
        // Kernel lift (w, p, a): membership in SSH^2 guarantees one exists.
        auto p0 = solve_coboundary_z2(cup(a, a, 0));
        Triple lift = zero_triple(cx);
        lift.a = a;
        if (!p0 || !secondary_vanishes(a, *p0, h3, &lift.p, &lift.w))
            throw std::logic_error("extension_invariants: lift of SSH^2 class failed");
        rep.basis_lifts.push_back(lift);
        rep.lift_squares.push_back(triple_square_formula(lift));
    }
    rep.sq1_rank = span1.rank();

    SparseGF2 span2((int)h5.size());
    for (const Cochain& p : h3) {
        auto coords = class_coordinates_z2(sq(p, 2), h5);
        if (!coords) throw std::logic_error("extension_invariants: Sq^2 coordinates failed");
        rep.sq2_matrix.push_back(*coords);
        std::vector<int> row;
        for (size_t i = 0; i < coords->size(); ++i)
            if ((*coords)[i]) row.push_back((int)i);
        span2.add_row(std::move(row));
    }
    rep.sq2_rank = span2.rank();
    return rep;
}

} // namespace spin4
