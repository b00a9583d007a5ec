#pragma once

#include <optional>
#include <vector>

#include "spin4/builders.hpp"
#include "spin4/cochain.hpp"

namespace spin4 {

// (w, p, a): w a Q/Z 4-cochain, p a Z/2 3-cochain, a a Z/2 2-cocycle with
// dp = a^2. Kernel elements additionally satisfy dw = k(p, a); the first
// coordinate is only ever compared modulo coboundaries.
struct Triple {
    Cochain w, p, a;
};

// (c, r): a Z/2 2-cochain and a Z/2 1-cochain, the source of the relation
// differential d_prime.
struct RelationPair {
    Cochain c, r;
};

// One dimension down: w a Q/Z 3-cochain with dw = (1/2)p^2, p a Z/2
// 2-cocycle, a a Z/2 1-cocycle.
struct G3Triple {
    Cochain w, p, a;
};

// Two dimensions down: p a Q/Z 2-cocycle, a a Z/2 1-cocycle.
struct G2Pair {
    Cochain p, a;
};

Triple zero_triple(const OrderedComplex& cx);
RelationPair zero_relation(const OrderedComplex& cx);
G3Triple zero_g3(const OrderedComplex& cx);
G2Pair zero_g2(const OrderedComplex& cx);

// k(p,a) = (1/2)Sq^2 p + (1/4)A(A cup_1 A) + (1/2)x(a), a natural Q/Z
// 5-cocycle whenever dp = a^2. A is the special integral lift of a.
Cochain k_invariant(const Cochain& p, const Cochain& a);

// D(w,p,a) = dw - k(p,a). Kernel members represent group elements.
Cochain basic_equation_D(const Triple& t);

// (w,p,a)(v,q,b) = (w+v+u, p+q+a cup_1 b, a+b). With `alternate` set the
// variant product adds (1/2)ab to u; conjugating by
// (w,p,a) -> (w + (1/4)P(a), p, a) intertwines the two.
Triple triple_product(const Triple& t1, const Triple& t2, bool alternate = false);

// Inverse up to relations: the product t * triple_inverse(t) has zero second
// and third coordinates and a coboundary first coordinate.
Triple triple_inverse(const Triple& t);

// Pontrjagin square at cochain level: P(a) = A cup A + A cup_1 dA over Z,
// for the special lift A of a 2-cocycle a.
Cochain pontrjagin_square(const Cochain& a);

// D'(c,r) = ((1/2)dc cup_2 rdr + (1/2)Sq^2 c + (1/2)z(r) + (1/8)R d(Dr),
//            dc + rdr, dr), with rdr = r cup dr, R and Dr the special lifts
// of r and dr. Satisfies D(D'(c,r)) = 0; its image is the null subgroup.
Triple d_prime(const RelationPair& rel);

// (c,r)(e,s) = (c + e + r cup_1 ds + sr, r + s); d_prime is multiplicative
// for it modulo (df, 0, 0).
RelationPair relation_product(const RelationPair& r1, const RelationPair& r2);
RelationPair relation_inverse(const RelationPair& rp);

// Multiply t by the relation D'(0, r) = ((1/2)z(r) + (1/8)R d(Dr), rdr, dr),
// producing an equivalent representative whose third coordinate is a + dr.
Triple factor_by_third_relation(const Triple& t, const Cochain& r);

enum class NullStatus { Yes, No, Undecided };

// Witness for nullity: t = D'(c, r) * (df, 0, 0).
struct NullWitness {
    Cochain c, r, f;
};

struct NullResult {
    NullStatus status = NullStatus::Undecided;
    std::optional<NullWitness> witness;
};

// Decides whether a Kernel(D) triple lies in the null subgroup. Staged: solve
// dr = a, then dc = p + rdr, then a Q/Z coboundary decision on the residual
// first coordinate; cochain-level ambiguity is scanned via H^1 and H^2 coset
// representatives. `budget` caps the number of residual decisions; on
// exhaustion the status is Undecided rather than a guess.
NullResult is_null_triple(const Triple& t, long long budget = 1 << 12);

// (w,p,a)(v,q,b) = (w+v+u, p+q+ab, a+b) with
// u = (1/2)p cup_1 q + (1/2)(p+q) cup_1 ab + (1/2)a(a cup_1 b)b + (1/4)A^2B.
G3Triple g3_product(const G3Triple& t1, const G3Triple& t2);

// (p,a)(q,b) = (p+q+(1/2)ab, a+b).
G2Pair g2_product(const G2Pair& p1, const G2Pair& p2);

// Suspension homomorphisms; the suspension complex must have been built with
// the cone-vertex-last convention of builders.hpp.
Triple suspend_triple(const G3Triple& t, const SuspensionResult& susp);
G3Triple suspend_pair(const G2Pair& p, const SuspensionResult& susp);

// Filtration stages of the group of triples on cx:
//   SSH^2: classes abar in H^2(Z/2) with abar^2 = 0 and vanishing secondary
//          obstruction (k(p0 + z, a) a coboundary for some H^3 shift z);
//   SH^3:  classes pbar in H^3(Z/2) with (1/2)Sq^2 pbar = 0 in H^5(Q/Z);
//   QH^4:  H^4(Q/Z) / ((1/2)Sq^2 H^2), reported as a free rank (number of
//          Q/Z summands) and the order of the torsion quotient.
struct FiltrationReport {
    int dim_ssh2 = 0;
    int dim_sh3 = 0;
    int qh4_free_rank = 0;
    long long qh4_torsion_order = 1;
    std::vector<Cochain> ssh2_basis;  // cocycle representatives, dim_ssh2 many
};
FiltrationReport filtration_quotients(const OrderedComplex& cx);

// Extension data of the filtration:
//   sq1_matrix: Sq^1 on an SSH^2 basis in H^3 coordinates; its rank counts
//               the Z/4 summands produced by the second extension;
//   sq2_matrix: Sq^2 on an H^3 basis in H^5 coordinates;
//   basis_lifts: Kernel(D) triples (w, p, a) lifting the SSH^2 basis;
//   lift_squares: the square-of-a-lift representative
//                 (2w - (1/8)(A^2 + 2A cup_1 (A cup_1 A)), Sq^1 a, 0).
struct ExtensionReport {
    std::vector<std::vector<std::uint8_t>> sq1_matrix;
    int sq1_rank = 0;
    std::vector<std::vector<std::uint8_t>> sq2_matrix;
    int sq2_rank = 0;
    std::vector<Triple> basis_lifts;
    std::vector<Triple> lift_squares;
};
ExtensionReport extension_invariants(const OrderedComplex& cx);

// The square-of-a-lift formula by itself.
Triple triple_square_formula(const Triple& t);

} // namespace spin4
