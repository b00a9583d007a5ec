#pragma once

#include <cstdint>
#include <utility>

#include "spin4/formula.hpp"

namespace spin4 {

// Natural mod-2 cochain operations on degree-2 cocycles a (arg 0) and b
// (arg 1), and on degree-1 cochains r (arg 0). All are face-evaluation
// formulas; the *_op wrappers evaluate them on a complex after checking
// preconditions.

const Formula& x_medina_formula();  // degree 5, arity 1: a^2(01235) a^2(02345)
const Formula& x_formula();         // x = x_M + a(a cup_1 a)

// Delta x(a,b) = x(a+b) + x(a) + x(b).
const Formula& delta_x_formula();   // degree 5, arity 2
// The nine-term delta-x companion built from cup_i products.
const Formula& small_delta_x_formula();

const Formula& y4_formula();        // degree 4, arity 2, 174 printed terms
const Formula& z_medina_formula();  // degree 4, arity 1 in a 1-cochain
const Formula& z_formula();         // z = z_M + r(dr cup_1 dr)

Cochain x_op(const Cochain& a);                      // requires da = 0
Cochain y4_op(const Cochain& a, const Cochain& b);   // requires da = db = 0
Cochain z_op(const Cochain& r);                      // any 1-cochain
// Both components of the nonlinearity defect: (Delta x, delta x).
std::pair<Cochain, Cochain> delta_terms(const Cochain& a, const Cochain& b);

// Natural primitive via cone contraction: extend the arguments by zero over a
// cone whose apex is the final vertex, and read off the terms of `target`
// that avoid the apex. If target is a natural cocycle formula, the result phi
// satisfies d(phi) = target.
Formula derive_via_cone(const Formula& target);

struct DiscoverResult {
    bool found = false;
    Formula formula;
};

// Re-derive the degree-4 bilinear correction term by solving the GF(2) system
// d(y) = Delta x + delta x over squarefree monomials of degree <= 4 in the
// twelve cocycle coordinates a(ij4), b(ij4) on the 4-simplex. When
// `side_conditions` is set, also requires y(a,0), y(0,b) and
// y(a,a) + a cup_1 (a cup_1 a) + a^2 (or without the +a^2 term when
// `flipped_diagonal` is set) to be natural coboundaries, with primitive
// coefficients as auxiliary unknowns. The main identity is enforced over all
// 2^20 cocycle pairs on the 5-simplex: rows are consumed until the system
// stabilizes and the solution is then verified against every pair.
DiscoverResult discover_y4(bool side_conditions, bool flipped_diagonal = false,
                           std::uint64_t seed = 1);

} // namespace spin4
