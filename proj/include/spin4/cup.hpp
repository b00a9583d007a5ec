#pragma once

#include <cstdint>
#include <vector>

#include "spin4/cochain.hpp"

namespace spin4 {

// One term of the cup_i expansion on the standard (p+q-i)-simplex: the first
// factor sees the vertices at positions xs, the second those at ys; sign is
// +1 or -1 in the integral convention (ignored over Z/2).
struct CupTerm {
    std::vector<int> xs, ys;
    int sign;
};

// Terms for |x| = p, |y| = q, product degree p+q-i. Cached; the integral sign
// table covers p, q <= 7 with p+q-i <= 8 (out-of-range integral requests throw).
const std::vector<CupTerm>& cup_terms(int p, int q, int i);

// x cup_i y. Rings: Z2 x Z2 -> Z2 or Z x Z -> Z (with signs). Returns the zero
// cochain when i > min(p, q), i < 0, or the product degree exceeds the complex.
Cochain cup(const Cochain& x, const Cochain& y, int i);

// Steenrod square on a Z/2 cochain representative of degree n, as a cochain
// operation: sq_i(c) = c cup_{n-i} c + c cup_{n-i+1} dc. Zero for i > n.
Cochain sq(const Cochain& c, int i);

// Image of c under suspension: (sc)(v0..vk, top) = c(v0..vk), zero on
// simplices missing the top pole. Vertex ids are shared with the base complex.
Cochain suspend_cochain(const Cochain& c, const OrderedComplex& susp, int32_t upper_pole);

} // namespace spin4
