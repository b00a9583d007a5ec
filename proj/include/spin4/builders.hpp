#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include "spin4/complex.hpp"

namespace spin4 {

// Builders return complexes through unique_ptr so that maps holding raw
// pointers to their endpoints stay valid for the owner's lifetime.

std::unique_ptr<OrderedComplex> build_simplex(int n);           // closed n-simplex
std::unique_ptr<OrderedComplex> build_boundary_simplex(int n);  // boundary of the n-simplex

struct ProductResult {
    std::unique_ptr<OrderedComplex> complex;
    SimplicialMap pi1, pi2;
    // product vertex id -> (factor1 vertex, factor2 vertex)
    std::vector<std::pair<std::int32_t, std::int32_t>> vertex_pairs;
};
// Staircase triangulation; vertices ordered lexicographically by factor ranks.
// Requires injective ranks within each factor.
ProductResult product_triangulation(const OrderedComplex& a, const OrderedComplex& b);

struct BarycentricResult {
    std::unique_ptr<OrderedComplex> complex;
    std::vector<Simplex> vertex_cell;  // new vertex id -> simplex it subdivides
};
// First barycentric subdivision; rank of a barycenter = dimension of its cell.
BarycentricResult barycentric_subdivide(const OrderedComplex& cx);

struct ConeResult {
    std::unique_ptr<OrderedComplex> complex;
    std::int32_t apex = -1;  // ranked above all (cone vertex last)
};
ConeResult cone(const OrderedComplex& cx);

struct SuspensionResult {
    std::unique_ptr<OrderedComplex> complex;
    std::int32_t lower = -1;  // ranked below all
    std::int32_t upper = -1;  // ranked above all
};
SuspensionResult suspension(const OrderedComplex& cx);

struct PrismResult {
    std::unique_ptr<OrderedComplex> complex;
    SimplicialMap incl0, incl1;  // bottom and top end inclusions
};
// Staircase prism over a shared underlying complex carrying two rank
// functions; end 0 uses `bottom`'s order, end 1 `top`'s, all end-0 vertices
// ranked below all end-1 vertices.
PrismResult prism(const OrderedComplex& bottom, const OrderedComplex& top);

struct NeighborhoodResult {
    std::unique_ptr<OrderedComplex> V;        // closed star of the core vertex set
    std::unique_ptr<OrderedComplex> bdV;      // frontier: simplices of V missing the core
    SimplicialMap inclV, incl_bdV;            // inclusions into the ambient complex
    std::vector<char> vertex_layer;           // by ambient vertex: 0=core,1=frontier,2=outside
};
// Regular neighborhood of a full vertex-spanned subcomplex inside a
// barycentric subdivision: V = closed simplices meeting the core vertex set.
NeighborhoodResult regular_neighborhood(const OrderedComplex& cx,
                                        const std::unordered_set<std::int32_t>& core_vertices);

// Same simplices, new rank function (must still order every simplex).
std::unique_ptr<OrderedComplex> reorder_vertices(const OrderedComplex& cx,
                                                 const std::vector<int>& new_rank);

struct RpnResult {
    std::unique_ptr<OrderedComplex> complex;
    // Descent 1-cocycle of the double cover (generates H^1 with Z/2 coefficients).
    std::vector<std::pair<Simplex, int>> deck_cocycle_support;
};
// Real projective n-space: antipodal quotient of the barycentric subdivision
// of the boundary of the (n+1)-dimensional cross-polytope.
RpnResult build_rp_n(int n);

// Map collapsing a layered complex onto the suspension of the middle layer:
// layer-0 vertices -> lower pole, layer-1 -> themselves, layer-2 -> upper pole.
// `susp` must be the suspension of the frontier subcomplex with matching ids:
// `frontier_to_susp` translates frontier vertex ids into `susp` vertex ids.
SimplicialMap collapse_map(const OrderedComplex& layered,
                           const std::vector<char>& vertex_layer,
                           const OrderedComplex& susp,
                           const std::vector<std::int32_t>& frontier_to_susp,
                           std::int32_t lower_pole, std::int32_t upper_pole);

} // namespace spin4
