#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "spin4/simplex.hpp"

namespace spin4 {

// Finite simplicial complex with a vertex rank function. Ranks must be
// distinct within every simplex, so each simplex carries a canonical vertex
// order (sorted by rank, ties broken by id only across disjoint simplices).
//
// Construction protocol: add vertices, add simplices (faces are closed over
// automatically), then finalize(). Finalizing sorts each dimension's simplex
// list into the canonical order (lexicographic by vertex rank sequence) and
// freezes the complex; all queries require a finalized complex.
class OrderedComplex {
public:
    std::int32_t add_vertex(int rank);
    // Adds the simplex spanned by `verts` (any order) and all of its faces.
    void add_simplex(std::span<const std::int32_t> verts);
    void add_simplex(std::initializer_list<std::int32_t> verts);
    void finalize();

    bool finalized() const { return finalized_; }
    int num_vertices() const { return int(rank_.size()); }
    int rank(std::int32_t vertex) const { return rank_[std::size_t(vertex)]; }
    int dim() const { return int(by_dim_.size()) - 1; }
    const std::vector<Simplex>& simplices(int d) const;
    std::size_t count(int d) const;
    std::size_t total_simplices() const;
    bool contains(const Simplex& s) const { return index_.count(s) > 0; }
    // Index of a simplex within simplices(dim()) canonical order; -1 if absent.
    std::int32_t index_of(const Simplex& s) const;

    // Canonical (rank-sorted) form of a vertex set; throws if ranks collide.
    Simplex canon(std::span<const std::int32_t> verts) const;
    Simplex canon(std::initializer_list<std::int32_t> verts) const;

    // Checks closure, ordering and non-degeneracy invariants; throws on failure.
    void validate() const;

    long long euler_characteristic() const;

private:
    std::vector<int> rank_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::unordered_map<Simplex, std::int32_t, SimplexHash> index_;
    bool finalized_ = false;
};

// Simplicial map given by a total vertex assignment, required to be weakly
// order preserving on every simplex of the source.
struct SimplicialMap {
    const OrderedComplex* source = nullptr;
    const OrderedComplex* target = nullptr;
    std::vector<std::int32_t> vertex_assignment;  // by source vertex id

    // Image vertex tuple in target-canonical order, repeats kept.
    // Degenerate iff repeats remain.
    struct Image {
        Simplex simplex;   // with repeats removed
        bool degenerate = false;
    };
    Image apply(const Simplex& s) const;

    // Verifies rank monotonicity and that images are simplices of the target.
    void validate() const;
};

// Signed fundamental chain over the top-dimensional simplices.
struct FundamentalChain {
    const OrderedComplex* complex = nullptr;
    int degree = 0;
    std::vector<std::int8_t> signs;  // parallel to complex->simplices(degree)

    FundamentalChain negated() const;
    // Signed boundary as a map facet -> integer coefficient.
    std::unordered_map<Simplex, long long, SimplexHash> boundary() const;
};

struct OrientResult {
    bool orientable = false;
    FundamentalChain chain;
};

// Propagates compatible orientation signs across codimension-1 adjacencies.
// Requires every codim-1 face to lie in at most two top simplices.
// `normalization`: optional (top simplex, sign) anchoring the global sign.
OrientResult orient(const OrderedComplex& cx,
                    std::optional<std::pair<Simplex, int>> normalization = std::nullopt);

} // namespace spin4
