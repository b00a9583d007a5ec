#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spin4/cochain.hpp"

namespace spin4 {

// Dense GF(2) matrix with 64-bit packed rows. For small systems (formula
// discovery, cohomology of small complexes).
class GF2Dense {
public:
    GF2Dense(int rows, int cols);
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void xor_bit(int r, int c) { set(r, c, get(r, c) ^ 1); }
    void add_row(int dst, int src);  // dst ^= src

    // Row reduction in place; returns pivot columns. `upto` limits elimination
    // to the leading columns (the tail acts as a right hand side).
    std::vector<int> rref(int upto = -1);

    // Solve A x = b for one x; nullopt if inconsistent. Leaves *this reduced.
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& b);

    // Basis of the kernel of the original matrix (call before mutating).
    std::vector<std::vector<uint8_t>> kernel() const;

private:
    int rows_, cols_, words_;
    std::vector<uint64_t> bits_;
    uint64_t* row(int r) { return bits_.data() + (size_t)r * words_; }
    const uint64_t* row(int r) const { return bits_.data() + (size_t)r * words_; }
};

// Sparse GF(2) row-reduction solver with incremental row insertion; suitable
// for coboundary systems on large complexes. Columns are int indices.
class SparseGF2 {
public:
    explicit SparseGF2(int cols) : cols_(cols) {}
    int cols() const { return cols_; }
    int rank() const { return (int)rows_.size(); }

    // Reduce a row against the current basis; returns the remainder (sorted).
    std::vector<int> reduce(std::vector<int> row) const;
    // Reduce and, if the remainder is nonzero, insert it. Returns true when
    // the row was independent.
    bool add_row(std::vector<int> row);

    // Solve A^T-free style: treat each added row as an equation over unknowns
    // 0..cols-2 with column cols-1 as the right hand side sentinel. A row
    // reducing to exactly {cols-1} is inconsistent.
    bool consistent_with(std::vector<int> row) const;

    const std::vector<std::vector<int>>& basis_rows() const { return rows_; }
    const std::vector<int>& leads() const { return lead_; }

private:
    int cols_;
    // rows_ keyed by leading column; each row sorted ascending.
    std::vector<std::vector<int>> rows_;
    std::vector<int> lead_;  // parallel leading columns, kept sorted
    friend class SparseGF2Solver;
};

// Solve a sentinel-augmented system collected in a SparseGF2: unknowns are
// columns 0..cols-2, column cols-1 carries the right hand side. Free unknowns
// are set to zero; nullopt iff inconsistent.
std::optional<std::vector<uint8_t>> solve_sentinel(const SparseGF2& sys);

// Sparse elimination over Z/2^t by 2-adic pivoting: eliminate with odd
// (invertible) pivots, then halve the all-even residual rows and continue one
// bit down. Decides solvability of A x = b over Z/2^t; the right hand side
// lives in the sentinel column with index cols.
struct SparseZ2kRow {
    std::vector<std::pair<int, long long>> ent;  // sorted by column, values mod 2^t
};

class SparseMod2k {
public:
    SparseMod2k(int cols, int t) : cols_(cols), t_(t) {
        if (t < 1 || t > 62) throw std::invalid_argument("SparseMod2k: t out of range");
    }
    void add_row(std::vector<std::pair<int, long long>> row);
    // Solves A x = b; the payload is a full solution vector (values mod 2^t,
    // free unknowns zero), verified against every stored row before return.
    std::optional<std::vector<long long>> solve();

private:
    int cols_, t_;
    std::vector<SparseZ2kRow> rows_;
};

// Smith normal form of a sparse integer matrix: returns the diagonal entries
// (elementary divisors, including any zero rows/cols implicitly dropped).
// Pivoting prefers +-1 entries to limit fill and coefficient growth.
std::vector<long long> smith_normal_form(int rows, int cols,
                                         std::vector<std::vector<std::pair<int, long long>>> mat);

// Cohomology and coboundary decisions on a complex.

// Rank of H^deg(cx; Z/2).
int cohomology_rank_z2(const OrderedComplex& cx, int deg);

// Decide whether a Z/2 cocycle is a coboundary; if so optionally return a
// primitive.
bool is_coboundary_z2(const Cochain& z, Cochain* primitive = nullptr);

// Decide whether a Q/Z cocycle with 2-power denominators is a coboundary,
// escalating the working modulus 2^t over t = start..max. The decision is
// exact: solvable over Z/2^t with t = max denominator exponent + corank slack
// iff solvable over Q/Z for 2-power torsion inputs.
bool is_coboundary_qz2(const Cochain& z, int tmax = 32);

// Solve d(u) = z over Z/2 for u of degree z.degree()-1; nullopt if none.
std::optional<Cochain> solve_coboundary_z2(const Cochain& z);

// Like is_coboundary_qz2 but returns a primitive f with d(f) = z (values with
// 2-power denominators); nullopt iff not a coboundary at the tmax verdict.
std::optional<Cochain> solve_coboundary_qz2(const Cochain& z, int tmax = 32);

// Z/2 cochain of the given degree with prescribed values on the pinned
// simplices and d(result) = d_target (zero when null). Used to extend end
// data across a prism; infeasible is a result, not an error.
std::optional<Cochain> extend_cocycle(const OrderedComplex& cx, int degree,
                                      const std::vector<std::pair<Simplex, int>>& pinned,
                                      const Cochain* d_target = nullptr);

// Representatives of a basis of H^deg(cx; Z/2): cocycles independent modulo
// coboundaries, found by scanning kernel vectors of the coboundary matrix.
std::vector<Cochain> cohomology_basis_z2(const OrderedComplex& cx, int deg);

// Coordinates of the class of a cocycle in the span of the given
// representatives modulo coboundaries; nullopt if the class is outside.
std::optional<std::vector<std::uint8_t>> class_coordinates_z2(
    const Cochain& z, const std::vector<Cochain>& reps);

// d-matrix rows for degree deg -> deg+1 as sparse GF(2) columns indexed by
// position in cx.simplices(deg).
std::vector<std::vector<int>> coboundary_rows_z2(const OrderedComplex& cx, int deg);

// Elementary divisors of H_deg(cx; Z) torsion (the nonzero non-unit entries).
std::vector<long long> homology_torsion(const OrderedComplex& cx, int deg);
long long homology_free_rank(const OrderedComplex& cx, int deg);

} // namespace spin4
