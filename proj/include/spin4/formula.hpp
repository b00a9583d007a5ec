#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "spin4/cochain.hpp"

namespace spin4 {

// Mod-2 face-evaluation formulas: sums of monomials, each monomial a product
// of factors arg_k(face) where face is a vertex-index tuple on the standard
// degree-simplex (0..degree). Since values live in Z/2 where e*e = e, factors
// within a monomial are kept squarefree, and equal monomials cancel in pairs.
// Two formulas with distinct monomial sets are distinct as functions of
// arbitrary cochain arguments, so equality of term sets is functional equality.
struct FFactor {
    int arg;
    Simplex face;
    friend bool operator<(const FFactor& a, const FFactor& b) {
        return a.arg != b.arg ? a.arg < b.arg : a.face < b.face;
    }
    friend bool operator==(const FFactor& a, const FFactor& b) {
        return a.arg == b.arg && a.face == b.face;
    }
};

using FTerm = std::vector<FFactor>;  // sorted, squarefree

class Formula {
public:
    Formula() = default;
    Formula(int degree, int arity) : deg_(degree), arity_(arity) {}

    // arg_k evaluated on the whole degree-simplex.
    static Formula generator(int degree, int arity, int arg);
    static Formula from_terms(int degree, int arity, std::vector<FTerm> terms);

    int degree() const { return deg_; }
    int arity() const { return arity_; }
    const std::set<FTerm>& terms() const { return terms_; }
    size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const Formula& a, const Formula& b) {
        return a.deg_ == b.deg_ && a.terms_ == b.terms_;
    }

    Formula operator+(const Formula& o) const;  // xor of term sets

    // Coboundary: degree + 1, terms pulled back along each face map.
    Formula d() const;

    // Replace arg by the coboundary of a fresh argument one degree lower
    // (the argument index stays the same): arg(f) -> sum_j newarg(f minus j).
    Formula substitute_coboundary(int arg) const;

    // Replace arg by the sum of two arguments; the result has the given arity.
    Formula substitute_sum(int arg, int arg_a, int arg_b, int new_arity) const;

    // Permute/relabel argument slots: factor arg k becomes perm[k].
    Formula rename_args(const std::vector<int>& perm, int new_arity) const;

    // Pullback along the j-th degeneracy [0..degree] -> [0..degree-1]
    // (repeat vertex j). Terms with a degenerate factor face drop out.
    Formula degeneracy_pullback(int j) const;

    long long eval(const std::vector<const Cochain*>& args, const Simplex& s) const;
    Cochain apply(const std::vector<const Cochain*>& args, const OrderedComplex& cx) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    void insert_term(FTerm t);  // sorts, dedupes factors, xors into the set
    int deg_ = 0;
    int arity_ = 0;
    std::set<FTerm> terms_;
    friend Formula cup(const Formula& x, const Formula& y, int i);
};

// x cup_i y at the formula level (mod 2, no signs).
Formula cup(const Formula& x, const Formula& y, int i);

// Bit-parallel evaluation of formulas on the standard n-simplex: 64 samples at
// once, one bit lane each. Argument values are indexed by (arg, face id) where
// face ids come from face_id().
class BatchEval {
public:
    BatchEval(const Formula& f, int n);
    int context_dim() const { return n_; }
    // Face ids enumerate all non-degenerate faces of the n-simplex of every
    // dimension, ordered by (dim, lex).
    int face_id(const Simplex& face) const;
    int num_faces() const { return (int)faces_.size(); }
    const std::vector<Simplex>& faces() const { return faces_; }
    // values[arg][face_id] = 64 packed sample bits.
    uint64_t eval(const std::vector<std::vector<uint64_t>>& values) const;

private:
    int n_;
    std::vector<Simplex> faces_;
    std::vector<std::vector<std::pair<int, int>>> compiled_;  // per term: (arg, face id)
};

} // namespace spin4
