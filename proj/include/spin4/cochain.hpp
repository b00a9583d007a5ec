#pragma once

#include <unordered_map>

#include "spin4/complex.hpp"
#include "spin4/fraction.hpp"

namespace spin4 {

enum class Ring { Z2, Z, Zn, QZ };

// Degree-homogeneous cochain, sparse (absent simplex = 0). Values are exact:
// integers for Z2/Z/Zn, reduced fractions in [0,1) for QZ. Normalized by
// construction: only non-degenerate simplices of the complex carry values.
class Cochain {
public:
    Cochain() = default;
    Cochain(const OrderedComplex* cx, int degree, Ring ring, long long modulus = 0);

    const OrderedComplex* complex() const { return cx_; }
    int degree() const { return deg_; }
    Ring ring() const { return ring_; }
    long long modulus() const { return mod_; }

    long long ival(const Simplex& s) const;
    QZ qval(const Simplex& s) const;
    void set(const Simplex& s, long long v);
    void set(const Simplex& s, QZ v);
    void add_to(const Simplex& s, long long v);
    void add_to(const Simplex& s, QZ v);

    const std::unordered_map<Simplex, long long, SimplexHash>& isupport() const { return iv_; }
    const std::unordered_map<Simplex, QZ, SimplexHash>& qsupport() const { return qv_; }

    bool is_zero() const { return iv_.empty() && qv_.empty(); }
    bool same_shape(const Cochain& o) const;
    friend bool operator==(const Cochain& a, const Cochain& b);
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;

private:
    const OrderedComplex* cx_ = nullptr;
    int deg_ = 0;
    Ring ring_ = Ring::Z2;
    long long mod_ = 0;  // for Zn
    std::unordered_map<Simplex, long long, SimplexHash> iv_;
    std::unordered_map<Simplex, QZ, SimplexHash> qv_;
};

Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);

// {0,1}-valued integer lift of a Z/2 cochain.
Cochain special_lift(const Cochain& c);
Cochain mod2(const Cochain& c);  // Z or Zn (n even) -> Z2

// Value-wise map with scaling; e.g. (Z2, 1/2) -> QZ, (Z, 1/8) -> QZ.
// Throws when the scaled map is not well defined on the source ring.
Cochain coefficient_map(const Cochain& c, Ring target, Frac scale);

long long integrate_i(const Cochain& c, const FundamentalChain& fc);
QZ integrate_q(const Cochain& c, const FundamentalChain& fc);

Cochain pullback(const SimplicialMap& f, const Cochain& c);
// Restriction along an inclusion (values transported to incl.source).
Cochain restrict_to(const SimplicialMap& incl, const Cochain& c);

} // namespace spin4
