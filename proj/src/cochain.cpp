#include "spin4/cochain.hpp"

#include <stdexcept>

namespace spin4 {

namespace {

long long mod_pos(long long v, long long m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

} // namespace

Cochain::Cochain(const OrderedComplex* cx, int degree, Ring ring, long long modulus)
    : cx_(cx), deg_(degree), ring_(ring), mod_(modulus) {
    if (!cx) throw std::invalid_argument("Cochain: null complex");
    if (degree < 0) throw std::invalid_argument("Cochain: negative degree");
    if (ring == Ring::Zn && modulus < 2) throw std::invalid_argument("Cochain: Zn needs modulus >= 2");
    if (ring != Ring::Zn && modulus != 0) throw std::invalid_argument("Cochain: modulus only valid for Zn");
}

long long Cochain::ival(const Simplex& s) const {
    if (ring_ == Ring::QZ) throw std::logic_error("ival on Q/Z cochain");
    auto it = iv_.find(s);
    return it == iv_.end() ? 0 : it->second;
}

QZ Cochain::qval(const Simplex& s) const {
    if (ring_ != Ring::QZ) throw std::logic_error("qval on non-Q/Z cochain");
    auto it = qv_.find(s);
    return it == qv_.end() ? QZ{} : it->second;
}

void Cochain::set(const Simplex& s, long long v) {
    if (ring_ == Ring::QZ) throw std::logic_error("integer set on Q/Z cochain");
    if (s.dim() != deg_) throw std::invalid_argument("Cochain::set: wrong degree");
    if (!cx_->contains(s)) throw std::invalid_argument("Cochain::set: simplex not in complex");
    if (ring_ == Ring::Z2) v = mod_pos(v, 2);
    else if (ring_ == Ring::Zn) v = mod_pos(v, mod_);
    if (v == 0) iv_.erase(s);
    else iv_[s] = v;
}

void Cochain::set(const Simplex& s, QZ v) {
    if (ring_ != Ring::QZ) throw std::logic_error("Q/Z set on integer cochain");
    if (s.dim() != deg_) throw std::invalid_argument("Cochain::set: wrong degree");
    if (!cx_->contains(s)) throw std::invalid_argument("Cochain::set: simplex not in complex");
    if (v.is_zero()) qv_.erase(s);
    else qv_[s] = v;
}

void Cochain::add_to(const Simplex& s, long long v) {
    set(s, ival(s) + v);
}

void Cochain::add_to(const Simplex& s, QZ v) {
    set(s, qval(s) + v);
}

bool Cochain::same_shape(const Cochain& o) const {
    return cx_ == o.cx_ && deg_ == o.deg_ && ring_ == o.ring_ && mod_ == o.mod_;
}

bool operator==(const Cochain& a, const Cochain& b) {
    if (!a.same_shape(b)) return false;
    return a.iv_ == b.iv_ && a.qv_ == b.qv_;
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (!same_shape(o)) throw std::invalid_argument("Cochain +: shape mismatch");
    Cochain r = *this;
    if (ring_ == Ring::QZ) {
        for (const auto& [s, v] : o.qv_) r.add_to(s, v);
    } else {
        for (const auto& [s, v] : o.iv_) r.add_to(s, v);
    }
    return r;
}

Cochain Cochain::operator-() const {
    Cochain r(cx_, deg_, ring_, mod_);
    for (const auto& [s, v] : iv_) r.set(s, -v);
    for (const auto& [s, v] : qv_) r.set(s, -v);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    return *this + (-o);
}

Cochain coboundary(const Cochain& c) {
    const OrderedComplex* cx = c.complex();
    Cochain r(cx, c.degree() + 1, c.ring(), c.modulus());
    if (c.degree() + 1 > cx->dim()) return r;
    const bool qz = c.ring() == Ring::QZ;
    for (const Simplex& s : cx->simplices(c.degree() + 1)) {
        if (qz) {
            QZ acc;
            for (int j = 0; j <= s.dim(); ++j) {
                QZ v = c.qval(s.face(j));
                acc = (j % 2) ? acc - v : acc + v;
            }
            r.set(s, acc);
        } else {
            long long acc = 0;
            for (int j = 0; j <= s.dim(); ++j) {
                long long v = c.ival(s.face(j));
                acc += (j % 2) ? -v : v;
            }
            r.set(s, acc);
        }
    }
    return r;
}

bool is_cocycle(const Cochain& c) {
    return coboundary(c).is_zero();
}

Cochain special_lift(const Cochain& c) {
    if (c.ring() != Ring::Z2) throw std::invalid_argument("special_lift: expects Z/2 cochain");
    Cochain r(c.complex(), c.degree(), Ring::Z);
    for (const auto& [s, v] : c.isupport()) r.set(s, v);  // values already in {0,1}
    return r;
}

Cochain mod2(const Cochain& c) {
    if (c.ring() == Ring::QZ) throw std::invalid_argument("mod2: expects integer cochain");
    if (c.ring() == Ring::Zn && c.modulus() % 2 != 0)
        throw std::invalid_argument("mod2: odd modulus has no mod-2 reduction");
    Cochain r(c.complex(), c.degree(), Ring::Z2);
    for (const auto& [s, v] : c.isupport()) r.set(s, v);
    return r;
}

Cochain coefficient_map(const Cochain& c, Ring target, Frac scale) {
    if (c.ring() == Ring::QZ) throw std::invalid_argument("coefficient_map: Q/Z source unsupported");
    if (target == Ring::QZ) {
        // Well defined iff scale * (source relations) lands in Z: for Z2 the
        // relation is 2, for Zn it is n, for Z there is none.
        long long rel = c.ring() == Ring::Z2 ? 2 : c.ring() == Ring::Zn ? c.modulus() : 1;
        if (c.ring() != Ring::Z && (scale * Frac(rel, 1)).den != 1)
            throw std::invalid_argument("coefficient_map: scale not defined on source ring");
        Cochain r(c.complex(), c.degree(), Ring::QZ);
        for (const auto& [s, v] : c.isupport()) {
            Frac f = scale * Frac(v, 1);
            QZ q;
            q.set(f.num, f.den);
            r.set(s, q);
        }
        return r;
    }
    if (scale.den != 1) throw std::invalid_argument("coefficient_map: fractional scale needs Q/Z target");
    if (target == Ring::Zn) throw std::invalid_argument("coefficient_map: Zn target unsupported");
    Cochain r(c.complex(), c.degree(), target);
    for (const auto& [s, v] : c.isupport()) r.set(s, v * scale.num);
    return r;
}

long long integrate_i(const Cochain& c, const FundamentalChain& fc) {
    if (c.ring() == Ring::QZ) throw std::invalid_argument("integrate_i: Q/Z cochain");
    if (c.complex() != fc.complex || c.degree() != fc.degree)
        throw std::invalid_argument("integrate_i: chain/cochain mismatch");
    long long acc = 0;
    const auto& top = fc.complex->simplices(fc.degree);
    for (size_t k = 0; k < top.size(); ++k) acc += fc.signs[k] * c.ival(top[k]);
    if (c.ring() == Ring::Z2) acc = mod_pos(acc, 2);
    if (c.ring() == Ring::Zn) acc = mod_pos(acc, c.modulus());
    return acc;
}

QZ integrate_q(const Cochain& c, const FundamentalChain& fc) {
    if (c.ring() != Ring::QZ) throw std::invalid_argument("integrate_q: expects Q/Z cochain");
    if (c.complex() != fc.complex || c.degree() != fc.degree)
        throw std::invalid_argument("integrate_q: chain/cochain mismatch");
    QZ acc;
    const auto& top = fc.complex->simplices(fc.degree);
    for (size_t k = 0; k < top.size(); ++k) acc = acc + c.qval(top[k]).times(fc.signs[k]);
    return acc;
}

Cochain pullback(const SimplicialMap& f, const Cochain& c) {
    if (c.complex() != f.target) throw std::invalid_argument("pullback: cochain not on target");
    Cochain r(f.source, c.degree(), c.ring(), c.modulus());
    if (c.degree() > f.source->dim()) return r;
    const bool qz = c.ring() == Ring::QZ;
    for (const Simplex& s : f.source->simplices(c.degree())) {
        auto im = f.apply(s);
        if (im.degenerate) continue;  // normalized cochains vanish on degenerate images
        if (qz) r.set(s, c.qval(im.simplex));
        else r.set(s, c.ival(im.simplex));
    }
    return r;
}

Cochain restrict_to(const SimplicialMap& incl, const Cochain& c) {
    return pullback(incl, c);
}

} // namespace spin4
