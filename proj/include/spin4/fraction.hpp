#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spin4 {

// Exact rational. Used both as a plain scalar (scale factors like 1/8) and,
// via QZ reduction, as a circle-group value in [0,1).
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n, long long d) : num(n), den(d) { reduce(); }
    static Frac integer(long long n) { return Frac(n, 1); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("Frac: zero denominator");
        if (den < 0) { den = -den; num = -num; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    Frac operator-() const { Frac f; f.num = -num; f.den = den; return f; }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Value in Q/Z: reduced fraction with 0 <= num < den.
struct QZ {
    long long num = 0;
    long long den = 1;

    QZ() = default;
    QZ(long long n, long long d) { set(n, d); }
    static QZ from(const Frac& f) { return QZ(f.num, f.den); }

    void set(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("QZ: zero denominator");
        if (d < 0) { d = -d; n = -n; }
        n %= d;
        if (n < 0) n += d;
        long long g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }

    friend QZ operator+(const QZ& a, const QZ& b) {
        return QZ(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend QZ operator-(const QZ& a, const QZ& b) {
        return QZ(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    QZ operator-() const { return QZ(-num, den); }
    QZ times(long long k) const { return QZ(num * k, den); }
    friend bool operator==(const QZ& a, const QZ& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const QZ& a, const QZ& b) { return !(a == b); }
    bool is_zero() const { return num == 0; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace spin4
