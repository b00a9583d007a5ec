#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

namespace spin4 {

// A simplex as an ordered vertex tuple. Capacity 8 vertices (dimension <= 7),
// which covers every complex this engine builds (max dimension 6).
struct Simplex {
    static constexpr int kMaxVerts = 8;

    std::uint8_t n = 0;
    std::array<std::int32_t, kMaxVerts> v{};

    Simplex() = default;
    Simplex(std::initializer_list<std::int32_t> verts) {
        if (verts.size() > kMaxVerts) throw std::invalid_argument("Simplex: too many vertices");
        for (auto x : verts) v[n++] = x;
    }
    explicit Simplex(std::span<const std::int32_t> verts) {
        if (verts.size() > kMaxVerts) throw std::invalid_argument("Simplex: too many vertices");
        for (auto x : verts) v[n++] = x;
    }

    int dim() const { return int(n) - 1; }
    int size() const { return int(n); }
    std::int32_t operator[](int i) const { return v[std::size_t(i)]; }
    std::int32_t& operator[](int i) { return v[std::size_t(i)]; }
    void push(std::int32_t x) {
        if (n >= kMaxVerts) throw std::invalid_argument("Simplex: too many vertices");
        v[n++] = x;
    }

    // Face with the i-th vertex removed.
    Simplex face(int i) const {
        Simplex f;
        for (int j = 0; j < int(n); ++j)
            if (j != i) f.push(v[std::size_t(j)]);
        return f;
    }

    bool has_repeat() const {
        for (int i = 0; i + 1 < int(n); ++i)
            for (int j = i + 1; j < int(n); ++j)
                if (v[std::size_t(i)] == v[std::size_t(j)]) return true;
        return false;
    }

    friend bool operator==(const Simplex& a, const Simplex& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < int(a.n); ++i)
            if (a.v[std::size_t(i)] != b.v[std::size_t(i)]) return false;
        return true;
    }
    friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }
    friend bool operator<(const Simplex& a, const Simplex& b) {
        if (a.n != b.n) return a.n < b.n;
        for (int i = 0; i < int(a.n); ++i)
            if (a.v[std::size_t(i)] != b.v[std::size_t(i)])
                return a.v[std::size_t(i)] < b.v[std::size_t(i)];
        return false;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < int(n); ++i) {
            if (i) s += ",";
            s += std::to_string(v[std::size_t(i)]);
        }
        return s + ")";
    }
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ull;
        h = (h ^ s.n) * 1099511628211ull;
        for (int i = 0; i < int(s.n); ++i)
            h = (h ^ std::uint64_t(std::uint32_t(s.v[std::size_t(i)]))) * 1099511628211ull;
        return std::size_t(h);
    }
};

} // namespace spin4
