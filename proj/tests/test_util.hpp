#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <span>

#include "spin4/builders.hpp"
#include "spin4/cochain.hpp"

namespace spin4::testing {

inline Cochain random_cochain(const OrderedComplex& cx, int deg, Ring ring, std::mt19937_64& rng,
                              long long lo = -5, long long hi = 5) {
    Cochain c(&cx, deg, ring);
    if (deg > cx.dim()) return c;
    for (const Simplex& s : cx.simplices(deg)) {
        if (ring == Ring::Z2) c.set(s, (long long)(rng() & 1));
        else c.set(s, lo + (long long)(rng() % (unsigned long long)(hi - lo + 1)));
    }
    return c;
}

// On a simplex every cocycle is a coboundary, so this samples Z^deg uniformly
// there; on general complexes it samples the coboundary subgroup.
inline Cochain random_coboundary(const OrderedComplex& cx, int deg, Ring ring,
                                 std::mt19937_64& rng) {
    return coboundary(random_cochain(cx, deg - 1, ring, rng));
}

// Union of ntop random (topdim)-simplices on nverts vertices, closed over.
inline std::unique_ptr<OrderedComplex> random_complex(std::mt19937_64& rng, int nverts,
                                                      int topdim, int ntop) {
    auto cx = std::make_unique<OrderedComplex>();
    for (int i = 0; i < nverts; ++i) cx->add_vertex(i);
    std::vector<std::int32_t> vs((size_t)nverts);
    for (int i = 0; i < nverts; ++i) vs[(size_t)i] = i;
    for (int k = 0; k < ntop; ++k) {
        std::shuffle(vs.begin(), vs.end(), rng);
        cx->add_simplex(std::span<const std::int32_t>(vs.data(), (size_t)(topdim + 1)));
    }
    cx->finalize();
    return cx;
}

} // namespace spin4::testing
