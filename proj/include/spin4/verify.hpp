#pragma once

#include <cstdint>
#include <string>

#include "spin4/complex.hpp"
#include "spin4/s2xs2.hpp"

namespace spin4 {

// Named property suites exercising the algebraic identities end to end.
// Deterministic in (name, trials, seed). `user_cx`, when given, joins the
// complex pool of the randomized suites. Unknown names throw invalid_argument.
// Suites: cupi, lifts, natural-ops, group-laws, relations, suspension,
// filtration.
ReproReport verify_suite(const std::string& name, long long trials, std::uint64_t seed,
                         const OrderedComplex* user_cx = nullptr);

} // namespace spin4
