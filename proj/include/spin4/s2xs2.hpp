#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "spin4/builders.hpp"
#include "spin4/cochain.hpp"
#include "spin4/g4.hpp"

namespace spin4 {

// Exact reproduction report: labelled checks and exact values, no rounding.
struct ReproReport {
    std::string id;
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::string> notes;  // derivation ledger, printed verbatim
    long long millis = 0;

    void check(const std::string& label, bool ok);
    void value(const std::string& label, const std::string& v);
    nlohmann::json to_json() const;
    std::string text() const;
};

// The product sphere workspace: the product triangulation P of two boundary
// tetrahedra, its subdivision T, the diagonal-layered reordering T', the
// collapse g onto the suspension of the frontier, and the comparison prism.
struct S2xS2 {
    std::unique_ptr<OrderedComplex> factor;  // boundary of the tetrahedron
    BarycentricResult bfac;                  // its subdivision (projection target)
    ProductResult prod;                      // P
    BarycentricResult bary;                  // T
    SimplicialMap proj1, proj2;              // T -> subdivided factor
    Cochain a1, a2;                          // pulled-back generator cocycles on T
    FundamentalChain chain;                  // oriented so A1 A2 integrates to +1
    NeighborhoodResult nbhd;                 // around the diagonal barycenters
    std::unique_ptr<OrderedComplex> tprime;  // T': same simplices, layered ranks
    FundamentalChain chain_tprime;           // the same orientation, T' indexing
    SuspensionResult susp_bd;                // suspension of the frontier
    SimplicialMap g;                         // T' -> suspension
    Cochain alpha;                           // generator 1-cocycle on the frontier
    Cochain c;                               // g^* of the suspended generator, on T'
    PrismResult pr;                          // the comparison prism
    FundamentalChain prism_chain;            // boundary = (T' end) - (T end)
    // Filled in by key_result_2:
    std::optional<Cochain> atilde, ptilde;
};

std::unique_ptr<S2xS2> build_s2xs2();

// Value transport between complexes sharing the same simplices (T and T').
Cochain transfer_cochain(const Cochain& c, const OrderedComplex& target);

ReproReport key_result_1(S2xS2& ws);
// `cache_dir`: when nonempty, certified extension cochains are stored there
// and reused by later runs (empty string disables caching).
ReproReport key_result_2(S2xS2& ws, const std::string& cache_dir = "");
ReproReport key_result_3(S2xS2& ws);

} // namespace spin4
