#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "spin4/cochain.hpp"
#include "spin4/g4.hpp"

namespace spin4 {

// Canonical JSON forms. Complexes list vertices with ranks and simplices by
// dimension; cochain values are exact, with Q/Z entries as "num/den" strings.

nlohmann::json complex_to_json(const OrderedComplex& cx);
std::unique_ptr<OrderedComplex> complex_from_json(const nlohmann::json& j);

nlohmann::json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const nlohmann::json& j, const OrderedComplex& cx);

// Tagged unions: {"kind":"triple", ...} / {"kind":"relation", ...}.
nlohmann::json triple_to_json(const Triple& t);
Triple triple_from_json(const nlohmann::json& j, const OrderedComplex& cx);
nlohmann::json relation_to_json(const RelationPair& r);
RelationPair relation_from_json(const nlohmann::json& j, const OrderedComplex& cx);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

} // namespace spin4
