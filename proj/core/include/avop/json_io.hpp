#pragma once

#include <json.hpp>

#include "avop/algebra.hpp"
#include "avop/averaging.hpp"
#include "avop/group.hpp"
#include "avop/magma.hpp"
#include "avop/pairing.hpp"
#include "avop/ybe.hpp"

namespace avop {

using json = nlohmann::ordered_json;

// Readers throw input_error with a description of the malformed field.
FiniteMagma magma_from_json(const json& j);
json magma_to_json(const FiniteMagma& m);

FiniteGroup group_from_json(const json& j);  // validates the table
json group_to_json(const FiniteGroup& g);

SetMap setmap_from_json(const json& j);
json setmap_to_json(const SetMap& f);

GroupAction action_from_json(const json& j);  // validated
json action_to_json(const GroupAction& a);

RackPairing pairing_from_json(const json& j);
json pairing_to_json(const RackPairing& p);

SkewBrace brace_from_json(const json& j);  // validated
json brace_to_json(const SkewBrace& b);

DiRack dirack_from_json(const json& j);
json dirack_to_json(const DiRack& d);

SetSolution solution_from_json(const json& j);
json solution_to_json(const SetSolution& s);

Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);

StructureConstants sc_from_json(const json& j);
json sc_to_json(const StructureConstants& sc);

LinearMap linmap_from_json(const json& j);
json linmap_to_json(const LinearMap& m);

DiLeibniz dileibniz_from_json(const json& j);
json dileibniz_to_json(const DiLeibniz& d);

BiRepresentation rep_from_json(const json& j);
json rep_to_json(const BiRepresentation& r);

json ga_element_to_json(const FiniteGroup& g, const Vec& coeffs);
Vec ga_element_from_json(const json& j, int expected_size);

/// Parses a whole file; parse failures surface as input_error with
/// line/column information.
json load_json_file(const std::string& path);

}  // namespace avop
