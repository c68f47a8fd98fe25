#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "toric/cycle.hpp"
#include "toric/polytope.hpp"

namespace toric {

using nlohmann::json;

// All readers throw SchemaError on malformed input.

json series_to_json(const PolySeries& s);
PolySeries series_from_json(const json& j);

FanData fan_from_json(const json& j);
json fan_to_json(const FanData& fan);

InnerProductMap gram_from_json(const json& j);

RatVec alpha_from_json(const json& j, size_t nrays);

LatticePolytope polytope_from_json(const json& j);

DPolynomial dpoly_from_json(const json& j, const FanData& fan);

// Cycle as a flat object {"V1": "...", "V13": "..."} with 1-based ray
// indices ("V0" is the zero cone) and compact exact series strings.
json cycle_to_json(const EquivariantCycle& c);
std::string cone_key_name(const ConeKey& key);

json load_json_file(const std::string& path);

}  // namespace toric
