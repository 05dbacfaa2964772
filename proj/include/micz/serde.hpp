#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "micz/dynamics.hpp"
#include "micz/lorentz.hpp"
#include "micz/orbit_params.hpp"

namespace micz::serde {

// Params files hold one JSON object; the representation is detected by key
// names: {"A","L"} Euclidean, {"a","l"} Minkowski, {"q","v","mu"} phase state.
using AnyInput = std::variant<EuclideanOrbitParams, MinkowskiOrbitParams, PhaseState>;

nlohmann::json to_json(const EuclideanOrbitParams& p);
nlohmann::json to_json(const MinkowskiOrbitParams& p);
nlohmann::json to_json(const PhaseState& s);
nlohmann::json to_json(const OrientedSymmetry& g); // {"lambda": ..., "matrix": [[..4]..]}
nlohmann::json to_json(const DriftReport& r);

// All loaders validate and throw InvalidParams on malformed or invalid data.
EuclideanOrbitParams euclidean_from_json(const nlohmann::json& j);
MinkowskiOrbitParams minkowski_from_json(const nlohmann::json& j);
PhaseState state_from_json(const nlohmann::json& j);
OrientedSymmetry symmetry_from_json(const nlohmann::json& j);

AnyInput parse_input(const std::string& text);

// 2-space indent, trailing newline; numbers in shortest round-trip form
std::string dump_json(const nlohmann::json& j);

std::string format_double(double v); // shortest round-trip decimal

// header t,qx,qy,qz,vx,vy,vz; one row per accepted step
std::string trajectory_csv(const Trajectory& tr);

// header x,y,z,x0; one row per orbit sample
std::string samples_csv(const std::vector<MinkVec4>& pts);

} // namespace micz::serde
