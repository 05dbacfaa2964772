#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "micz/orbit_params.hpp"
#include "micz/rng.hpp"

namespace micz::verify {

struct FamilyResult {
    std::string name;
    bool pass{};
    long cases{};
    double worst{};     // family-specific worst residual (0 when not applicable)
    std::string detail; // empty unless something failed
};

struct VerifyReport {
    std::uint64_t seed{};
    int count{};
    std::vector<FamilyResult> families;
    bool all_pass{};
};

// Random valid parameters: components uniform in [-2, 2], rejected while
// L^2 - (L.A)^2 <= 0.01.
EuclideanOrbitParams random_params(Rng& rng);

// Variant pinned to one class. Elliptic and hyperbolic draws are rejection
// sampled and kept away from the class boundary so canonicalization stays
// legal; parabolic draws are symmetry translates of the canonical null pair,
// since exactly parabolic parameters have measure zero.
EuclideanOrbitParams random_params_of_class(Rng& rng, OrbitClass cls);

// Runs every invariant family deterministically from the seed. perturb != 0
// injects a fault into the validation family (negative control).
VerifyReport run_verify(std::uint64_t seed, int count, double perturb = 0.0);

nlohmann::json to_json(const VerifyReport& rep);

} // namespace micz::verify
