#pragma once

#include <vector>

#include "micz/errors.hpp"
#include "micz/linalg.hpp"
#include "micz/orbit_params.hpp"

namespace micz {

// Instantaneous state of a charge moving in the monopole + Coulomb +
// centrifugal field. |q| > 0 always; the origin is not part of configuration
// space.
struct PhaseState {
    double t{};
    Vec3 q;
    Vec3 v;
    double mu{};
};

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.0;    // 0 = unlimited
    long max_steps = 1000000; // attempted steps (accepted + rejected)
    double fixed_step = 0.0;  // > 0 disables adaptivity (order-convergence tests)
};

// One row per accepted step, strictly increasing t, first row = initial state.
struct Trajectory {
    std::vector<PhaseState> samples;
    IntegratorConfig config_echo;
};

// Max deviation of each conserved quantity from its initial value.
struct DriftReport {
    double max_dL{};
    double max_dA{};
    double max_dE{};
};

// B = mu * q / |q|^3
Vec3 magnetic_field(const Vec3& q, double mu);

// q'' = -v x B + (mu^2/r^4 - 1/r^3) q
Vec3 acceleration(const Vec3& q, const Vec3& v, double mu);

// L = q x v + mu * q/|q|        (conserved)
Vec3 angular_momentum(const PhaseState& s);

// A = L x v + q/|q|             (conserved; dot3(L, A) = mu)
Vec3 lenz_vector(const PhaseState& s);

// E = v^2/2 - 1/r + mu^2/(2 r^2) (conserved)
double energy(const PhaseState& s);

// Adaptive embedded Runge-Kutta 5(4) with step rejection. Throws
// StepLimitExceeded past cfg.max_steps and NearCollision if |q| falls below
// sqrt(abs_tol) (unreachable from states synthesized from valid parameters).
Trajectory integrate(const PhaseState& s0, double T, const IntegratorConfig& cfg = {});

// Initial state whose kinematic invariants reproduce p exactly: picks the unit
// vector n with dot3(L, n) = mu maximizing |A - n| (deterministic
// tie-breaking), then v = (A - n) x L / L^2, q = v x (L - mu n) / v^2. The
// output is at pericenter (dot3(q, v) = 0).
PhaseState synthesize_initial_state(const EuclideanOrbitParams& p);

DriftReport drift_report(const Trajectory& tr);

} // namespace micz
