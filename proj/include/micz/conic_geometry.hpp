#pragma once

#include <utility>
#include <vector>

#include "micz/linalg.hpp"
#include "micz/orbit_params.hpp"

namespace micz {

/// Residuals of the three orbit equations at a point r:
///   rho1:      r - A·r - (L^2 - mu^2)
///   rho2:      L·r - mu r
///   rho_plane: (L - mu A)·r - mu (L^2 - mu^2)
/// All vanish exactly on orbit points; rho_plane = rho2 + mu * rho1 identically.
struct OrbitResiduals {
    double rho1{};
    double rho2{};
    double rho_plane{};
};

/// Affine frame for the plane {x : a·x = 1, l·x = 0}: a base point plus two
/// spanning directions Lorentz-orthogonal to both a and l. Construction is
/// deterministic, seeded from the coordinate axes in fixed order, and the
/// (w1, w2) pair is oriented so that cross3(spatial(w1), spatial(w2)) is a
/// positive multiple of L - mu A.
struct PlaneFrame {
    MinkVec4 x_base;
    MinkVec4 w1;
    MinkVec4 w2;
};

OrbitResiduals orbit_residuals(const EuclideanOrbitParams& p, const Vec3& r);

/// r -> (|r|, r); the future light cone minus its vertex.
MinkVec4 lift_to_cone(const Vec3& r);

/// (a·x - 1, l·x).
std::pair<double, double> plane_residuals(const MinkowskiOrbitParams& p, const MinkVec4& x);

PlaneFrame plane_frame(const MinkowskiOrbitParams& p);

/// Default x0 window for unbounded orbits: x0 <= kRangeCapScale / a0. The
/// scale is kept moderate so the cone residual x^2, whose rounding error
/// grows like x0^2 * eps, stays well inside the 1e-9 sample budget.
inline constexpr double kRangeCapScale = 20.0;

/// Points of the orbit {x^2 = 0, x0 > 0} ∩ {a·x = 1, l·x = 0}, ordered along
/// the traversal direction of the oriented orbit. Elliptic parameters yield n
/// points covering the closed curve; parabolic/hyperbolic ones cover the
/// window x0 <= range_cap (pass 0 for the default cap).
std::vector<MinkVec4> sample_orbit_lifted(const MinkowskiOrbitParams& p, int n,
                                          double range_cap = 0.0);

/// Spatial projections of sample_orbit_lifted.
std::vector<Vec3> sample_orbit(const MinkowskiOrbitParams& p, int n, double range_cap = 0.0);

} // namespace micz
