#pragma once

#include <string>
#include <vector>

#include "micz/errors.hpp"
#include "micz/linalg.hpp"

namespace micz {

/// The "old" parametrization: Lenz vector A and canonical angular momentum L,
/// subject to L·L > (L·A)^2.
struct EuclideanOrbitParams {
    Vec3 A;
    Vec3 L;
};

/// The "new" parametrization: Minkowski vectors (a, l) with l·l = -1,
/// a·l = 0 and a0 > 0.
struct MinkowskiOrbitParams {
    MinkVec4 a;
    MinkVec4 l;
};

enum class OrbitClass { Elliptic, Parabolic, Hyperbolic };

inline const char* to_string(OrbitClass c)
{
    switch (c) {
    case OrbitClass::Elliptic: return "Elliptic";
    case OrbitClass::Parabolic: return "Parabolic";
    case OrbitClass::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

/// Strict membership guard for L^2 - (L·A)^2; equality is the colliding-orbit
/// boundary, which both parameter spaces exclude.
inline constexpr double kMembershipSlack = 1e-12;

/// Construction tolerance on |l^2 + 1| and |a·l|.
inline constexpr double kMinkowskiTol = 1e-9;

/// Symmetric band around a^2 = 0 separating the orbit classes.
inline constexpr double kClassifyTol = 1e-10;

struct ValidationIssue {
    std::string invariant;  // which invariant failed
    double magnitude;       // by how much
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    std::string describe() const;
};

ValidationReport validate_euclidean(const EuclideanOrbitParams& p,
                                    double slack = kMembershipSlack);
ValidationReport validate_minkowski(const MinkowskiOrbitParams& p,
                                    double tol = kMinkowskiTol);

/// Throw MiczError(InvalidParams) carrying the report text if validation fails.
void require_valid(const EuclideanOrbitParams& p, double slack = kMembershipSlack);
void require_valid(const MinkowskiOrbitParams& p, double tol = kMinkowskiTol);

/// Explicit re-projection onto the constraint set: normalizes l to unit
/// Lorentz norm and removes a's component along l. Never applied silently.
MinkowskiOrbitParams reproject(const MinkowskiOrbitParams& p);

/// mu = L·A.
double magnetic_charge(const EuclideanOrbitParams& p);

/// (A, L) -> (a, l) = ((1,A)/(L^2-mu^2), (mu,L)/sqrt(L^2-mu^2)).
/// Throws DegenerateOrbit when L^2 - mu^2 <= slack.
MinkowskiOrbitParams to_minkowski(const EuclideanOrbitParams& p,
                                  double slack = kMembershipSlack);

/// (a, l) -> (A, L) = (𝐚/a0, 𝐥/sqrt(a0)).
EuclideanOrbitParams to_euclidean(const MinkowskiOrbitParams& p);

/// E = -(1 - A^2) / (2 (L^2 - mu^2)).
double energy_euclidean(const EuclideanOrbitParams& p);

/// E = -a^2 / (2 a0).
double energy_minkowski(const MinkowskiOrbitParams& p);

/// e = |L x A| / |L - mu A|.
double eccentricity(const EuclideanOrbitParams& p);

/// Elliptic iff a^2 > tol, Parabolic iff |a^2| <= tol, Hyperbolic iff a^2 < -tol.
OrbitClass classify(const MinkowskiOrbitParams& p, double tol = kClassifyTol);

/// Circle criterion: |L x A| <= tol * |L|.
bool is_circle(const EuclideanOrbitParams& p, double tol = kClassifyTol);

} // namespace micz
