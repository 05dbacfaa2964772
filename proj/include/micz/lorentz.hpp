#pragma once

#include <cstdint>

#include "micz/errors.hpp"
#include "micz/linalg.hpp"
#include "micz/orbit_params.hpp"

namespace micz {

// Matrix tolerance for the pseudo-orthogonality, orthochronicity and
// unit-determinant checks.
inline constexpr double kTransformTol = 1e-10;

// Element of O+(1,3): m^T eta m = eta, m[0][0] >= 1, det = +-1. Row-major,
// acts on column vectors (x0, x1, x2, x3).
struct LorentzTransform {
    double m[4][4]{};

    static LorentzTransform identity();
    MinkVec4 apply(const MinkVec4& x) const;
    LorentzTransform operator*(const LorentzTransform& rhs) const;
};

// Element (lambda, Lam) of O+(1,3) x R+, acting by (a, l) -> (lambda Lam a, Lam l).
struct OrientedSymmetry {
    double lambda = 1.0;
    LorentzTransform Lam = LorentzTransform::identity();
};

ValidationReport validate_transform(const LorentzTransform& t);
void require_valid(const LorentzTransform& t);
void require_valid(const OrientedSymmetry& g);

// Pure boost: symmetric, det +1, m[0][0] = cosh(rapidity); maps (1, 0) to
// (cosh r, sinh r * dir). |dir| = 1 within 1e-12 or NonUnitDirection.
LorentzTransform boost(const Vec3& dir, double rapidity);

// Spatial rotation / reflection embedded in the x0-fixing block. Rotation has
// det +1, reflection det -1; both orthochronous.
LorentzTransform rotation(const Vec3& axis, double angle);
LorentzTransform spatial_reflection(const Vec3& normal);

OrientedSymmetry identity_symmetry();
OrientedSymmetry compose(const OrientedSymmetry& g1, const OrientedSymmetry& g2);
OrientedSymmetry inverse(const OrientedSymmetry& g); // (1/lambda, eta Lam^T eta)

// Image (lambda Lam a, Lam l). Throws SignFlip when the image leaves the
// future cone (possible only for spacelike a, where the action is not
// well-defined on oriented parameters).
MinkowskiOrbitParams act(const OrientedSymmetry& g, const MinkowskiOrbitParams& p);

// Reference pairs: a = (1,0,0,0), l = (0,1,0,0) and a = (1,0,1,0), l = (0,1,0,0).
MinkowskiOrbitParams canonical_elliptic_pair();
MinkowskiOrbitParams canonical_parabolic_pair();

// Constructive boost -> rotation -> scale decompositions moving p onto the
// canonical pair of its class. Throw WrongClass on class mismatch and
// ClassBoundary when |mdot(a,a)| <= 10 * kClassifyTol on the elliptic side
// (the rest-frame boost rapidity diverges there).
OrientedSymmetry canonicalize_elliptic(const MinkowskiOrbitParams& p);
OrientedSymmetry canonicalize_parabolic(const MinkowskiOrbitParams& p);

// Dispatch by classify(p); Hyperbolic -> HyperbolicUnsupported.
OrientedSymmetry canonicalize(const MinkowskiOrbitParams& p);

// Element g with act(g, p1) = p2, built as inverse(canonicalize(p2)) o
// canonicalize(p1). Classes must match and be Elliptic or Parabolic.
OrientedSymmetry transport(const MinkowskiOrbitParams& p1, const MinkowskiOrbitParams& p2);

// For spacelike a (mdot(a,a) < -kClassifyTol): a boost whose image of a has
// negative time component, witnessing that orientation is not preserved off
// the elliptic/parabolic classes.
LorentzTransform spacelike_sign_flip_boost(const MinkVec4& a);

// Deterministic in seed: random rotation o boost (|rapidity| <= max_rapidity),
// optionally a reflection, scaling in [1/4, 4].
OrientedSymmetry random_element(std::uint64_t seed, double max_rapidity);

// max over the eight components of |delta a_i|, |delta l_i|
double params_distance(const MinkowskiOrbitParams& p, const MinkowskiOrbitParams& q);

double det4(const LorentzTransform& t);

} // namespace micz
