#include "micz/orbit_params.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace micz {

std::string ValidationReport::describe() const
{
    if (issues.empty())
        return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i)
            os << "; ";
        os << issues[i].invariant << " (by " << issues[i].magnitude << ")";
    }
    return os.str();
}

ValidationReport validate_euclidean(const EuclideanOrbitParams& p, double slack)
{
    ValidationReport rep;
    if (!all_finite(p.A) || !all_finite(p.L)) {
        rep.issues.push_back({"components finite", std::numeric_limits<double>::infinity()});
        return rep;
    }
    const double mu = dot3(p.L, p.A);
    const double margin = dot3(p.L, p.L) - mu * mu;
    if (!(margin > slack))
        rep.issues.push_back({"L^2 - (L.A)^2 > slack (colliding-orbit boundary)",
                              slack - margin});
    return rep;
}

ValidationReport validate_minkowski(const MinkowskiOrbitParams& p, double tol)
{
    ValidationReport rep;
    if (!all_finite(p.a) || !all_finite(p.l)) {
        rep.issues.push_back({"components finite", std::numeric_limits<double>::infinity()});
        return rep;
    }
    const double ll = mdot(p.l, p.l);
    if (std::fabs(ll + 1.0) > tol)
        rep.issues.push_back({"l^2 = -1", std::fabs(ll + 1.0)});
    const double al = mdot(p.a, p.l);
    if (std::fabs(al) > tol)
        rep.issues.push_back({"a.l = 0", std::fabs(al)});
    if (!(p.a.x0 > 0.0))
        rep.issues.push_back({"a0 > 0", -p.a.x0});
    return rep;
}

void require_valid(const EuclideanOrbitParams& p, double slack)
{
    const auto rep = validate_euclidean(p, slack);
    if (!rep.ok())
        throw MiczError(ErrorCode::InvalidParams,
                        "invalid Euclidean orbit parameters: " + rep.describe());
}

void require_valid(const MinkowskiOrbitParams& p, double tol)
{
    const auto rep = validate_minkowski(p, tol);
    if (!rep.ok())
        throw MiczError(ErrorCode::InvalidParams,
                        "invalid Minkowski orbit parameters: " + rep.describe());
}

MinkowskiOrbitParams reproject(const MinkowskiOrbitParams& p)
{
    const double ll = mdot(p.l, p.l);
    if (!(ll < 0.0))
        throw MiczError(ErrorCode::InvalidParams, "reproject: l is not spacelike");
    MinkowskiOrbitParams q;
    q.l = (1.0 / std::sqrt(-ll)) * p.l;
    // remove a's component along l; l^2 = -1 after normalization
    q.a = p.a + mdot(p.a, q.l) * q.l;
    if (!(q.a.x0 > 0.0))
        throw MiczError(ErrorCode::InvalidParams, "reproject: a0 <= 0 after projection");
    return q;
}

double magnetic_charge(const EuclideanOrbitParams& p)
{
    return dot3(p.L, p.A);
}

MinkowskiOrbitParams to_minkowski(const EuclideanOrbitParams& p, double slack)
{
    const double mu = dot3(p.L, p.A);
    const double m = dot3(p.L, p.L) - mu * mu;
    if (!(m > slack))
        throw MiczError(ErrorCode::DegenerateOrbit,
                        "L^2 - (L.A)^2 <= slack: colliding-orbit boundary");
    const double inv = 1.0 / m;
    const double rs = 1.0 / std::sqrt(m);
    return {make_mink(inv, inv * p.A), make_mink(rs * mu, rs * p.L)};
}

EuclideanOrbitParams to_euclidean(const MinkowskiOrbitParams& p)
{
    const double a0 = p.a.x0;
    return {(1.0 / a0) * p.a.spatial(), (1.0 / std::sqrt(a0)) * p.l.spatial()};
}

double energy_euclidean(const EuclideanOrbitParams& p)
{
    const double mu = dot3(p.L, p.A);
    return -(1.0 - dot3(p.A, p.A)) / (2.0 * (dot3(p.L, p.L) - mu * mu));
}

double energy_minkowski(const MinkowskiOrbitParams& p)
{
    return -mdot(p.a, p.a) / (2.0 * p.a.x0);
}

double eccentricity(const EuclideanOrbitParams& p)
{
    const double mu = dot3(p.L, p.A);
    // L - mu A is nonzero on all of the parameter space: L = mu A would force
    // L^2 = (L.A)^2.
    return norm3(cross3(p.L, p.A)) / norm3(p.L - mu * p.A);
}

OrbitClass classify(const MinkowskiOrbitParams& p, double tol)
{
    const double aa = mdot(p.a, p.a);
    if (std::fabs(aa) <= tol)
        return OrbitClass::Parabolic;
    return aa > 0.0 ? OrbitClass::Elliptic : OrbitClass::Hyperbolic;
}

bool is_circle(const EuclideanOrbitParams& p, double tol)
{
    return norm3(cross3(p.L, p.A)) <= tol * norm3(p.L);
}

} // namespace micz
