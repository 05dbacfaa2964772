#include "micz/conic_geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace micz {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Euclidean 4-dot and the metric flip eta(x) = (x0, -x1, -x2, -x3), so that
// mdot(a, x) == edot(eta(a), x).
double edot(const MinkVec4& u, const MinkVec4& v)
{
    return u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3;
}

MinkVec4 eta(const MinkVec4& u) { return {u.x0, -u.x1, -u.x2, -u.x3}; }

struct Coord2 {
    double s{}, t{};
};

double det2(const Coord2& u, const Coord2& v) { return u.s * v.t - u.t * v.s; }

} // namespace

OrbitResiduals orbit_residuals(const EuclideanOrbitParams& p, const Vec3& r)
{
    const double rn = norm3(r);
    if (rn == 0.0)
        throw MiczError(ErrorCode::OriginPoint, "orbit_residuals: r = 0");
    const double mu = dot3(p.L, p.A);
    const double m = dot3(p.L, p.L) - mu * mu;
    OrbitResiduals rho;
    rho.rho1 = rn - dot3(p.A, r) - m;
    rho.rho2 = dot3(p.L, r) - mu * rn;
    rho.rho_plane = dot3(p.L - mu * p.A, r) - mu * m;
    return rho;
}

MinkVec4 lift_to_cone(const Vec3& r)
{
    const double rn = norm3(r);
    if (rn == 0.0)
        throw MiczError(ErrorCode::OriginPoint, "lift_to_cone: cone vertex excluded");
    return make_mink(rn, r);
}

std::pair<double, double> plane_residuals(const MinkowskiOrbitParams& p, const MinkVec4& x)
{
    return {mdot(p.a, x) - 1.0, mdot(p.l, x)};
}

PlaneFrame plane_frame(const MinkowskiOrbitParams& p)
{
    require_valid(p);

    const MinkVec4 ea = eta(p.a);
    const MinkVec4 el = eta(p.l);

    // Minimum-Euclidean-norm solution of a.x = 1, l.x = 0 via the 2x2 Gram system.
    const double gaa = edot(ea, ea);
    const double gal = edot(ea, el);
    const double gll = edot(el, el);
    const double det = gaa * gll - gal * gal;
    const double ca = gll / det;
    const double cl = -gal / det;
    PlaneFrame f;
    f.x_base = ca * ea + cl * el;

    // Orthonormal basis of the direction space {w : a.w = 0, l.w = 0}:
    // complete the Euclidean-orthonormalized (ea, el) with coordinate axes in
    // fixed order. At least two axes always carry residual norm^2 >= 1/4
    // against a 2D span.
    MinkVec4 u1 = (1.0 / std::sqrt(gaa)) * ea;
    MinkVec4 u2 = el - edot(el, u1) * u1;
    u2 = (1.0 / std::sqrt(edot(u2, u2))) * u2;

    const std::array<MinkVec4, 4> axes = {MinkVec4{1, 0, 0, 0}, MinkVec4{0, 1, 0, 0},
                                          MinkVec4{0, 0, 1, 0}, MinkVec4{0, 0, 0, 1}};
    MinkVec4 w[2];
    int found = 0;
    for (const auto& axis : axes) {
        if (found == 2)
            break;
        MinkVec4 r = axis - edot(axis, u1) * u1 - edot(axis, u2) * u2;
        for (int k = 0; k < found; ++k)
            r = r - edot(r, w[k]) * w[k];
        const double n2 = edot(r, r);
        if (n2 < 0.2)
            continue;
        r = (1.0 / std::sqrt(n2)) * r;
        // second orthogonalization pass
        r = r - edot(r, u1) * u1 - edot(r, u2) * u2;
        for (int k = 0; k < found; ++k)
            r = r - edot(r, w[k]) * w[k];
        w[found++] = (1.0 / std::sqrt(edot(r, r))) * r;
    }
    f.w1 = w[0];
    f.w2 = w[1];

    // Orient (w1, w2) so that the spatial pullback matches the orbit-plane
    // orientation L - mu A.
    const EuclideanOrbitParams e = to_euclidean(p);
    const Vec3 binormal = e.L - magnetic_charge(e) * e.A;
    if (dot3(cross3(f.w1.spatial(), f.w2.spatial()), binormal) < 0.0)
        f.w2 = -f.w2;
    return f;
}

namespace {

struct PlaneQuadric {
    PlaneFrame frame;
    double c0;       // x_base . x_base
    double b1, b2;   // x_base . w_i
    double m11, m12, m22;

    double eval(const Coord2& p) const
    {
        return c0 + 2.0 * (b1 * p.s + b2 * p.t) + m11 * p.s * p.s +
               2.0 * m12 * p.s * p.t + m22 * p.t * p.t;
    }

    MinkVec4 lift(const Coord2& p) const
    {
        return frame.x_base + p.s * frame.w1 + p.t * frame.w2;
    }

    double x0_of(const Coord2& p) const
    {
        return frame.x_base.x0 + p.s * frame.w1.x0 + p.t * frame.w2.x0;
    }
};

PlaneQuadric make_quadric(const PlaneFrame& f)
{
    PlaneQuadric q;
    q.frame = f;
    q.c0 = mdot(f.x_base, f.x_base);
    q.b1 = mdot(f.x_base, f.w1);
    q.b2 = mdot(f.x_base, f.w2);
    q.m11 = mdot(f.w1, f.w1);
    q.m12 = mdot(f.w1, f.w2);
    q.m22 = mdot(f.w2, f.w2);
    return q;
}

std::vector<Coord2> sample_ellipse(const PlaneQuadric& q, int n)
{
    const double det = q.m11 * q.m22 - q.m12 * q.m12;
    if (!(det > 0.0) || !(q.m11 < 0.0))
        throw MiczError(ErrorCode::InvalidArgument,
                        "sample_orbit: quadratic form is not elliptic");
    const Coord2 center{(-q.b1 * q.m22 + q.b2 * q.m12) / det,
                        (-q.b2 * q.m11 + q.b1 * q.m12) / det};
    const double qc = q.c0 + q.b1 * center.s + q.b2 * center.t;
    if (!(qc > 0.0))
        throw MiczError(ErrorCode::InvalidArgument, "sample_orbit: empty conic section");
    std::vector<Coord2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        const double c = std::cos(th), s = std::sin(th);
        const double d = q.m11 * c * c + 2.0 * q.m12 * c * s + q.m22 * s * s;
        const double rho = std::sqrt(qc / -d);
        pts.push_back({center.s + rho * c, center.t + rho * s});
    }
    return pts;
}

// Stable small-magnitude root of qa*x^2 + 2*qb*x + qc = 0 (the root continuous
// with the qa -> 0 limit -qc/(2*qb)).
double stable_quadratic_root(double qa, double qb, double qc)
{
    const double disc = std::max(0.0, qb * qb - qa * qc);
    const double denom = qb + std::copysign(std::sqrt(disc), qb);
    return -qc / denom;
}

std::vector<Coord2> sample_parabola(const PlaneQuadric& q, const MinkVec4& a, int n,
                                    double cap)
{
    // Sweep direction basis: da along a (the degenerate direction of the
    // quadratic part), db its in-plane perpendicular.
    // coordinates of a in the (w1, w2) basis via Euclidean projections
    Coord2 da{edot(a, q.frame.w1), edot(a, q.frame.w2)};
    const double dn = std::sqrt(da.s * da.s + da.t * da.t);
    da = {da.s / dn, da.t / dn};
    const Coord2 db{-da.t, da.s};

    const double kappa = q.b1 * da.s + q.b2 * da.t;              // ~ (x_base . a)/|a| > 0
    const double kappa2 = q.b1 * db.s + q.b2 * db.t;
    const double maa = q.m11 * da.s * da.s + 2.0 * q.m12 * da.s * da.t + q.m22 * da.t * da.t;
    const double mab = q.m11 * da.s * db.s + q.m12 * (da.s * db.t + da.t * db.s) +
                       q.m22 * da.t * db.t;
    const double mbb = q.m11 * db.s * db.s + 2.0 * q.m12 * db.s * db.t + q.m22 * db.t * db.t;
    if (!(kappa > 0.0) || !(mbb < 0.0))
        throw MiczError(ErrorCode::InvalidArgument,
                        "sample_orbit: degenerate parabolic sweep frame");

    // alpha(beta) from Q(alpha*da + beta*db) = 0; |maa| is ~|a^2| and tiny.
    const auto alpha_of = [&](double beta) {
        return stable_quadratic_root(maa, kappa + beta * mab,
                                     q.c0 + 2.0 * beta * kappa2 + beta * beta * mbb);
    };

    // x0(beta) in the maa -> 0 limit is an upward quadratic; intersect with the cap.
    const double va0 = da.s * q.frame.w1.x0 + da.t * q.frame.w2.x0;
    const double vb0 = db.s * q.frame.w1.x0 + db.t * q.frame.w2.x0;
    const double A2 = -mbb * va0 / (2.0 * kappa);
    const double A1 = vb0 - kappa2 * va0 / kappa;
    const double A0 = q.frame.x_base.x0 - q.c0 * va0 / (2.0 * kappa) - cap;
    if (!(A2 > 0.0))
        throw MiczError(ErrorCode::InvalidArgument, "sample_orbit: unbounded sweep window");
    const double disc = A1 * A1 - 4.0 * A2 * A0;
    if (!(disc > 0.0))
        throw MiczError(ErrorCode::InvalidArgument,
                        "sample_orbit: range_cap below the orbit's minimum x0");
    const double sq = std::sqrt(disc);
    const double beta_lo = (-A1 - sq) / (2.0 * A2);
    const double beta_hi = (-A1 + sq) / (2.0 * A2);

    std::vector<Coord2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double beta =
            beta_lo + (beta_hi - beta_lo) * static_cast<double>(k) / static_cast<double>(n - 1);
        const double alpha = alpha_of(beta);
        pts.push_back({alpha * da.s + beta * db.s, alpha * da.t + beta * db.t});
    }
    return pts;
}

std::vector<Coord2> sample_hyperbola(const PlaneQuadric& q, int n, double cap)
{
    const double det = q.m11 * q.m22 - q.m12 * q.m12;
    if (!(det < 0.0))
        throw MiczError(ErrorCode::InvalidArgument,
                        "sample_orbit: quadratic form is not hyperbolic");
    const Coord2 center{(-q.b1 * q.m22 + q.b2 * q.m12) / det,
                        (-q.b2 * q.m11 + q.b1 * q.m12) / det};
    const double qc = q.c0 + q.b1 * center.s + q.b2 * center.t;

    // Eigen-decomposition of the symmetric quadratic part.
    const double phi = 0.5 * std::atan2(2.0 * q.m12, q.m11 - q.m22);
    const Coord2 v1{std::cos(phi), std::sin(phi)};
    const Coord2 v2{-v1.t, v1.s};
    const auto form = [&](const Coord2& u) {
        return q.m11 * u.s * u.s + 2.0 * q.m12 * u.s * u.t + q.m22 * u.t * u.t;
    };
    double lp = form(v1), lm = form(v2);
    Coord2 vp = v1, vm = v2;
    if (lp < lm) {
        std::swap(lp, lm);
        std::swap(vp, vm);
    }
    if (!(lp > 0.0) || !(lm < 0.0) || qc == 0.0)
        throw MiczError(ErrorCode::InvalidArgument, "sample_orbit: degenerate hyperbola");

    // cosh axis carries the branch pair; sinh axis runs along each branch.
    const Coord2 axis_c = (qc < 0.0) ? vp : vm;
    const Coord2 axis_s = (qc < 0.0) ? vm : vp;
    const double lc = (qc < 0.0) ? lp : lm;
    const double ls = (qc < 0.0) ? lm : lp;
    const double amp_c = std::sqrt(-qc / lc);
    const double amp_s = std::sqrt(qc / ls);

    // Pick the branch on the future cone.
    const double w10 = q.frame.w1.x0, w20 = q.frame.w2.x0;
    const double x0_center = q.frame.x_base.x0 + center.s * w10 + center.t * w20;
    const double dc0 = amp_c * (axis_c.s * w10 + axis_c.t * w20);
    const double ds0 = amp_s * (axis_s.s * w10 + axis_s.t * w20);
    double sigma;
    if (x0_center + dc0 > 0.0 && x0_center - dc0 < 0.0)
        sigma = 1.0;
    else if (x0_center - dc0 > 0.0 && x0_center + dc0 < 0.0)
        sigma = -1.0;
    else
        throw MiczError(ErrorCode::InvalidArgument,
                        "sample_orbit: no unique future-cone branch");

    // x0(tau) = g0 + g1 cosh + g2 sinh = g0 + Ae e^tau + Be e^-tau.
    const double g0 = x0_center;
    const double g1 = sigma * dc0;
    const double g2 = ds0;
    const double Ae = 0.5 * (g1 + g2), Be = 0.5 * (g1 - g2);
    if (!(Ae > 0.0) || !(Be > 0.0))
        throw MiczError(ErrorCode::InvalidArgument, "sample_orbit: branch escapes the cap");
    const double min_x0 = g0 + 2.0 * std::sqrt(Ae * Be);
    if (!(cap > min_x0))
        throw MiczError(ErrorCode::InvalidArgument,
                        "sample_orbit: range_cap below the orbit's minimum x0");
    const double K = cap - g0;
    const double sq = std::sqrt(K * K - 4.0 * Ae * Be);
    const double tau_hi = std::log((K + sq) / (2.0 * Ae));
    const double tau_lo = std::log(std::max((K - sq) / (2.0 * Ae),
                                            std::numeric_limits<double>::min()));

    std::vector<Coord2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double tau =
            tau_lo + (tau_hi - tau_lo) * static_cast<double>(k) / static_cast<double>(n - 1);
        const double ch = std::cosh(tau), sh = std::sinh(tau);
        pts.push_back({center.s + sigma * amp_c * ch * axis_c.s + amp_s * sh * axis_s.s,
                       center.t + sigma * amp_c * ch * axis_c.t + amp_s * sh * axis_s.t});
    }
    return pts;
}

} // namespace

std::vector<MinkVec4> sample_orbit_lifted(const MinkowskiOrbitParams& p, int n,
                                          double range_cap)
{
    if (n < 3)
        throw MiczError(ErrorCode::InvalidArgument, "sample_orbit: n >= 3 required");
    require_valid(p);

    const PlaneFrame frame = plane_frame(p);
    const PlaneQuadric q = make_quadric(frame);
    const double cap = range_cap > 0.0 ? range_cap : kRangeCapScale / p.a.x0;

    std::vector<Coord2> pts;
    switch (classify(p)) {
    case OrbitClass::Elliptic: pts = sample_ellipse(q, n); break;
    case OrbitClass::Parabolic: pts = sample_parabola(q, p.a, n, cap); break;
    case OrbitClass::Hyperbolic: pts = sample_hyperbola(q, n, cap); break;
    }

    // Traverse so that the curve bends toward +90 degrees of its tangent in the
    // oriented (w1, w2) coordinates; with the frame's pullback orientation this
    // is the traversal direction of the oriented orbit.
    const std::size_t mid = pts.size() / 2;
    const Coord2 d1{pts[mid].s - pts[mid - 1].s, pts[mid].t - pts[mid - 1].t};
    const Coord2 d2{pts[mid + 1].s - pts[mid].s, pts[mid + 1].t - pts[mid].t};
    if (det2(d1, d2) < 0.0)
        std::reverse(pts.begin(), pts.end());

    std::vector<MinkVec4> out;
    out.reserve(pts.size());
    for (const auto& c : pts)
        out.push_back(q.lift(c));
    return out;
}

std::vector<Vec3> sample_orbit(const MinkowskiOrbitParams& p, int n, double range_cap)
{
    const auto lifted = sample_orbit_lifted(p, n, range_cap);
    std::vector<Vec3> out;
    out.reserve(lifted.size());
    for (const auto& x : lifted)
        out.push_back(x.spatial());
    return out;
}

} // namespace micz
