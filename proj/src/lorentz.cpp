#include "micz/lorentz.hpp"

#include <algorithm>
#include <cmath>

#include "micz/rng.hpp"

namespace micz {

LorentzTransform LorentzTransform::identity()
{
    LorentzTransform t;
    for (int i = 0; i < 4; ++i)
        t.m[i][i] = 1.0;
    return t;
}

MinkVec4 LorentzTransform::apply(const MinkVec4& x) const
{
    const double in[4] = {x.x0, x.x1, x.x2, x.x3};
    double out[4] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out[i] += m[i][j] * in[j];
    return {out[0], out[1], out[2], out[3]};
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& rhs) const
{
    LorentzTransform t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k)
                acc += m[i][k] * rhs.m[k][j];
            t.m[i][j] = acc;
        }
    return t;
}

namespace {

double det3(double a, double b, double c, double d, double e, double f, double g,
            double h, double i)
{
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

constexpr double kEta[4] = {1.0, -1.0, -1.0, -1.0};

} // namespace

double det4(const LorentzTransform& t)
{
    const auto& m = t.m;
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) {
        double sub[9];
        int k = 0;
        for (int r = 1; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (c != j)
                    sub[k++] = m[r][c];
        const double minor =
            det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6], sub[7], sub[8]);
        acc += (j % 2 == 0 ? 1.0 : -1.0) * m[0][j] * minor;
    }
    return acc;
}

ValidationReport validate_transform(const LorentzTransform& t)
{
    ValidationReport rep;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!std::isfinite(t.m[i][j])) {
                rep.issues.push_back({"finite entries", 1.0});
                return rep;
            }

    // m^T eta m = eta
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k)
                acc += t.m[k][i] * kEta[k] * t.m[k][j];
            const double want = i == j ? kEta[i] : 0.0;
            worst = std::max(worst, std::abs(acc - want));
        }
    if (worst > kTransformTol)
        rep.issues.push_back({"m^T eta m = eta", worst});

    if (t.m[0][0] < 1.0 - kTransformTol)
        rep.issues.push_back({"orthochronous m[0][0] >= 1", 1.0 - t.m[0][0]});

    const double dev = std::abs(std::abs(det4(t)) - 1.0);
    if (dev > kTransformTol)
        rep.issues.push_back({"det = +-1", dev});
    return rep;
}

void require_valid(const LorentzTransform& t)
{
    const auto rep = validate_transform(t);
    if (!rep.ok())
        throw MiczError(ErrorCode::InvalidParams, "invalid Lorentz transform: " + rep.describe());
}

void require_valid(const OrientedSymmetry& g)
{
    if (!(g.lambda > 0.0) || !std::isfinite(g.lambda))
        throw MiczError(ErrorCode::InvalidParams, "invalid symmetry: lambda must be > 0");
    require_valid(g.Lam);
}

namespace {

void require_unit(const Vec3& v, const char* who)
{
    if (std::abs(norm3(v) - 1.0) > 1e-12)
        throw MiczError(ErrorCode::NonUnitDirection, std::string(who) + ": |dir| != 1");
}

// spatial 3x3 block written into the x0-fixing embedding
LorentzTransform embed_spatial(const double r[3][3])
{
    LorentzTransform t;
    t.m[0][0] = 1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t.m[i + 1][j + 1] = r[i][j];
    return t;
}

// proper rotation taking unit u to unit v; deterministic pi-rotation fallback
// when they are anti-parallel
LorentzTransform rotation_from_to(const Vec3& u, const Vec3& v);

} // namespace

LorentzTransform boost(const Vec3& dir, double rapidity)
{
    require_unit(dir, "boost");
    const double ch = std::cosh(rapidity);
    const double sh = std::sinh(rapidity);
    const double n[3] = {dir.x, dir.y, dir.z};
    LorentzTransform t;
    t.m[0][0] = ch;
    for (int i = 0; i < 3; ++i) {
        t.m[0][i + 1] = sh * n[i];
        t.m[i + 1][0] = sh * n[i];
        for (int j = 0; j < 3; ++j)
            t.m[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n[i] * n[j];
    }
    return t;
}

LorentzTransform rotation(const Vec3& axis, double angle)
{
    require_unit(axis, "rotation");
    const double c = std::cos(angle), s = std::sin(angle);
    const double n[3] = {axis.x, axis.y, axis.z};
    double r[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = c * (i == j ? 1.0 : 0.0) + (1.0 - c) * n[i] * n[j];
    // + s * cross-product matrix of the axis
    r[0][1] += -s * n[2];
    r[0][2] += s * n[1];
    r[1][0] += s * n[2];
    r[1][2] += -s * n[0];
    r[2][0] += -s * n[1];
    r[2][1] += s * n[0];
    return embed_spatial(r);
}

LorentzTransform spatial_reflection(const Vec3& normal)
{
    require_unit(normal, "spatial_reflection");
    const double n[3] = {normal.x, normal.y, normal.z};
    double r[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = (i == j ? 1.0 : 0.0) - 2.0 * n[i] * n[j];
    return embed_spatial(r);
}

OrientedSymmetry identity_symmetry() { return {}; }

OrientedSymmetry compose(const OrientedSymmetry& g1, const OrientedSymmetry& g2)
{
    return {g1.lambda * g2.lambda, g1.Lam * g2.Lam};
}

OrientedSymmetry inverse(const OrientedSymmetry& g)
{
    LorentzTransform inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            inv.m[i][j] = kEta[i] * g.Lam.m[j][i] * kEta[j];
    return {1.0 / g.lambda, inv};
}

MinkowskiOrbitParams act(const OrientedSymmetry& g, const MinkowskiOrbitParams& p)
{
    MinkowskiOrbitParams out;
    out.a = g.lambda * g.Lam.apply(p.a);
    out.l = g.Lam.apply(p.l);
    if (!(out.a.x0 > 0.0))
        throw MiczError(ErrorCode::SignFlip,
                        "act: image left the future cone (spacelike a only)");
    return out;
}

MinkowskiOrbitParams canonical_elliptic_pair()
{
    return {{1, 0, 0, 0}, {0, 1, 0, 0}};
}

MinkowskiOrbitParams canonical_parabolic_pair()
{
    return {{1, 0, 1, 0}, {0, 1, 0, 0}};
}

namespace {

LorentzTransform rotation_from_to(const Vec3& u, const Vec3& v)
{
    const Vec3 w = cross3(u, v);
    const double s = norm3(w);
    const double c = dot3(u, v);
    if (s < 1e-14) {
        if (c > 0.0)
            return LorentzTransform::identity();
        // anti-parallel: half-turn about a fixed axis orthogonal to u
        Vec3 axis{1, 0, 0};
        if (std::abs(u.x) >= 0.9)
            axis = std::abs(u.y) < 0.9 ? Vec3{0, 1, 0} : Vec3{0, 0, 1};
        Vec3 r = axis - dot3(axis, u) * u;
        r = (1.0 / norm3(r)) * r;
        return rotation(r, 3.14159265358979323846);
    }
    return rotation((1.0 / s) * w, std::atan2(s, c));
}

} // namespace

OrientedSymmetry canonicalize_elliptic(const MinkowskiOrbitParams& p)
{
    require_valid(p);
    const double a2 = mdot(p.a, p.a);
    if (std::abs(a2) <= 10.0 * kClassifyTol)
        throw MiczError(ErrorCode::ClassBoundary,
                        "canonicalize_elliptic: |a^2| too close to the light cone");
    if (classify(p) != OrbitClass::Elliptic)
        throw MiczError(ErrorCode::WrongClass, "canonicalize_elliptic: input not elliptic");

    // (i) boost a into its rest frame; a.l = 0 then forces the image l0 = 0
    const Vec3 as = p.a.spatial();
    const double an = norm3(as);
    LorentzTransform b = LorentzTransform::identity();
    if (an > 0.0)
        b = boost((1.0 / an) * as, -std::atanh(an / p.a.x0));
    const MinkVec4 l1 = b.apply(p.l);

    // (ii) rotate the spatial l onto axis 1
    const Vec3 ls = l1.spatial();
    const LorentzTransform r = rotation_from_to((1.0 / norm3(ls)) * ls, {1, 0, 0});

    const LorentzTransform lam = r * b;
    const double a0 = lam.apply(p.a).x0;
    return {1.0 / a0, lam};
}

OrientedSymmetry canonicalize_parabolic(const MinkowskiOrbitParams& p)
{
    require_valid(p);
    if (classify(p) != OrbitClass::Parabolic)
        throw MiczError(ErrorCode::WrongClass, "canonicalize_parabolic: input not parabolic");

    // (i) boost along spatial l killing l0; legal since l is spacelike
    const Vec3 ls = p.l.spatial();
    const double ln = norm3(ls);
    LorentzTransform b = LorentzTransform::identity();
    if (p.l.x0 != 0.0)
        b = boost((1.0 / ln) * ls, -std::atanh(p.l.x0 / ln));
    const MinkVec4 l1 = b.apply(p.l);
    const MinkVec4 a1 = b.apply(p.a);

    // (ii) rotate l onto axis 1, then about axis 1 so the (null, l-orthogonal)
    // a lands on the axis-2 direction
    const Vec3 l1s = l1.spatial();
    const LorentzTransform r1 = rotation_from_to((1.0 / norm3(l1s)) * l1s, {1, 0, 0});
    const Vec3 a2s = r1.apply(a1).spatial();
    const LorentzTransform r2 = rotation({1, 0, 0}, -std::atan2(a2s.z, a2s.y));

    const LorentzTransform lam = (r2 * r1) * b;
    const double a0 = lam.apply(p.a).x0;
    return {1.0 / a0, lam};
}

OrientedSymmetry canonicalize(const MinkowskiOrbitParams& p)
{
    switch (classify(p)) {
    case OrbitClass::Elliptic: return canonicalize_elliptic(p);
    case OrbitClass::Parabolic: return canonicalize_parabolic(p);
    default:
        throw MiczError(ErrorCode::HyperbolicUnsupported,
                        "canonicalize: no symmetry action on oriented hyperbolic orbits");
    }
}

OrientedSymmetry transport(const MinkowskiOrbitParams& p1, const MinkowskiOrbitParams& p2)
{
    const OrbitClass c1 = classify(p1);
    const OrbitClass c2 = classify(p2);
    if (c1 == OrbitClass::Hyperbolic || c2 == OrbitClass::Hyperbolic)
        throw MiczError(ErrorCode::HyperbolicUnsupported,
                        "transport: no symmetry action on oriented hyperbolic orbits");
    if (c1 != c2)
        throw MiczError(ErrorCode::WrongClass, "transport: class mismatch between endpoints");
    return compose(inverse(canonicalize(p2)), canonicalize(p1));
}

LorentzTransform spacelike_sign_flip_boost(const MinkVec4& a)
{
    if (!(mdot(a, a) < -kClassifyTol))
        throw MiczError(ErrorCode::WrongClass, "sign_flip_boost: a must be spacelike");
    const Vec3 as = a.spatial();
    const double an = norm3(as);
    // rapidity past the flip point artanh(a0/|a_spatial|), with unit margin
    return boost((1.0 / an) * as, -(std::atanh(a.x0 / an) + 1.0));
}

OrientedSymmetry random_element(std::uint64_t seed, double max_rapidity)
{
    if (!(max_rapidity > 0.0))
        throw MiczError(ErrorCode::InvalidArgument, "random_element: max_rapidity > 0");
    Rng rng(seed);
    const Vec3 axis = rng.unit_vec3();
    const double angle = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    const Vec3 bdir = rng.unit_vec3();
    const double chi = rng.uniform(-max_rapidity, max_rapidity);
    const bool reflect = rng.coin();
    const Vec3 rnormal = rng.unit_vec3();
    const double lambda = rng.uniform(0.25, 4.0);

    LorentzTransform t = rotation(axis, angle) * boost(bdir, chi);
    if (reflect)
        t = t * spatial_reflection(rnormal);
    return {lambda, t};
}

double params_distance(const MinkowskiOrbitParams& p, const MinkowskiOrbitParams& q)
{
    const MinkVec4 da = p.a - q.a;
    const MinkVec4 dl = p.l - q.l;
    return std::max({std::abs(da.x0), std::abs(da.x1), std::abs(da.x2), std::abs(da.x3),
                     std::abs(dl.x0), std::abs(dl.x1), std::abs(dl.x2), std::abs(dl.x3)});
}

} // namespace micz
