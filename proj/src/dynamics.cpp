#include "micz/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace micz {

namespace {

void require_off_origin(const Vec3& q, const char* who)
{
    if (norm3(q) == 0.0)
        throw MiczError(ErrorCode::OriginPoint, std::string(who) + ": |q| = 0");
}

} // namespace

Vec3 magnetic_field(const Vec3& q, double mu)
{
    require_off_origin(q, "magnetic_field");
    const double r = norm3(q);
    return (mu / (r * r * r)) * q;
}

Vec3 acceleration(const Vec3& q, const Vec3& v, double mu)
{
    require_off_origin(q, "acceleration");
    const double r = norm3(q);
    const double r2 = r * r;
    const double radial = mu * mu / (r2 * r2) - 1.0 / (r2 * r);
    return -1.0 * cross3(v, magnetic_field(q, mu)) + radial * q;
}

Vec3 angular_momentum(const PhaseState& s)
{
    require_off_origin(s.q, "angular_momentum");
    return cross3(s.q, s.v) + (s.mu / norm3(s.q)) * s.q;
}

Vec3 lenz_vector(const PhaseState& s)
{
    require_off_origin(s.q, "lenz_vector");
    return cross3(angular_momentum(s), s.v) + (1.0 / norm3(s.q)) * s.q;
}

double energy(const PhaseState& s)
{
    require_off_origin(s.q, "energy");
    const double r = norm3(s.q);
    return 0.5 * dot3(s.v, s.v) - 1.0 / r + s.mu * s.mu / (2.0 * r * r);
}

namespace {

struct State6 {
    Vec3 q, v;
};

State6 axpy(const State6& y, double h, const State6& d)
{
    return {y.q + h * d.q, y.v + h * d.v};
}

State6 rhs(const State6& y, double mu)
{
    return {y.v, acceleration(y.q, y.v, mu)};
}

double component(const State6& y, int i)
{
    switch (i) {
    case 0: return y.q.x;
    case 1: return y.q.y;
    case 2: return y.q.z;
    case 3: return y.v.x;
    case 4: return y.v.y;
    default: return y.v.z;
    }
}

// Dormand-Prince 5(4) pair; the last stage equals the next step's first
// (first-same-as-last).
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// fifth-order minus embedded fourth-order weights
constexpr double kE[7] = {71.0 / 57600,      0.0,         -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525,  -1.0 / 40};

double error_norm(const State6& y0, const State6& y1, const State6& err, double atol,
                  double rtol)
{
    double acc = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double sc =
            atol + rtol * std::max(std::abs(component(y0, i)), std::abs(component(y1, i)));
        const double e = component(err, i) / sc;
        acc += e * e;
    }
    return std::sqrt(acc / 6.0);
}

double rms_scaled(const State6& y, const State6& ref, double atol, double rtol)
{
    double acc = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double sc = atol + rtol * std::abs(component(ref, i));
        const double e = component(y, i) / sc;
        acc += e * e;
    }
    return std::sqrt(acc / 6.0);
}

double initial_step(const State6& y0, const State6& f0, double mu, double T, double atol,
                    double rtol)
{
    const double d0 = rms_scaled(y0, y0, atol, rtol);
    const double d1 = rms_scaled(f0, y0, atol, rtol);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, T);
    const State6 y1 = axpy(y0, h0, f0);
    const State6 f1 = rhs(y1, mu);
    const State6 df{f1.q - f0.q, f1.v - f0.v};
    const double d2 = rms_scaled(df, y0, atol, rtol) / h0;
    double h1;
    if (std::max(d1, d2) <= 1e-15)
        h1 = std::max(1e-6, h0 * 1e-3);
    else
        h1 = std::pow(0.01 / std::max(d1, d2), 0.2);
    return std::min({100.0 * h0, h1, T});
}

} // namespace

Trajectory integrate(const PhaseState& s0, double T, const IntegratorConfig& cfg)
{
    if (!(T > 0.0))
        throw MiczError(ErrorCode::InvalidArgument, "integrate: T > 0 required");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw MiczError(ErrorCode::InvalidParams, "integrate: tolerances must be positive");
    require_off_origin(s0.q, "integrate");
    if (!all_finite(s0.q) || !all_finite(s0.v) || !std::isfinite(s0.mu))
        throw MiczError(ErrorCode::InvalidParams, "integrate: non-finite initial state");

    const double collision_r = std::sqrt(cfg.abs_tol);
    const double t_end = s0.t + T;
    const bool adaptive = cfg.fixed_step <= 0.0;

    Trajectory tr;
    tr.config_echo = cfg;
    tr.samples.push_back(s0);

    State6 y{s0.q, s0.v};
    double t = s0.t;
    State6 k[7];
    k[0] = rhs(y, s0.mu);

    double h = adaptive ? initial_step(y, k[0], s0.mu, T, cfg.abs_tol, cfg.rel_tol)
                        : std::min(cfg.fixed_step, T);
    if (cfg.max_step > 0.0)
        h = std::min(h, cfg.max_step);

    long attempts = 0;
    while (t < t_end) {
        if (++attempts > cfg.max_steps)
            throw MiczError(ErrorCode::StepLimitExceeded,
                            "integrate: step budget exhausted");
        bool last = false;
        if (t + h >= t_end) {
            h = t_end - t;
            last = true;
        }

        for (int i = 1; i < 7; ++i) {
            State6 yi = y;
            for (int j = 0; j < i; ++j)
                yi = axpy(yi, h * kA[i][j], k[j]);
            k[i] = rhs(yi, s0.mu);
        }
        // stage 7 is evaluated at the fifth-order solution itself
        State6 y1 = y;
        for (int j = 0; j < 6; ++j)
            y1 = axpy(y1, h * kA[6][j], k[j]);

        if (adaptive) {
            State6 err{{0, 0, 0}, {0, 0, 0}};
            for (int j = 0; j < 7; ++j)
                err = axpy(err, h * kE[j], k[j]);
            const double en = error_norm(y, y1, err, cfg.abs_tol, cfg.rel_tol);
            double fac = 0.9 * std::pow(std::max(en, 1e-16), -0.2);
            fac = std::clamp(fac, 0.2, 5.0);
            if (en > 1.0) {
                h *= fac;
                continue; // rejected; k[0] unchanged
            }
            t = last ? t_end : t + h;
            y = y1;
            k[0] = k[6]; // first-same-as-last
            h *= fac;
            if (cfg.max_step > 0.0)
                h = std::min(h, cfg.max_step);
        } else {
            t = last ? t_end : t + h;
            y = y1;
            k[0] = rhs(y, s0.mu);
        }

        if (norm3(y.q) < collision_r)
            throw MiczError(ErrorCode::NearCollision,
                            "integrate: radius fell below sqrt(abs_tol)");
        tr.samples.push_back({t, y.q, y.v, s0.mu});
    }
    return tr;
}

PhaseState synthesize_initial_state(const EuclideanOrbitParams& p)
{
    require_valid(p);
    const double mu = magnetic_charge(p);
    const double L2 = dot3(p.L, p.L);
    const double Ln = std::sqrt(L2);
    const Vec3 Lhat = (1.0 / Ln) * p.L;

    // unit e orthogonal to L in the plane spanned by L and A; fixed-axis plane
    // when that plane is undetermined (L x A = 0)
    Vec3 e;
    const Vec3 a_perp = p.A - dot3(p.A, Lhat) * Lhat;
    const double a_perp_n = norm3(a_perp);
    if (a_perp_n > 0.0) {
        e = (1.0 / a_perp_n) * a_perp;
    } else {
        Vec3 axis{1, 0, 0};
        if (std::abs(Lhat.x) >= 0.9) {
            axis = std::abs(Lhat.y) < 0.9 ? Vec3{0, 1, 0} : Vec3{0, 0, 1};
        }
        const Vec3 r = axis - dot3(axis, Lhat) * Lhat;
        e = (1.0 / norm3(r)) * r;
    }

    // n = (mu/L) Lhat + beta e, |n| = 1; the sign of beta maximizing |A - n|,
    // beta >= 0 on ties
    const double beta_mag = std::sqrt(1.0 - (mu * mu) / L2);
    const double d = dot3(p.A, e);
    const double beta = d > 0.0 ? -beta_mag : beta_mag;
    const Vec3 n = (mu / Ln) * Lhat + beta * e;

    const Vec3 v = (1.0 / L2) * cross3(p.A - n, p.L);
    const double v2 = dot3(v, v);
    const Vec3 q = (1.0 / v2) * cross3(v, p.L - mu * n);
    return {0.0, q, v, mu};
}

DriftReport drift_report(const Trajectory& tr)
{
    if (tr.samples.empty())
        throw MiczError(ErrorCode::InvalidArgument, "drift_report: empty trajectory");
    const Vec3 L0 = angular_momentum(tr.samples.front());
    const Vec3 A0 = lenz_vector(tr.samples.front());
    const double E0 = energy(tr.samples.front());
    DriftReport rep;
    for (const auto& s : tr.samples) {
        rep.max_dL = std::max(rep.max_dL, norm3(angular_momentum(s) - L0));
        rep.max_dA = std::max(rep.max_dA, norm3(lenz_vector(s) - A0));
        rep.max_dE = std::max(rep.max_dE, std::abs(energy(s) - E0));
    }
    return rep;
}

} // namespace micz
