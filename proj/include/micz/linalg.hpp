#pragma once

#include <cmath>

namespace micz {

/// Euclidean 3-vector. Units are dimensionless (mass and coupling normalized to 1).
struct Vec3 {
    double x{}, y{}, z{};
};

inline Vec3 operator+(const Vec3& u, const Vec3& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
inline Vec3 operator-(const Vec3& u, const Vec3& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
inline Vec3 operator-(const Vec3& u) { return {-u.x, -u.y, -u.z}; }
inline Vec3 operator*(double s, const Vec3& u) { return {s * u.x, s * u.y, s * u.z}; }
inline Vec3 operator*(const Vec3& u, double s) { return s * u; }
inline Vec3 operator/(const Vec3& u, double s) { return {u.x / s, u.y / s, u.z / s}; }

inline double dot3(const Vec3& u, const Vec3& v)
{
    return u.x * v.x + u.y * v.y + u.z * v.z;
}

/// Right-handed cross product.
inline Vec3 cross3(const Vec3& u, const Vec3& v)
{
    return {u.y * v.z - u.z * v.y,
            u.z * v.x - u.x * v.z,
            u.x * v.y - u.y * v.x};
}

inline double norm3(const Vec3& u) { return std::sqrt(dot3(u, u)); }

inline bool all_finite(const Vec3& u)
{
    return std::isfinite(u.x) && std::isfinite(u.y) && std::isfinite(u.z);
}

/// Minkowski 4-vector with signature (+,-,-,-): x0 temporal, (x1,x2,x3) spatial.
struct MinkVec4 {
    double x0{}, x1{}, x2{}, x3{};

    Vec3 spatial() const { return {x1, x2, x3}; }
};

inline MinkVec4 make_mink(double x0, const Vec3& xs) { return {x0, xs.x, xs.y, xs.z}; }

inline MinkVec4 operator+(const MinkVec4& u, const MinkVec4& v)
{
    return {u.x0 + v.x0, u.x1 + v.x1, u.x2 + v.x2, u.x3 + v.x3};
}
inline MinkVec4 operator-(const MinkVec4& u, const MinkVec4& v)
{
    return {u.x0 - v.x0, u.x1 - v.x1, u.x2 - v.x2, u.x3 - v.x3};
}
inline MinkVec4 operator-(const MinkVec4& u) { return {-u.x0, -u.x1, -u.x2, -u.x3}; }
inline MinkVec4 operator*(double s, const MinkVec4& u)
{
    return {s * u.x0, s * u.x1, s * u.x2, s * u.x3};
}

/// Lorentz dot product a·b = a0*b0 - 𝐚·𝐛.
inline double mdot(const MinkVec4& u, const MinkVec4& v)
{
    return u.x0 * v.x0 - (u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3);
}

inline bool all_finite(const MinkVec4& u)
{
    return std::isfinite(u.x0) && std::isfinite(u.x1) && std::isfinite(u.x2) && std::isfinite(u.x3);
}

enum class CausalClass {
    TimelikeFuture,
    TimelikePast,
    NullFuture,
    NullPast,
    Spacelike,
    Zero,
};

inline constexpr double kCausalTol = 1e-10;

/// Classify x by the sign of x·x (within tol) and the sign of x0.
/// Zero when every component is at most tol in magnitude.
inline CausalClass causal_class(const MinkVec4& x, double tol = kCausalTol)
{
    if (std::fabs(x.x0) <= tol && std::fabs(x.x1) <= tol && std::fabs(x.x2) <= tol &&
        std::fabs(x.x3) <= tol)
        return CausalClass::Zero;
    const double s = mdot(x, x);
    if (std::fabs(s) <= tol)
        return x.x0 >= 0.0 ? CausalClass::NullFuture : CausalClass::NullPast;
    if (s > 0.0)
        return x.x0 >= 0.0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
    return CausalClass::Spacelike;
}

inline const char* to_string(CausalClass c)
{
    switch (c) {
    case CausalClass::TimelikeFuture: return "TimelikeFuture";
    case CausalClass::TimelikePast: return "TimelikePast";
    case CausalClass::NullFuture: return "NullFuture";
    case CausalClass::NullPast: return "NullPast";
    case CausalClass::Spacelike: return "Spacelike";
    case CausalClass::Zero: return "Zero";
    }
    return "?";
}

} // namespace micz
