#pragma once

#include <cmath>

namespace airswarm {

/// 3-component vector. Components are NED inertial (north, east, down) for
/// positions, velocities and wind; guidance math that works in the body frame
/// maps (n, e, d) onto the body (x, y, z) axes.
struct Vec3 {
    double n{0.0};
    double e{0.0};
    double d{0.0};

    constexpr Vec3 operator+(const Vec3& o) const { return {n + o.n, e + o.e, d + o.d}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {n - o.n, e - o.e, d - o.d}; }
    constexpr Vec3 operator*(double s) const { return {n * s, e * s, d * s}; }
    constexpr Vec3 operator/(double s) const { return {n / s, e / s, d / s}; }
    constexpr Vec3 operator-() const { return {-n, -e, -d}; }
    Vec3& operator+=(const Vec3& o) {
        n += o.n;
        e += o.e;
        d += o.d;
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        n -= o.n;
        e -= o.e;
        d -= o.d;
        return *this;
    }
    constexpr bool operator==(const Vec3&) const = default;

    constexpr double dot(const Vec3& o) const { return n * o.n + e * o.e + d * o.d; }
    double norm() const { return std::sqrt(dot(*this)); }
    /// Norm of the horizontal (north, east) components.
    double planar_norm() const { return std::hypot(n, e); }

    /// Componentwise (Hadamard) product, used by the per-axis swarm weights.
    constexpr Vec3 cwise(const Vec3& o) const { return {n * o.n, e * o.e, d * o.d}; }

    bool finite() const { return std::isfinite(n) && std::isfinite(e) && std::isfinite(d); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double planar_distance(const Vec3& a, const Vec3& b) { return (a - b).planar_norm(); }

/// Scales v down so that its norm does not exceed limit (no-op otherwise).
inline Vec3 clamp_norm(const Vec3& v, double limit) {
    const double m = v.norm();
    if (m <= limit || m == 0.0) return v;
    return v * (limit / m);
}

}  // namespace airswarm
