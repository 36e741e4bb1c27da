#pragma once

#include <cmath>
#include <numbers>

#include "airswarm/vec3.hpp"

namespace airswarm {

/// Wraps an angle to (-pi, pi].
inline double wrap_pi(double angle_rad) {
    const double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(angle_rad, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    if (a > std::numbers::pi) a -= two_pi;
    return a;
}

/// Unit quaternion attitude (scalar-first). Encodes the body-to-inertial
/// rotation: rotate_to_inertial(q, v_body) = R(q) v_body.
struct Quaternion {
    double w{1.0};
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr bool operator==(const Quaternion&) const = default;

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    Quaternion normalized() const {
        const double m = norm();
        return {w / m, x / m, y / m, z / m};
    }

    constexpr Quaternion conjugate() const { return {w, -x, -y, -z}; }

    bool finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

/// Hamilton product a * b.
constexpr Quaternion multiply(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

/// Attitude quaternion for a pure yaw rotation about the down axis.
inline Quaternion quaternion_from_yaw(double yaw_rad) {
    return {std::cos(0.5 * yaw_rad), 0.0, 0.0, std::sin(0.5 * yaw_rad)};
}

/// Rotates a body-frame vector into the inertial (NED) frame.
inline Vec3 rotate_to_inertial(const Quaternion& q, const Vec3& v) {
    const Quaternion p{0.0, v.n, v.e, v.d};
    const Quaternion r = multiply(multiply(q, p), q.conjugate());
    return {r.x, r.y, r.z};
}

/// Rotates an inertial (NED) vector into the body frame.
inline Vec3 rotate_to_body(const Quaternion& q, const Vec3& v) {
    return rotate_to_inertial(q.conjugate(), v);
}

/// Euler yaw extracted from the attitude quaternion, in (-pi, pi].
inline double yaw_of(const Quaternion& q) {
    return wrap_pi(std::atan2(2.0 * (q.w * q.z + q.x * q.y), 1.0 - 2.0 * (q.y * q.y + q.z * q.z)));
}

}  // namespace airswarm
