#pragma once

#include "airswarm/quaternion.hpp"
#include "airswarm/vec3.hpp"

namespace airswarm {

/// 7-component pose: NED position plus unit-quaternion attitude.
struct Pose {
    Vec3 position;         // m, NED
    Quaternion attitude;   // body-to-inertial

    bool finite() const { return position.finite() && attitude.finite(); }
};

/// Body-frame rates: linear (u, v, w) m/s and angular (p, q, r) rad/s.
struct BodyVelocity {
    double u{0.0};
    double v{0.0};
    double w{0.0};
    double p{0.0};
    double q{0.0};
    double r{0.0};

    constexpr bool operator==(const BodyVelocity&) const = default;
    Vec3 linear() const { return {u, v, w}; }
    double speed() const { return linear().norm(); }
};

/// Constant wind expressed in the body frame (angular components are zero by
/// definition, so only the linear part is stored).
struct WindState {
    double u_w{0.0};
    double v_w{0.0};
    double w_w{0.0};
};

/// Derivative of a Pose: position rate in NED and raw quaternion rate.
struct PoseRate {
    Vec3 position;        // m/s, NED
    Quaternion attitude;  // 1/s, not a unit quaternion
};

/// Quaternion kinematics q_dot = 1/2 q (x) (0, omega) for body rates omega
/// (components of the Vec3 are the body x, y, z rates).
/// Throws InvalidStateError when ||q|| deviates from 1 by more than 1e-6.
Quaternion quaternion_rate(const Quaternion& q, const Vec3& omega_radps);

/// Pose derivative: NED position rate is the body linear velocity rotated to
/// the inertial frame, attitude rate is quaternion_rate.
PoseRate pose_rate(const Pose& pose, const BodyVelocity& x);

/// Explicit Euler step on position and quaternion followed by quaternion
/// renormalization. dt must lie in (0, 1] s.
Pose integrate_pose(const Pose& pose, const BodyVelocity& x, double dt_s);

/// Relative airspeed x_a = x - x_w; angular components pass through unchanged.
BodyVelocity relative_airspeed(const BodyVelocity& x, const WindState& x_w);

/// Euler yaw of the pose in (-pi, pi].
double yaw_of(const Pose& pose);

/// Rotates an inertial-frame constant wind vector into the body frame.
WindState wind_in_body(const Quaternion& attitude, const Vec3& wind_inertial_mps);

}  // namespace airswarm
