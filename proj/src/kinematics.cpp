#include "airswarm/kinematics.hpp"

#include <cmath>

#include "airswarm/errors.hpp"

namespace airswarm {

Quaternion quaternion_rate(const Quaternion& q, const Vec3& omega_radps) {
    if (std::abs(q.norm() - 1.0) > 1e-6) {
        throw InvalidStateError("quaternion_rate: attitude quaternion is not unit length");
    }
    const Quaternion omega_q{0.0, omega_radps.n, omega_radps.e, omega_radps.d};
    const Quaternion qd = multiply(q, omega_q);
    return {0.5 * qd.w, 0.5 * qd.x, 0.5 * qd.y, 0.5 * qd.z};
}

PoseRate pose_rate(const Pose& pose, const BodyVelocity& x) {
    PoseRate rate;
    rate.position = rotate_to_inertial(pose.attitude, x.linear());
    rate.attitude = quaternion_rate(pose.attitude, {x.p, x.q, x.r});
    return rate;
}

Pose integrate_pose(const Pose& pose, const BodyVelocity& x, double dt_s) {
    if (!(dt_s > 0.0) || dt_s > 1.0) {
        throw ConfigError("integrate_pose: dt must lie in (0, 1] s");
    }
    const PoseRate rate = pose_rate(pose, x);
    Pose out;
    out.position = pose.position + rate.position * dt_s;
    out.attitude = Quaternion{pose.attitude.w + rate.attitude.w * dt_s,
                              pose.attitude.x + rate.attitude.x * dt_s,
                              pose.attitude.y + rate.attitude.y * dt_s,
                              pose.attitude.z + rate.attitude.z * dt_s}
                       .normalized();
    return out;
}

BodyVelocity relative_airspeed(const BodyVelocity& x, const WindState& x_w) {
    BodyVelocity a = x;
    a.u -= x_w.u_w;
    a.v -= x_w.v_w;
    a.w -= x_w.w_w;
    return a;
}

double yaw_of(const Pose& pose) { return yaw_of(pose.attitude); }

WindState wind_in_body(const Quaternion& attitude, const Vec3& wind_inertial_mps) {
    const Vec3 b = rotate_to_body(attitude, wind_inertial_mps);
    return {b.n, b.e, b.d};
}

}  // namespace airswarm
