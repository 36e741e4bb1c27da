#include "airswarm/vehicle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace airswarm {

AirshipState step_vehicle(const AirshipState& state, const VelocityCommand& cmd,
                          const WindState& wind, const VehicleParams& params, double dt_s) {
    const double au = std::clamp(dt_s / params.tau_u_s, 0.0, 1.0);
    const double ar = std::clamp(dt_s / params.tau_r_s, 0.0, 1.0);

    double u_a = state.velocity.u - wind.u_w;
    double v_a = state.velocity.v - wind.v_w;

    u_a += au * (cmd.u_ref_mps - u_a);
    v_a += au * (0.0 - v_a);  // no lateral actuation; hull drag kills sideslip

    // Saturate the airspeed envelope. The vertical channel is pinned to the
    // altitude layer, so its airspeed contribution is the vertical wind.
    const double w_a = -wind.w_w;
    const double planar_limit = std::sqrt(std::max(0.0, params.v_max_mps * params.v_max_mps - w_a * w_a));
    u_a = std::clamp(u_a, -planar_limit, planar_limit);
    const double speed_a = std::hypot(u_a, v_a);
    if (speed_a > planar_limit && speed_a > 0.0) {
        const double s = planar_limit / speed_a;
        u_a *= s;
        v_a *= s;
    }

    double r = state.velocity.r + ar * (cmd.r_ref_radps - state.velocity.r);
    r = std::clamp(r, -params.r_max_radps, params.r_max_radps);

    // Ground velocity (body frame) is airspeed plus wind.
    BodyVelocity ground;
    ground.u = u_a + wind.u_w;
    ground.v = v_a + wind.v_w;
    ground.w = 0.0;
    ground.r = r;

    AirshipState out = state;
    out.pose = integrate_pose(state.pose, ground, dt_s);

    // The inertial velocity vector persists through the yaw step; re-express
    // its planar part in the rotated body frame. Using the realized yaw
    // increment keeps this consistent with wind_in_body on the new attitude.
    const double dpsi = wrap_pi(yaw_of(out.pose) - yaw_of(state.pose));
    const double c = std::cos(dpsi);
    const double s = std::sin(dpsi);
    out.velocity.u = ground.u * c + ground.v * s;
    out.velocity.v = -ground.u * s + ground.v * c;
    out.velocity.w = 0.0;
    out.velocity.p = 0.0;
    out.velocity.q = 0.0;
    out.velocity.r = r;
    out.commanded = cmd;

    assert(std::hypot(u_a, v_a, w_a) <= params.v_max_mps + 1e-9);
    assert(std::abs(out.velocity.r) <= params.r_max_radps + 1e-12);
    return out;
}

double true_airspeed(const AirshipState& state, const WindState& wind) {
    return relative_airspeed(state.velocity, wind).speed();
}

double sideslip_angle(const AirshipState& state, const WindState& wind) {
    const BodyVelocity a = relative_airspeed(state.velocity, wind);
    if (a.u == 0.0 && a.v == 0.0) return 0.0;
    return std::atan2(a.v, a.u);
}

}  // namespace airswarm
