#pragma once

#include "airswarm/kinematics.hpp"

namespace airswarm {

/// Guidance output: the nonzero components of the airspeed reference vector
/// [u_ref 0 0 0 0 r_ref] handed to the low-level layer.
struct VelocityCommand {
    double u_ref_mps{0.0};
    double r_ref_radps{0.0};

    constexpr bool operator==(const VelocityCommand&) const = default;
};

/// Pseudo-kinematic plant parameters. The surge/yaw lags stand in for the
/// closed inner loop whose design is out of scope here; defaults reflect the
/// sluggish response of a large hull and are fully configurable.
struct VehicleParams {
    double tau_u_s{4.0};      // surge airspeed first-order lag
    double tau_r_s{2.0};      // yaw-rate first-order lag
    double v_max_mps{15.0};   // true-airspeed envelope
    double r_max_radps{0.3};  // yaw-rate limit
    double altitude_m{50.0};  // fixed flight altitude (layered, collision-free)
};

/// Full per-airship simulation state.
struct AirshipState {
    Pose pose;
    BodyVelocity velocity;  // ground-relative, body frame
    VelocityCommand commanded;
    int id{0};
};

/// Advances the plant one step: surge airspeed and yaw rate relax toward the
/// commanded references with first-order lags (saturated to the envelope),
/// lateral airspeed decays so that in steady state sideslip is wind-induced
/// only, ground velocity is airspeed plus wind, and the pose advances by
/// explicit Euler at fixed altitude.
AirshipState step_vehicle(const AirshipState& state, const VelocityCommand& cmd,
                          const WindState& wind, const VehicleParams& params, double dt_s);

/// True airspeed V_t = ||(u_a, v_a, w_a)||.
double true_airspeed(const AirshipState& state, const WindState& wind);

/// Sideslip angle beta = atan2(v_a, u_a) in the horizontal plane.
double sideslip_angle(const AirshipState& state, const WindState& wind);

}  // namespace airswarm
