#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "airswarm/kinematics.hpp"
#include "airswarm/vehicle.hpp"

namespace airswarm {

/// Polar guidance errors: distance error rho, bearing error zeta and
/// goal-heading alignment error epsilon (both wrapped to (-pi, pi]).
struct PolarErrors {
    double rho_m{0.0};
    double zeta_rad{0.0};
    double epsilon_rad{0.0};
};

/// SFKC gain quadruple. Stability requires k_rho > 0, k_epsilon < 0 and
/// k_zeta > k_rho.
struct GuidanceGains {
    double k_rho{0.1};
    double k_zeta{0.4};
    double k_epsilon{-0.01};
    double k_ff{1.0};
};

/// true iff the closed-loop stability inequalities hold strictly.
bool validate_gains(const GuidanceGains& gains);

/// Desired station of a follower relative to its leader: distance rho_d and
/// relative bearing zeta_d (bearing of the leader as seen from the follower,
/// relative to the leader heading).
struct FormationSlot {
    double rho_d_m{0.0};
    double zeta_d_rad{0.0};
    int leader_id{0};
};

/// Polar errors of a vehicle with respect to a goal frame at goal_position
/// with heading goal_heading. Throws BearingUndefinedError when the planar
/// distance is below 1e-6 m; callers hold the previous errors in that case.
PolarErrors polar_errors(const Pose& follower, const Vec3& goal_position, double goal_heading_rad,
                         const FormationSlot& slot);

/// Feedback law u_ref = k_rho rho + k_ff v_ff, r_ref = k_zeta zeta +
/// k_epsilon epsilon, saturated to the vehicle envelope. Throws ConfigError
/// on gains that fail validate_gains.
VelocityCommand sfkc_command(const PolarErrors& errors, const GuidanceGains& gains,
                             double v_ff_mps, const VehicleParams& limits);

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Closed-loop dynamic matrix of the linearised error model.
Mat3 closed_loop_matrix(const GuidanceGains& gains);

/// Equilibrium point sought by a follower: the leader position displaced by
/// rho_d along heading psi_j + zeta_d (down component copied from the leader).
Vec3 follower_goal(const Pose& leader, const FormationSlot& slot);

/// Feedforward speed: planar displacement of the goal point over one sampling
/// interval divided by Ts. Throws ConfigError when Ts <= 0.
double feedforward_speed(const Vec3& y_ref_now, const Vec3& y_ref_prev, double ts_s);

/// Per-trim-point inner-loop tracking lags. The inner controller itself is
/// out of scope; its scheduled effect on the plant is captured by these lags.
struct TrimGains {
    double tau_u_s{4.0};
    double tau_r_s{2.0};

    constexpr bool operator==(const TrimGains&) const = default;
};

/// Gain-scheduling table indexed by trim airspeed (strictly increasing).
struct TrimTable {
    std::vector<double> airspeeds_mps;
    std::vector<TrimGains> gains;
};

/// The stock 74-point table spanning [0.3, 15] m/s.
TrimTable default_trim_table();

struct TrimSelection {
    TrimGains gains;
    std::size_t index{0};
};

/// Selects the gain record whose trim airspeed is closest to u_ref; ties
/// break to the lowest index. Throws ConfigError on an empty or inconsistent
/// table.
TrimSelection trim_minimization(double u_ref_mps, const TrimTable& table);

enum class GuidanceMode { Cruise, Hover };

/// Mode decision for a vehicle chasing a goal point: outside hover_radius the
/// vehicle cruises toward the goal; inside it hovers facing into the wind
/// (holding the current heading in calm air).
struct ModeDecision {
    GuidanceMode mode{GuidanceMode::Cruise};
    double heading_ref_rad{0.0};
    double goal_distance_m{0.0};
};

ModeDecision guidance_mode(const Pose& pose, const Vec3& goal, double hover_radius_m,
                           const Vec3& wind_inertial_mps);

}  // namespace airswarm
