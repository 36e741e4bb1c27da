#include "airswarm/guidance.hpp"

#include <algorithm>
#include <cmath>

#include "airswarm/errors.hpp"

namespace airswarm {

bool validate_gains(const GuidanceGains& gains) {
    return gains.k_rho > 0.0 && gains.k_epsilon < 0.0 && gains.k_zeta > gains.k_rho;
}

PolarErrors polar_errors(const Pose& follower, const Vec3& goal_position, double goal_heading_rad,
                         const FormationSlot& slot) {
    const double dn = goal_position.n - follower.position.n;
    const double de = goal_position.e - follower.position.e;
    const double dist = std::hypot(dn, de);
    if (dist < 1e-6) {
        throw BearingUndefinedError("polar_errors: goal and vehicle are coincident");
    }
    const double psi_i = yaw_of(follower);
    PolarErrors out;
    out.rho_m = dist - slot.rho_d_m;
    out.zeta_rad = wrap_pi(-psi_i + std::atan2(de, dn) - slot.zeta_d_rad);
    out.epsilon_rad = wrap_pi(-psi_i - out.zeta_rad + goal_heading_rad);
    return out;
}

VelocityCommand sfkc_command(const PolarErrors& errors, const GuidanceGains& gains,
                             double v_ff_mps, const VehicleParams& limits) {
    if (!validate_gains(gains)) {
        throw ConfigError("sfkc_command: gains violate k_rho > 0, k_epsilon < 0, k_zeta > k_rho");
    }
    VelocityCommand cmd;
    cmd.u_ref_mps = std::clamp(gains.k_rho * errors.rho_m + gains.k_ff * v_ff_mps, 0.0,
                               limits.v_max_mps);
    cmd.r_ref_radps = std::clamp(gains.k_zeta * errors.zeta_rad + gains.k_epsilon * errors.epsilon_rad,
                                 -limits.r_max_radps, limits.r_max_radps);
    return cmd;
}

Mat3 closed_loop_matrix(const GuidanceGains& gains) {
    return {{{-gains.k_rho, 0.0, 0.0},
             {0.0, -(gains.k_zeta - gains.k_rho), -gains.k_epsilon},
             {0.0, -gains.k_rho, 0.0}}};
}

Vec3 follower_goal(const Pose& leader, const FormationSlot& slot) {
    const double psi_j = yaw_of(leader);
    Vec3 goal = leader.position;
    goal.n -= slot.rho_d_m * std::cos(psi_j + slot.zeta_d_rad);
    goal.e -= slot.rho_d_m * std::sin(psi_j + slot.zeta_d_rad);
    return goal;
}

double feedforward_speed(const Vec3& y_ref_now, const Vec3& y_ref_prev, double ts_s) {
    if (!(ts_s > 0.0)) {
        throw ConfigError("feedforward_speed: sampling time must be positive");
    }
    return planar_distance(y_ref_now, y_ref_prev) / ts_s;
}

TrimTable default_trim_table() {
    constexpr std::size_t count = 74;
    constexpr double lo = 0.3;
    constexpr double hi = 15.0;
    TrimTable table;
    table.airspeeds_mps.reserve(count);
    table.gains.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double v = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
        // Slower tracking at low airspeed, where control authority is weakest.
        const double slow = 1.0 - v / hi;
        table.airspeeds_mps.push_back(v);
        table.gains.push_back({1.5 + 1.5 * slow, 0.8 + 0.7 * slow});
    }
    return table;
}

TrimSelection trim_minimization(double u_ref_mps, const TrimTable& table) {
    if (table.airspeeds_mps.empty()) {
        throw ConfigError("trim_minimization: empty trim table");
    }
    if (table.airspeeds_mps.size() != table.gains.size()) {
        throw ConfigError("trim_minimization: airspeed/gain column length mismatch");
    }
    std::size_t best = 0;
    double best_gap = std::abs(u_ref_mps - table.airspeeds_mps[0]);
    for (std::size_t i = 1; i < table.airspeeds_mps.size(); ++i) {
        const double gap = std::abs(u_ref_mps - table.airspeeds_mps[i]);
        if (gap < best_gap) {
            best_gap = gap;
            best = i;
        }
    }
    return {table.gains[best], best};
}

ModeDecision guidance_mode(const Pose& pose, const Vec3& goal, double hover_radius_m,
                           const Vec3& wind_inertial_mps) {
    if (!(hover_radius_m > 0.0)) {
        throw ConfigError("guidance_mode: hover radius must be positive");
    }
    ModeDecision out;
    out.goal_distance_m = planar_distance(pose.position, goal);
    if (out.goal_distance_m > hover_radius_m) {
        out.mode = GuidanceMode::Cruise;
        out.heading_ref_rad =
            std::atan2(goal.e - pose.position.e, goal.n - pose.position.n);
    } else {
        out.mode = GuidanceMode::Hover;
        if (std::hypot(wind_inertial_mps.n, wind_inertial_mps.e) > 1e-9) {
            out.heading_ref_rad = std::atan2(-wind_inertial_mps.e, -wind_inertial_mps.n);
        } else {
            out.heading_ref_rad = yaw_of(pose);  // calm air: hold heading
        }
    }
    return out;
}

}  // namespace airswarm
