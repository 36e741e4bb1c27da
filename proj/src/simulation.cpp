#include "airswarm/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "airswarm/entropy.hpp"
#include "airswarm/errors.hpp"

namespace airswarm {

namespace {

Vec3 planar(const Vec3& v) { return {v.n, v.e, 0.0}; }

Vec3 centroid(const std::vector<AirshipState>& ships) {
    Vec3 c;
    for (const AirshipState& s : ships) c += planar(s.pose.position);
    return c / static_cast<double>(ships.size());
}

struct TickCommand {
    VelocityCommand cmd;
    GuidanceMode mode{GuidanceMode::Cruise};
    double goal_dist_m{0.0};
};

/// Heading P-controller used by the swarm approaches to chase a velocity
/// reference with the (u_ref, r_ref) plant interface.
VelocityCommand track_velocity(const Vec3& v_ref, const Pose& pose, const GuidanceGains& gains,
                               const VehicleParams& limits) {
    VelocityCommand cmd;
    const double speed = v_ref.planar_norm();
    cmd.u_ref_mps = std::clamp(speed, 0.0, limits.v_max_mps);
    if (speed > 1e-9) {
        const double heading = std::atan2(v_ref.e, v_ref.n);
        cmd.r_ref_radps = std::clamp(gains.k_zeta * wrap_pi(heading - yaw_of(pose)),
                                     -limits.r_max_radps, limits.r_max_radps);
    }
    return cmd;
}

class Simulator {
public:
    Simulator(const Scenario& sc, std::uint64_t seed)
        : sc_(sc), rpso_random_(seed) {
        const std::size_t n = sc.airships.size();
        ships_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& init = sc.airships[i];
            ships_[i].pose.position = {init.north_m, init.east_m, init.down_m};
            ships_[i].pose.attitude = quaternion_from_yaw(init.yaw_rad);
            ships_[i].id = static_cast<int>(i);
            slots_.push_back(init.slot);
        }
        prev_errors_.resize(n);
        has_prev_errors_.assign(n, false);
        boids_ref_vel_.assign(n, Vec3{});
        particles_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            particles_[i].position = planar(ships_[i].pose.position);
            particles_[i].best_position = particles_[i].position;
            particles_[i].id = static_cast<int>(i);
        }
        if (sc.target) target_.emplace(*sc.target, seed, sc.duration_s);
    }

    Trace run() {
        Trace trace;
        trace.airship_count = ships_.size();
        const auto steps = static_cast<std::size_t>(std::llround(sc_.duration_s / sc_.dt_s));
        trace.records.reserve(steps + 1);
        for (std::size_t k = 0; k <= steps; ++k) {
            const double t = static_cast<double>(k) * sc_.dt_s;
            const Vec3 goal = mission_goal(t);
            const std::vector<TickCommand> commands = plan_tick(goal, k);
            trace.records.push_back(log_record(t, goal, commands));
            if (k == steps) break;
            apply_tick(commands, k);
        }
        return trace;
    }

private:
    Vec3 mission_goal(double t) const {
        if (target_) return target_->position_at(t);
        const std::size_t idx = std::min(mission_.waypoint_index, sc_.waypoints.size() - 1);
        return sc_.waypoints[idx].position;
    }

    double mission_hover_radius() const {
        if (target_) return sc_.target_hover_radius_m;
        const std::size_t idx = std::min(mission_.waypoint_index, sc_.waypoints.size() - 1);
        return sc_.waypoints[idx].hover_radius_m;
    }

    std::vector<TickCommand> plan_tick(const Vec3& goal, std::size_t step) {
        switch (sc_.approach) {
            case Approach::Formation:
                return plan_formation(goal);
            case Approach::Boids:
                return plan_boids(goal);
            case Approach::Rpso:
                return plan_rpso(goal, step);
        }
        return {};
    }

    std::vector<TickCommand> plan_formation(const Vec3& goal) {
        std::vector<TickCommand> out(ships_.size());
        for (std::size_t i = 0; i < ships_.size(); ++i) {
            out[i] = slots_[i] ? follower_tick(i) : leader_tick(i, goal);
        }
        return out;
    }

    TickCommand leader_tick(std::size_t i, const Vec3& goal) {
        const AirshipState& ship = ships_[i];
        TickCommand out;
        const ModeDecision decision =
            guidance_mode(ship.pose, goal, mission_hover_radius(), sc_.wind_mps);
        out.mode = decision.mode;
        out.goal_dist_m = decision.goal_distance_m;
        if (decision.mode == GuidanceMode::Cruise) {
            const PolarErrors errors =
                errors_or_previous(i, ship.pose, goal, decision.heading_ref_rad, {});
            out.cmd = sfkc_command(errors, sc_.gains, 0.0, sc_.vehicle);
            if (target_) {
                // Walk-stop-walk: chase the target at constant airspeed.
                out.cmd.u_ref_mps = std::clamp(sc_.cruise_airspeed_mps, 0.0, sc_.vehicle.v_max_mps);
            } else {
                // Waypoint transit runs at the constant cruise airspeed; the
                // SFKC ramp takes over on final approach.
                out.cmd.u_ref_mps = std::min(out.cmd.u_ref_mps, sc_.cruise_airspeed_mps);
            }
        } else {
            out.cmd.u_ref_mps = 0.0;
            out.cmd.r_ref_radps =
                std::clamp(sc_.gains.k_zeta * wrap_pi(decision.heading_ref_rad - yaw_of(ship.pose)),
                           -sc_.vehicle.r_max_radps, sc_.vehicle.r_max_radps);
        }
        return out;
    }

    TickCommand follower_tick(std::size_t i) {
        const AirshipState& ship = ships_[i];
        const FormationSlot& slot = *slots_[i];
        const AirshipState& leader = ships_[static_cast<std::size_t>(slot.leader_id)];
        const Vec3 slot_point = follower_goal(leader.pose, slot);

        // Feedforward: the velocity reference is the leader's true airspeed.
        // Matching airspeed (not slot-point ground speed) keeps the ground
        // velocities identical under wind once the headings align.
        const double v_ff =
            true_airspeed(leader, wind_in_body(leader.pose.attitude, sc_.wind_mps));

        TickCommand out;
        out.goal_dist_m = planar_distance(ship.pose.position, slot_point);
        const PolarErrors errors =
            errors_or_previous(i, ship.pose, leader.pose.position, yaw_of(leader.pose), slot);
        out.cmd = sfkc_command(errors, sc_.gains, v_ff, sc_.vehicle);
        // The slot is treated as a hover point of radius 1 m: inside it the
        // follower freezes its rotation command to avoid amplifying the
        // leader's lateral error.
        if (out.goal_dist_m < 1.0) {
            out.cmd.r_ref_radps = 0.0;
            out.mode = GuidanceMode::Hover;
        } else {
            out.mode = GuidanceMode::Cruise;
        }
        return out;
    }

    PolarErrors errors_or_previous(std::size_t i, const Pose& pose, const Vec3& goal,
                                   double goal_heading, const FormationSlot& slot) {
        try {
            const PolarErrors e = polar_errors(pose, goal, goal_heading, slot);
            prev_errors_[i] = e;
            has_prev_errors_[i] = true;
            return e;
        } catch (const BearingUndefinedError&) {
            return has_prev_errors_[i] ? prev_errors_[i] : PolarErrors{};
        }
    }

    std::vector<TickCommand> plan_boids(const Vec3& goal) {
        const std::size_t n = ships_.size();
        std::vector<BoidState> members(n);
        for (std::size_t i = 0; i < n; ++i) {
            members[i].position = planar(ships_[i].pose.position);
            members[i].velocity = boids_ref_vel_[i];
        }
        const std::vector<BoidState> next =
            boids_step_swarm(members, sc_.boids, planar(goal), sc_.dt_s);

        std::vector<TickCommand> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            boids_ref_vel_[i] = next[i].velocity;
            out[i].cmd = track_velocity(next[i].velocity, ships_[i].pose, sc_.gains, sc_.vehicle);
            out[i].mode = GuidanceMode::Cruise;
            out[i].goal_dist_m = planar_distance(ships_[i].pose.position, goal);
        }
        return out;
    }

    std::vector<TickCommand> plan_rpso(const Vec3& goal, std::size_t step) {
        const std::size_t n = ships_.size();
        for (std::size_t i = 0; i < n; ++i) {
            particles_[i].position = planar(ships_[i].pose.position);
        }
        particles_ = rpso_step(particles_, planar(goal), sc_.rpso, rpso_random_, step, sc_.dt_s);

        std::vector<TickCommand> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            out[i].cmd = track_velocity(particles_[i].velocity, ships_[i].pose, sc_.gains,
                                        sc_.vehicle);
            out[i].mode = GuidanceMode::Cruise;
            out[i].goal_dist_m = planar_distance(ships_[i].pose.position, goal);
        }
        return out;
    }

    TraceRecord log_record(double t, const Vec3& goal, const std::vector<TickCommand>& commands) {
        TraceRecord rec;
        rec.t_s = t;
        rec.waypoint_index = static_cast<int>(mission_.waypoint_index);
        std::vector<Vec3> positions(ships_.size());
        for (std::size_t i = 0; i < ships_.size(); ++i) {
            positions[i] = planar(ships_[i].pose.position);
        }
        rec.entropy_bits_m = total_entropy(positions).total_bits_m;
        rec.centre_goal_dist_m = planar_distance(centroid(ships_), goal);
        rec.airships.reserve(ships_.size());
        for (std::size_t i = 0; i < ships_.size(); ++i) {
            const AirshipState& s = ships_[i];
            const WindState wind = wind_in_body(s.pose.attitude, sc_.wind_mps);
            AirshipRecord a;
            a.pn_m = s.pose.position.n;
            a.pe_m = s.pose.position.e;
            a.pd_m = s.pose.position.d;
            a.yaw_rad = yaw_of(s.pose);
            a.u_mps = s.velocity.u;
            a.v_mps = s.velocity.v;
            a.r_radps = s.velocity.r;
            a.u_ref_mps = commands[i].cmd.u_ref_mps;
            a.r_ref_radps = commands[i].cmd.r_ref_radps;
            a.mode = commands[i].mode == GuidanceMode::Hover ? 1 : 0;
            a.beta_rad = sideslip_angle(s, wind);
            a.goal_dist_m = commands[i].goal_dist_m;
            rec.airships.push_back(a);
        }
        return rec;
    }

    void apply_tick(const std::vector<TickCommand>& commands, std::size_t step) {
        for (std::size_t i = 0; i < ships_.size(); ++i) {
            VehicleParams params = sc_.vehicle;
            if (sc_.trim_table) {
                const TrimSelection sel =
                    trim_minimization(commands[i].cmd.u_ref_mps, *sc_.trim_table);
                params.tau_u_s = sel.gains.tau_u_s;
                params.tau_r_s = sel.gains.tau_r_s;
            }
            const WindState wind = wind_in_body(ships_[i].pose.attitude, sc_.wind_mps);
            ships_[i] = step_vehicle(ships_[i], commands[i].cmd, wind, params, sc_.dt_s);
            if (!ships_[i].pose.finite() || !std::isfinite(ships_[i].velocity.u) ||
                !std::isfinite(ships_[i].velocity.v) || !std::isfinite(ships_[i].velocity.r)) {
                throw RunAbortedError(step, "airship " + std::to_string(i) +
                                                " state became non-finite");
            }
        }
        if (!sc_.waypoints.empty()) {
            const Vec3 reference = sc_.approach == Approach::Formation
                                       ? planar(ships_[0].pose.position)
                                       : centroid(ships_);
            mission_ = advance_waypoint(mission_, reference, sc_.waypoints, sc_.dt_s);
        }
    }

    const Scenario& sc_;
    std::vector<AirshipState> ships_;
    std::vector<std::optional<FormationSlot>> slots_;
    MissionState mission_;
    std::optional<TargetPath> target_;

    std::vector<PolarErrors> prev_errors_;
    std::vector<bool> has_prev_errors_;
    std::vector<Vec3> boids_ref_vel_;
    std::vector<ParticleState> particles_;
    SeededRpsoRandom rpso_random_;
};

}  // namespace

Trace run_simulation(const Scenario& scenario, std::optional<std::uint64_t> seed_override) {
    validate_scenario(scenario);
    Simulator sim(scenario, seed_override.value_or(scenario.seed));
    return sim.run();
}

}  // namespace airswarm
