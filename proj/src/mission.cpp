#include "airswarm/mission.hpp"

#include <algorithm>
#include <cmath>

#include "airswarm/errors.hpp"
#include "airswarm/rng.hpp"

namespace airswarm {

TargetPath::TargetPath(const TargetModel& model, std::uint64_t seed, double duration_s) {
    times_s_.push_back(0.0);
    points_.push_back(model.start);
    if (model.speed_mps <= 0.0) return;

    if (model.kind == TargetKind::ScriptedPolyline) {
        double t = 0.0;
        Vec3 at = model.start;
        for (const Vec3& wp : model.waypoints) {
            const double leg = planar_distance(at, wp);
            if (leg <= 0.0) continue;
            t += leg / model.speed_mps;
            times_s_.push_back(t);
            points_.push_back(wp);
            at = wp;
        }
        return;
    }

    // Seeded random walk: constant speed, heading held over each resample
    // interval, turn rate drawn per interval from its own substream.
    if (!(model.resample_interval_s > 0.0)) {
        throw ConfigError("target.resample_interval_s must be positive");
    }
    const CounterRng root = CounterRng(seed).stream(0x7461726774ULL);  // "targt"
    double heading = model.initial_heading_rad;
    Vec3 at = model.start;
    double t = 0.0;
    std::uint64_t segment = 0;
    while (t < duration_s) {
        CounterRng rng = root.stream(segment);
        const double turn =
            rng.next_double(-model.max_turn_rate_radps, model.max_turn_rate_radps);
        const double dt = model.resample_interval_s;
        at += Vec3{std::cos(heading), std::sin(heading), 0.0} * (model.speed_mps * dt);
        t += dt;
        times_s_.push_back(t);
        points_.push_back(at);
        heading = wrap_pi(heading + turn * dt);
        ++segment;
    }
}

Vec3 TargetPath::position_at(double t_s) const {
    if (t_s <= times_s_.front()) return points_.front();
    if (t_s >= times_s_.back()) return points_.back();
    const auto it = std::upper_bound(times_s_.begin(), times_s_.end(), t_s);
    const std::size_t k = static_cast<std::size_t>(it - times_s_.begin());
    const double t0 = times_s_[k - 1];
    const double t1 = times_s_[k];
    const double alpha = (t_s - t0) / (t1 - t0);
    return points_[k - 1] + (points_[k] - points_[k - 1]) * alpha;
}

MissionState advance_waypoint(MissionState mission, const Vec3& reference_position,
                              std::span<const Waypoint> waypoints, double dt_s) {
    if (waypoints.empty()) {
        throw ConfigError("advance_waypoint: waypoint list is empty");
    }
    if (mission.complete) return mission;

    const Waypoint& wp = waypoints[mission.waypoint_index];
    const double dist = planar_distance(reference_position, wp.position);
    if (dist > wp.hover_radius_m) return mission;

    if (wp.hover) {
        mission.hover_timer_s += dt_s;
        if (mission.hover_timer_s < wp.hover_duration_s) return mission;
    }
    mission.hover_timer_s = 0.0;
    ++mission.waypoint_index;
    if (mission.waypoint_index >= waypoints.size()) {
        mission.waypoint_index = waypoints.size();
        mission.complete = true;
    }
    return mission;
}

GoalSpec goal_for(Approach approach, int airship_id,
                  std::span<const std::optional<FormationSlot>> slots,
                  std::span<const AirshipState> airships, const Vec3& mission_goal) {
    GoalSpec goal;
    goal.position = mission_goal;
    if (approach == Approach::Boids) {
        goal.fictional_member = true;
        return goal;
    }
    if (approach == Approach::Rpso) return goal;

    const auto idx = static_cast<std::size_t>(airship_id);
    if (idx < slots.size() && slots[idx].has_value()) {
        const FormationSlot& slot = *slots[idx];
        for (const AirshipState& ship : airships) {
            if (ship.id == slot.leader_id) {
                goal.position = follower_goal(ship.pose, slot);
                goal.heading_rad = yaw_of(ship.pose);
                return goal;
            }
        }
        throw ConfigError("goal_for: slot references an unknown leader id");
    }
    return goal;
}

}  // namespace airswarm
