#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "airswarm/guidance.hpp"
#include "airswarm/vec3.hpp"
#include "airswarm/vehicle.hpp"

namespace airswarm {

struct Waypoint {
    Vec3 position;               // NED m (down component ignored for arrival)
    bool hover{false};
    double hover_radius_m{20.0};  // arrival radius; hover circle when hover
    double hover_duration_s{0.0};
};

enum class TargetKind { ScriptedPolyline, SeededRandomWalk };

/// Moving ground target description. Scripted targets run the given polyline
/// at constant speed; random-walk targets hold a constant speed while their
/// heading follows a bounded random turn-rate process resampled on a fixed
/// interval (an integer multiple of the simulation step, so sampled speeds
/// are exact).
struct TargetModel {
    TargetKind kind{TargetKind::ScriptedPolyline};
    double speed_mps{0.0};
    Vec3 start;
    std::vector<Vec3> waypoints;        // scripted polyline vertices
    double max_turn_rate_radps{0.3};    // random walk
    double resample_interval_s{1.0};    // random walk
    double initial_heading_rad{0.0};    // random walk
};

/// Precomputed deterministic target trajectory over [0, duration].
class TargetPath {
public:
    TargetPath(const TargetModel& model, std::uint64_t seed, double duration_s);

    Vec3 position_at(double t_s) const;

private:
    std::vector<double> times_s_;
    std::vector<Vec3> points_;
};

struct MissionState {
    std::size_t waypoint_index{0};
    double hover_timer_s{0.0};
    bool complete{false};
};

/// Waypoint bookkeeping for one tick. Inside the arrival radius a plain
/// waypoint advances immediately; a hover waypoint advances once the
/// cumulative in-radius time reaches its hover duration.
MissionState advance_waypoint(MissionState mission, const Vec3& reference_position,
                              std::span<const Waypoint> waypoints, double dt_s);

enum class Approach { Formation, Boids, Rpso };

/// Where an airship should be heading this tick.
struct GoalSpec {
    Vec3 position;
    double heading_rad{0.0};
    bool fictional_member{false};  // Boids: goal joins the swarm as a member
};

/// Resolves the per-airship goal: formation followers chase their slot point
/// on their leader, everyone else chases the mission goal (waypoint or
/// target), which for Boids acts as a fictional swarm member.
GoalSpec goal_for(Approach approach, int airship_id,
                  std::span<const std::optional<FormationSlot>> slots,
                  std::span<const AirshipState> airships, const Vec3& mission_goal);

}  // namespace airswarm
