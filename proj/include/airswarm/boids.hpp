#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "airswarm/vec3.hpp"

namespace airswarm {

struct BoidState {
    Vec3 position;  // m, planar NED
    Vec3 velocity;  // m/s
};

/// Flocking weights. delta blends the previous velocity with the rule mix;
/// d_lim is the range below which members repel each other.
struct BoidsParams {
    double delta{0.6};
    double k_r{2.0};
    double k_m{0.5};
    double k_a{0.5};
    double d_lim_m{15.0};
    double v_max_mps{15.0};
};

/// Short-range separation: sum of (p_i - p_j) over neighbours within d_lim,
/// divided by the neighbour count. Returns zero when member i is isolated.
Vec3 repulsion_velocity(std::size_t i, std::span<const Vec3> positions, double d_lim_m);

/// Velocity matching: mean velocity of all other members.
/// Throws UndefinedRuleError for a swarm of one.
Vec3 mimic_velocity(std::size_t i, std::span<const Vec3> velocities);

/// Flock centring: vector from member i to the centroid of the others.
/// Throws UndefinedRuleError for a swarm of one.
Vec3 attraction_velocity(std::size_t i, std::span<const Vec3> positions);

/// Weighted-average velocity update for member i, clamped to v_max.
Vec3 boids_update(std::size_t i, std::span<const BoidState> states, const BoidsParams& params);

/// Synchronous full-swarm step: every velocity is computed from the previous
/// tick's states, then positions advance by v * dt. When a waypoint is given
/// it joins the attraction and repulsion sums as a zero-velocity fictional
/// member (not the mimicking sum, which would brake the flock).
std::vector<BoidState> boids_step_swarm(std::span<const BoidState> states,
                                        const BoidsParams& params,
                                        const std::optional<Vec3>& waypoint, double dt_s);

}  // namespace airswarm
