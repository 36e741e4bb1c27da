#include "airswarm/boids.hpp"

#include "airswarm/errors.hpp"

namespace airswarm {

Vec3 repulsion_velocity(std::size_t i, std::span<const Vec3> positions, double d_lim_m) {
    Vec3 sum;
    std::size_t in_range = 1;  // the member itself is always in its own range
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (j == i) continue;
        if ((positions[i] - positions[j]).norm() <= d_lim_m) {
            sum += positions[i] - positions[j];
            ++in_range;
        }
    }
    if (in_range == 1) return {};
    return sum / static_cast<double>(in_range - 1);
}

Vec3 mimic_velocity(std::size_t i, std::span<const Vec3> velocities) {
    if (velocities.size() < 2) {
        throw UndefinedRuleError("mimic_velocity: needs at least two members");
    }
    Vec3 sum;
    for (std::size_t j = 0; j < velocities.size(); ++j) {
        if (j != i) sum += velocities[j];
    }
    return sum / static_cast<double>(velocities.size() - 1);
}

Vec3 attraction_velocity(std::size_t i, std::span<const Vec3> positions) {
    if (positions.size() < 2) {
        throw UndefinedRuleError("attraction_velocity: needs at least two members");
    }
    Vec3 sum;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (j != i) sum += positions[j];
    }
    return -positions[i] + sum / static_cast<double>(positions.size() - 1);
}

namespace {

Vec3 blend(const Vec3& previous, const Vec3& v_r, const Vec3& v_m, const Vec3& v_a,
           const BoidsParams& p) {
    const Vec3 rules = p.k_r * v_r + p.k_m * v_m + p.k_a * v_a;
    return clamp_norm(p.delta * previous + (1.0 - p.delta) * rules, p.v_max_mps);
}

}  // namespace

Vec3 boids_update(std::size_t i, std::span<const BoidState> states, const BoidsParams& params) {
    std::vector<Vec3> positions(states.size());
    std::vector<Vec3> velocities(states.size());
    for (std::size_t j = 0; j < states.size(); ++j) {
        positions[j] = states[j].position;
        velocities[j] = states[j].velocity;
    }
    const Vec3 v_r = repulsion_velocity(i, positions, params.d_lim_m);
    const Vec3 v_m = mimic_velocity(i, velocities);
    const Vec3 v_a = attraction_velocity(i, positions);
    return blend(states[i].velocity, v_r, v_m, v_a, params);
}

std::vector<BoidState> boids_step_swarm(std::span<const BoidState> states,
                                        const BoidsParams& params,
                                        const std::optional<Vec3>& waypoint, double dt_s) {
    const std::size_t n = states.size();
    if (n < 2) {
        throw UndefinedRuleError("boids_step_swarm: needs at least two real members");
    }
    // Repulsion/attraction see the fictional waypoint member; mimicking only
    // sees the real members.
    std::vector<Vec3> positions;
    positions.reserve(n + 1);
    std::vector<Vec3> velocities(n);
    for (std::size_t j = 0; j < n; ++j) {
        positions.push_back(states[j].position);
        velocities[j] = states[j].velocity;
    }
    if (waypoint) positions.push_back(*waypoint);

    std::vector<BoidState> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 v_r = repulsion_velocity(i, positions, params.d_lim_m);
        const Vec3 v_m = mimic_velocity(i, velocities);
        const Vec3 v_a = attraction_velocity(i, positions);
        out[i].velocity = blend(states[i].velocity, v_r, v_m, v_a, params);
        out[i].position = states[i].position + out[i].velocity * dt_s;
    }
    return out;
}

}  // namespace airswarm
