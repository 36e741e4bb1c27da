#include "airswarm/rpso.hpp"

#include <cmath>

#include "airswarm/entropy.hpp"
#include "airswarm/errors.hpp"

namespace airswarm {

double distance_to_target(const Vec3& p_i, const Vec3& p_tar) { return (p_i - p_tar).norm(); }

double fitness(double d_m, double s_bits_m, const RpsoParams& params) {
    const double gamma_s =
        params.k_s * std::exp(-(s_bits_m * s_bits_m) / (2.0 * params.r_s_bits_m * params.r_s_bits_m));
    const double gamma_d =
        params.k_d * std::exp(-(d_m * d_m) / (2.0 * params.r_d_m * params.r_d_m));
    return gamma_s * gamma_s + gamma_d * gamma_d;
}

Vec3 obstacle_repulsion_point(std::size_t i, std::span<const Vec3> positions,
                              double threshold_m) {
    if (!(threshold_m > 0.0)) {
        throw ConfigError("obstacle_repulsion_point: threshold must be positive");
    }
    Vec3 sum;
    std::size_t count = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (j == i) continue;
        if ((positions[i] - positions[j]).norm() <= threshold_m) {
            sum += positions[i] - positions[j];
            ++count;
        }
    }
    if (count == 0) return positions[i];
    return positions[i] + sum / static_cast<double>(count);
}

Vec3 rpso_velocity_update(const ParticleState& particle, const Vec3& p_nb, const Vec3& p_obs,
                          const RpsoParams& params, const std::array<double, 3>& r) {
    const Vec3 v = params.a.cwise(particle.velocity) +
                   r[0] * params.b1.cwise(particle.best_position - particle.position) +
                   r[1] * params.b2.cwise(p_nb - particle.position) +
                   r[2] * params.b3.cwise(p_obs - particle.position);
    return clamp_norm(v, params.v_max_mps);
}

Vec3 rpso_velocity_update(const ParticleState& particle, const Vec3& p_nb, const Vec3& p_obs,
                          const RpsoParams& params, CounterRng& rng) {
    const std::array<double, 3> r{rng.next_double(), rng.next_double(), rng.next_double()};
    return rpso_velocity_update(particle, p_nb, p_obs, params, r);
}

std::vector<ParticleState> rpso_step(std::span<const ParticleState> swarm, const Vec3& target,
                                     const RpsoParams& params, RpsoRandom& random,
                                     std::uint64_t step, double dt_s) {
    const std::size_t n = swarm.size();
    if (n < 2) {
        throw UndefinedRuleError("rpso_step: needs at least two robots");
    }

    std::vector<Vec3> positions(n);
    for (std::size_t i = 0; i < n; ++i) positions[i] = swarm[i].position;
    const double s_current = total_entropy(positions).total_bits_m;

    std::vector<ParticleState> out(swarm.begin(), swarm.end());
    for (std::size_t i = 0; i < n; ++i) {
        // Dynamic environment: the stored best is re-scored with the robot
        // hypothetically back at that position and everyone else where they
        // are now.
        std::vector<Vec3> hypothetical = positions;
        hypothetical[i] = swarm[i].best_position;
        const double s_best = total_entropy(hypothetical).total_bits_m;
        const double f_best =
            fitness(distance_to_target(swarm[i].best_position, target), s_best, params);
        const double f_now =
            fitness(distance_to_target(swarm[i].position, target), s_current, params);
        if (f_now >= f_best) {
            out[i].best_position = swarm[i].position;
            out[i].best_fitness = f_now;
        } else {
            out[i].best_fitness = f_best;
        }
    }

    // Global neighbourhood: the best personal best across the swarm, ties to
    // the lowest robot id.
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const bool better = out[i].best_fitness > out[best].best_fitness ||
                            (out[i].best_fitness == out[best].best_fitness &&
                             out[i].id < out[best].id);
        if (better) best = i;
    }
    const Vec3 p_nb = out[best].best_position;

    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 p_obs = obstacle_repulsion_point(i, positions, params.collision_threshold_m);
        const std::array<double, 3> r = random.coefficients(out[i].id, step);
        out[i].velocity = rpso_velocity_update(out[i], p_nb, p_obs, params, r);
        out[i].position = swarm[i].position + out[i].velocity * dt_s;
    }
    return out;
}

}  // namespace airswarm
