#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "airswarm/rng.hpp"
#include "airswarm/vec3.hpp"

namespace airswarm {

/// One robot-particle: kinematic state plus its personal best record.
struct ParticleState {
    Vec3 position;       // m
    Vec3 velocity;       // m/s
    Vec3 best_position;  // personal best p_pb
    double best_fitness{0.0};
    int id{0};
};

/// Velocity-update weights (per axis) and fitness shape parameters. The
/// fitness is maximised: both objectives are Gaussians peaking at zero
/// entropy and zero target distance.
struct RpsoParams {
    Vec3 a{0.7, 0.7, 0.7};
    Vec3 b1{1.4, 1.4, 1.4};
    Vec3 b2{1.4, 1.4, 1.4};
    Vec3 b3{1.0, 1.0, 1.0};
    double k_s{1.0};
    double k_d{1.0};
    double r_s_bits_m{50.0};
    double r_d_m{50.0};
    double collision_threshold_m{10.0};
    double v_max_mps{15.0};
};

/// Euclidean distance to the target point.
double distance_to_target(const Vec3& p_i, const Vec3& p_tar);

/// f = gamma_S^2 + gamma_d^2 with gamma_S = k_S exp(-S^2 / (2 R_S^2)) and
/// gamma_d = k_d exp(-d^2 / (2 R_d^2)).
double fitness(double d_m, double s_bits_m, const RpsoParams& params);

/// Repulsion point p_obs: the robot's position displaced away from the mean
/// offset of robots within the collision threshold. Equals the robot's own
/// position when nothing is in range (so the Eq-37 term vanishes).
Vec3 obstacle_repulsion_point(std::size_t i, std::span<const Vec3> positions,
                              double threshold_m);

/// Velocity update with explicit random coefficients (r1, r2, r3), clamped to
/// v_max.
Vec3 rpso_velocity_update(const ParticleState& particle, const Vec3& p_nb, const Vec3& p_obs,
                          const RpsoParams& params, const std::array<double, 3>& r);

/// Velocity update drawing r1, r2, r3 uniformly from rng in fixed order.
Vec3 rpso_velocity_update(const ParticleState& particle, const Vec3& p_nb, const Vec3& p_obs,
                          const RpsoParams& params, CounterRng& rng);

/// Source of the per-robot, per-step random coefficients of the velocity
/// update. Keying on (robot id, step) keeps the swarm update independent of
/// evaluation order.
class RpsoRandom {
public:
    virtual ~RpsoRandom() = default;
    virtual std::array<double, 3> coefficients(int robot_id, std::uint64_t step) = 0;
};

class SeededRpsoRandom final : public RpsoRandom {
public:
    explicit SeededRpsoRandom(std::uint64_t seed) : root_(seed) {}
    std::array<double, 3> coefficients(int robot_id, std::uint64_t step) override {
        CounterRng rng = root_.stream(static_cast<std::uint64_t>(robot_id)).stream(step);
        return {rng.next_double(), rng.next_double(), rng.next_double()};
    }

private:
    CounterRng root_;
};

/// Pins every coefficient to a fixed value; used by hand-traced tests.
class PinnedRpsoRandom final : public RpsoRandom {
public:
    explicit PinnedRpsoRandom(double value = 1.0) : value_(value) {}
    std::array<double, 3> coefficients(int, std::uint64_t) override {
        return {value_, value_, value_};
    }

private:
    double value_;
};

/// One synchronous swarm step against a (possibly moving) target:
/// re-score every personal best in the current environment, refresh personal
/// bests from the current fitness, pick the swarm-wide neighbourhood best
/// (ties to the lowest robot id), update velocities and advance positions.
std::vector<ParticleState> rpso_step(std::span<const ParticleState> swarm, const Vec3& target,
                                     const RpsoParams& params, RpsoRandom& random,
                                     std::uint64_t step, double dt_s);

}  // namespace airswarm
