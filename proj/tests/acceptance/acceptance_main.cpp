// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Numeric eigenvalue checks use Eigen as the generic route; the
// closed-form companion-block roots serve as the independent oracle.

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "airswarm/boids.hpp"
#include "airswarm/entropy.hpp"
#include "airswarm/errors.hpp"
#include "airswarm/guidance.hpp"
#include "airswarm/metrics.hpp"
#include "airswarm/rng.hpp"
#include "airswarm/rpso.hpp"
#include "airswarm/scenario.hpp"
#include "airswarm/simulation.hpp"
#include "airswarm/trace_io.hpp"
#include "airswarm/vehicle.hpp"

namespace fs = std::filesystem;
using namespace airswarm;

namespace {

struct Options {
    std::string cli;
    std::string scenarios;
    std::string work = "acceptance_work";
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string fmt(double v) {
    std::ostringstream oss;
    oss << v;
    return oss.str();
}

// ---------------------------------------------------------------- criterion 1

void stability_property() {
    CounterRng rng(20240001);
    for (int trial = 0; trial < 1000; ++trial) {
        GuidanceGains g;
        g.k_rho = rng.next_double(1e-6, 1.0);
        g.k_zeta = g.k_rho + rng.next_double(1e-6, 2.0 - g.k_rho);
        g.k_epsilon = -rng.next_double(1e-6, 1.0);
        require(validate_gains(g), "valid triple rejected by validate_gains");

        const Mat3 m = closed_loop_matrix(g);
        Eigen::Matrix3d a;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) a(r, c) = m[r][c];
        const Eigen::EigenSolver<Eigen::Matrix3d> solver(a);
        double max_real = -1e300;
        for (int k = 0; k < 3; ++k) max_real = std::max(max_real, solver.eigenvalues()[k].real());
        require(max_real < -1e-9,
                "stable triple has eigenvalue real part " + fmt(max_real));

        // Companion-block oracle must agree on the margin.
        const double b = g.k_zeta - g.k_rho;
        const double c = -g.k_epsilon * g.k_rho;
        const double disc = b * b - 4.0 * c;
        const double oracle_max =
            disc >= 0.0 ? std::max(0.5 * (-b + std::sqrt(disc)), -g.k_rho)
                        : std::max(-0.5 * b, -g.k_rho);
        require(std::abs(oracle_max - max_real) < 1e-7,
                "numeric eigenvalues disagree with the closed-form roots");

        // Break one inequality: either validate_gains rejects it or some
        // eigenvalue moves to a non-negative real part.
        GuidanceGains bad = g;
        switch (trial % 3) {
            case 0: bad.k_rho = -g.k_rho; break;
            case 1: bad.k_zeta = g.k_rho * rng.next_double(0.0, 1.0); break;
            default: bad.k_epsilon = -g.k_epsilon; break;
        }
        if (validate_gains(bad)) throw Failure("violating triple passed validate_gains");
        const Mat3 mb = closed_loop_matrix(bad);
        Eigen::Matrix3d ab;
        for (int r = 0; r < 3; ++r)
            for (int c2 = 0; c2 < 3; ++c2) ab(r, c2) = mb[r][c2];
        const Eigen::EigenSolver<Eigen::Matrix3d> bad_solver(ab);
        double bad_max = -1e300;
        for (int k = 0; k < 3; ++k)
            bad_max = std::max(bad_max, bad_solver.eigenvalues()[k].real());
        require(bad_max >= -1e-12, "violating triple still strictly stable");
    }
}

// ---------------------------------------------------------------- criterion 2

void sfkc_convergence() {
    const GuidanceGains gains;
    const VehicleParams params;
    const WindState calm;
    const Vec3 goal{100.0, 0.0, 0.0};
    AirshipState ship;
    ship.pose.position = {0.0, 0.0, -50.0};

    // Run out to 400 s: the distance must fall below 1 m at some t* <= 300 s
    // and stay there for the rest of the run.
    double last_outside = -1.0;
    for (int k = 0; k <= 4000; ++k) {
        const double dist = planar_distance(ship.pose.position, goal);
        if (dist >= 1.0) last_outside = 0.1 * k;
        PolarErrors pe;
        try {
            pe = polar_errors(ship.pose, goal,
                              std::atan2(goal.e - ship.pose.position.e,
                                         goal.n - ship.pose.position.n),
                              {});
        } catch (const BearingUndefinedError&) {
            pe = {};
        }
        ship = step_vehicle(ship, sfkc_command(pe, gains, 0.0, params), calm, params, 0.1);
    }
    require(last_outside >= 0.0 && last_outside < 300.0,
            "rho was still >= 1 m at t = " + fmt(last_outside) + " s");
}

// ------------------------------------------------------- criteria 3, 4 and 6

struct PooledStats {
    double mean{0.0};
    double stddev{0.0};
};

PooledStats pooled_follower_error(const Trace& trace, double transient_s) {
    std::vector<double> xs;
    for (const auto& rec : trace.records) {
        if (rec.t_s < transient_s) continue;
        for (std::size_t i = 1; i < trace.airship_count; ++i) {
            xs.push_back(rec.airships[i].goal_dist_m);
        }
    }
    PooledStats out;
    for (double x : xs) out.mean += x;
    out.mean /= static_cast<double>(xs.size());
    for (double x : xs) out.stddev += (x - out.mean) * (x - out.mean);
    out.stddev = std::sqrt(out.stddev / static_cast<double>(xs.size()));
    return out;
}

void formation_waypoint_reproduction(const Options& opt) {
    const Scenario sc = load_scenario(fs::path(opt.scenarios) / "waypoint_v3.json");
    const Trace trace = run_simulation(sc);
    const PooledStats stats = pooled_follower_error(trace, 30.0);
    require(stats.mean <= 6.0, "follower mean slot error " + fmt(stats.mean) + " m > 6 m");
    require(stats.stddev <= 6.0, "follower slot error std " + fmt(stats.stddev) + " m > 6 m");
}

void target_tracking_reproduction(const Options& opt) {
    const Scenario sc = load_scenario(fs::path(opt.scenarios) / "target_formation7.json");
    const Trace trace = run_simulation(sc);
    const MetricsSummary metrics = compute_metrics(trace, sc.metrics_transient_s);
    const double leader_mean = metrics.per_airship[0].mean_m;
    require(leader_mean >= 10.0 && leader_mean <= 40.0,
            "leader mean error " + fmt(leader_mean) + " m outside [10, 40] m");
}

void boids_waypoint_reproduction(const Options& opt) {
    const Scenario sc = load_scenario(fs::path(opt.scenarios) / "waypoint_boids4.json");
    const Trace trace = run_simulation(sc);
    const MetricsSummary metrics = compute_metrics(trace, sc.metrics_transient_s);
    require(metrics.swarm_centre.mean_m <= 6.0,
            "swarm-centre mean error " + fmt(metrics.swarm_centre.mean_m) + " m > 6 m");
}

// ---------------------------------------------------------------- criterion 5

void boids_invariants() {
    CounterRng rng(5005);
    // Centroid invariance under attraction-only dynamics (weight small
    // enough that the speed clamp never engages).
    BoidsParams attraction_only;
    attraction_only.delta = 0.0;
    attraction_only.k_r = 0.0;
    attraction_only.k_m = 0.0;
    attraction_only.k_a = 0.05;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_double(0.0, 9.0));
        std::vector<BoidState> states;
        for (int i = 0; i < n; ++i) {
            states.push_back({{rng.next_double(-50, 50), rng.next_double(-50, 50), 0.0},
                              {rng.next_double(-3, 3), rng.next_double(-3, 3), 0.0}});
        }
        Vec3 before;
        for (const auto& b : states) before += b.position;
        const auto next = boids_step_swarm(states, attraction_only, std::nullopt, 0.1);
        Vec3 after;
        for (const auto& b : next) after += b.position;
        require((after / double(n) - before / double(n)).norm() <= 1e-12,
                "centroid drifted under attraction-only dynamics");
    }

    // Attraction velocities sum to the zero vector.
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_double(0.0, 10.0));
        std::vector<Vec3> pos;
        for (int i = 0; i < n; ++i) {
            pos.push_back({rng.next_double(-200, 200), rng.next_double(-200, 200), 0.0});
        }
        Vec3 sum;
        for (int i = 0; i < n; ++i) sum += attraction_velocity(i, pos);
        require(sum.norm() <= 1e-9, "sum of attraction velocities is " + fmt(sum.norm()));
    }

    // Permutation invariance of one full synchronous step.
    BoidsParams params;
    std::vector<BoidState> states;
    for (int i = 0; i < 7; ++i) {
        states.push_back({{rng.next_double(-30, 30), rng.next_double(-30, 30), 0.0},
                          {rng.next_double(-2, 2), rng.next_double(-2, 2), 0.0}});
    }
    const Vec3 waypoint{40.0, -25.0, 0.0};
    const auto straight = boids_step_swarm(states, params, waypoint, 0.1);
    const std::vector<std::size_t> perm{6, 3, 0, 5, 2, 4, 1};
    std::vector<BoidState> shuffled(states.size());
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled[i] = states[perm[i]];
    const auto permuted = boids_step_swarm(shuffled, params, waypoint, 0.1);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        require((permuted[i].velocity - straight[perm[i]].velocity).norm() <= 1e-12 &&
                    (permuted[i].position - straight[perm[i]].position).norm() <= 1e-12,
                "permuting the swarm changed a member update");
    }
}

// ---------------------------------------------------------------- criterion 7

double oracle_entropy_at(double h, const std::vector<Vec3>& pos) {
    const std::size_t n = pos.size();
    double entropy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t members = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::hypot(pos[i].n - pos[j].n, pos[i].e - pos[j].e) <= h) ++members;
        }
        const double p = double(members) / double(n);
        entropy -= p * std::log2(p);
    }
    return entropy;
}

void entropy_oracles() {
    CounterRng rng(7007);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_double(0.0, 11.0));
        std::vector<Vec3> pos;
        for (int i = 0; i < n; ++i) {
            pos.push_back({rng.next_double(0.0, 15.0), rng.next_double(0.0, 15.0), 0.0});
        }
        const double exact = total_entropy(pos).total_bits_m;
        double max_d = 0.0;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            for (std::size_t j = i + 1; j < pos.size(); ++j) {
                max_d = std::max(max_d,
                                 std::hypot(pos[i].n - pos[j].n, pos[i].e - pos[j].e));
            }
        }
        const double step = 1e-3;
        double quad = 0.0;
        for (double h = 0.5 * step; h < max_d + step; h += step) {
            quad += oracle_entropy_at(h, pos) * step;
        }
        const double rel = std::abs(exact - quad) / std::max(exact, 1e-12);
        require(rel < 1e-2, "piecewise S deviates " + fmt(rel) + " from quadrature");

        for (double alpha : {0.5, 2.0, 10.0}) {
            std::vector<Vec3> scaled;
            for (const Vec3& p : pos) scaled.push_back(p * alpha);
            const double s = total_entropy(scaled).total_bits_m;
            require(std::abs(s - alpha * exact) <= 1e-9 * std::max(1.0, alpha * exact),
                    "scale law violated at alpha = " + fmt(alpha));
        }
    }

    const std::vector<Vec3> pair{{0, 0, 0}, {0, 4, 0}};
    require(std::abs(total_entropy(pair).total_bits_m - 4.0) < 1e-6,
            "two agents 4 m apart: S != 4");
    const std::vector<Vec3> collinear{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    const double expected = std::log2(3.0) + (4.0 / 3.0) * std::log2(1.5);
    require(std::abs(total_entropy(collinear).total_bits_m - expected) < 1e-6,
            "three collinear agents: S mismatch");
}

// ---------------------------------------------------------------- criterion 8

void rpso_monotone_convergence() {
    RpsoParams params;
    params.k_s = 0.0;  // static target + distance-only fitness: static landscape
    params.a = {0.85, 0.85, 0.85};
    params.r_d_m = 150.0;
    params.collision_threshold_m = 10.0;

    std::vector<ParticleState> swarm(4);
    const double offsets[4][2] = {{-8.0, -6.0}, {8.0, -4.0}, {-5.0, 7.0}, {6.0, 6.0}};
    for (int i = 0; i < 4; ++i) {
        swarm[i].position = {offsets[i][0], offsets[i][1], 0.0};
        swarm[i].best_position = swarm[i].position;
        swarm[i].id = i;
    }
    const Vec3 target{200.0, 0.0, 0.0};

    Vec3 centre0;
    for (const auto& p : swarm) centre0 += p.position;
    centre0 = centre0 / 4.0;
    const double initial_dist = distance_to_target(centre0, target);

    SeededRpsoRandom random(7);
    double best = 0.0;
    for (std::uint64_t k = 0; k < 6000; ++k) {
        swarm = rpso_step(swarm, target, params, random, k, 0.1);
        double now = 0.0;
        for (const auto& p : swarm) now = std::max(now, p.best_fitness);
        require(now >= best, "max personal-best fitness decreased at step " + fmt(double(k)));
        best = now;
    }
    Vec3 centre;
    for (const auto& p : swarm) centre += p.position;
    centre = centre / 4.0;
    const double final_dist = distance_to_target(centre, target);
    require(final_dist <= 0.1 * initial_dist,
            "swarm centre ended " + fmt(final_dist) + " m from the target (initial " +
                fmt(initial_dist) + " m)");
}

// ---------------------------------------------------------------- criterion 9

void rpso_hand_trace() {
    RpsoParams params;
    params.a = {0.5, 0.5, 0.5};
    params.b1 = {1, 1, 1};
    params.b2 = {1, 1, 1};
    params.b3 = {1, 1, 1};

    std::vector<ParticleState> swarm(2);
    swarm[0].position = {0, 0, 0};
    swarm[0].velocity = {1, 0, 0};
    swarm[0].best_position = {0, 0, 0};
    swarm[0].id = 0;
    swarm[1].position = {6, 0, 0};
    swarm[1].velocity = {0, 0, 0};
    swarm[1].best_position = {6, 0, 0};
    swarm[1].id = 1;

    PinnedRpsoRandom pinned(1.0);
    const auto next = rpso_step(swarm, Vec3{100, 0, 0}, params, pinned, 0, 1.0);

    require(next[0].velocity == Vec3{0.5, 0.0, 0.0}, "robot 0 velocity mismatch");
    require(next[0].position == Vec3{0.5, 0.0, 0.0}, "robot 0 position mismatch");
    require(next[1].velocity == Vec3{6.0, 0.0, 0.0}, "robot 1 velocity mismatch");
    require(next[1].position == Vec3{12.0, 0.0, 0.0}, "robot 1 position mismatch");

    const double gamma_s = std::exp(-36.0 / 5000.0);
    const double f0 = gamma_s * gamma_s + std::exp(-2.0) * std::exp(-2.0);
    const double f1 = gamma_s * gamma_s + std::exp(-8836.0 / 5000.0) * std::exp(-8836.0 / 5000.0);
    require(std::abs(next[0].best_fitness - f0) < 1e-12, "robot 0 fitness mismatch");
    require(std::abs(next[1].best_fitness - f1) < 1e-12, "robot 1 fitness mismatch");
}

// --------------------------------------------------------------- criterion 10

std::string read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    require(bool(in), "missing artifact " + path.string());
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
}

void cli_determinism(const Options& opt) {
    require(!opt.cli.empty(), "--cli path not provided");
    const std::vector<std::string> scenarios{"waypoint_v3", "target_formation7",
                                             "waypoint_boids4", "target_boids4",
                                             "waypoint_rpso4", "target_rpso4"};
    fs::create_directories(opt.work);
    for (const std::string& name : scenarios) {
        const fs::path scenario = fs::path(opt.scenarios) / (name + ".json");
        for (const char* tag : {"a", "b"}) {
            const fs::path out = fs::path(opt.work) / (name + "_" + tag);
            fs::remove_all(out);
            const std::string cmd = "\"" + opt.cli + "\" run \"" + scenario.string() +
                                    "\" --seed 7 --out \"" + out.string() + "\" > /dev/null";
            const int status = std::system(cmd.c_str());
            require(status == 0, "CLI run failed for " + name);
        }
        const fs::path a = fs::path(opt.work) / (name + "_a");
        const fs::path b = fs::path(opt.work) / (name + "_b");
        for (const char* artifact : {"trace.csv", "metrics.json", "trajectory.svg"}) {
            require(read_bytes(a / artifact) == read_bytes(b / artifact),
                    name + "/" + artifact + " differs between identical runs");
        }
    }
}

// --------------------------------------------------------------- criterion 11

void trim_exhaustive() {
    const TrimTable table = default_trim_table();
    CounterRng rng(1111);
    auto brute = [&](double u) {
        std::size_t best = 0;
        double gap = std::abs(u - table.airspeeds_mps[0]);
        for (std::size_t i = 1; i < table.airspeeds_mps.size(); ++i) {
            const double g = std::abs(u - table.airspeeds_mps[i]);
            if (g < gap) {
                gap = g;
                best = i;
            }
        }
        return best;
    };
    for (int k = 0; k < 10000; ++k) {
        const double u = rng.next_double(-1.0, 16.0);
        require(trim_minimization(u, table).index == brute(u),
                "argmin mismatch at u = " + fmt(u));
    }
    // Exact ties on a representable grid resolve to the lowest index.
    TrimTable grid;
    for (int i = 0; i < 74; ++i) {
        grid.airspeeds_mps.push_back(static_cast<double>(i));
        grid.gains.push_back({1.0, 1.0});
    }
    for (int i = 0; i + 1 < 74; ++i) {
        require(trim_minimization(i + 0.5, grid).index == static_cast<std::size_t>(i),
                "midpoint tie did not break to the lower index");
    }
}

// ---------------------------------------------------------------------- main

struct Criterion {
    int id;
    std::string name;
    std::function<void()> body;
    double time_limit_s{0.0};  // 0 = unchecked
};

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) opt.cli = argv[++i];
        else if (arg == "--scenarios" && i + 1 < argc) opt.scenarios = argv[++i];
        else if (arg == "--work" && i + 1 < argc) opt.work = argv[++i];
    }
    if (opt.scenarios.empty()) opt.scenarios = "scenarios";

    const std::vector<Criterion> criteria{
        {1, "closed-loop stability over 1000 seeded gain triples", stability_property, 1.0},
        {2, "SFKC convergence to rho < 1 m within 300 s", sfkc_convergence, 1.0},
        {3, "formation waypoint mission: follower slot error <= 6 m mean/std",
         [&] { formation_waypoint_reproduction(opt); }, 10.0},
        {4, "target tracking: leader mean error in [10, 40] m",
         [&] { target_tracking_reproduction(opt); }, 10.0},
        {5, "boids algebraic invariants", boids_invariants, 0.0},
        {6, "boids waypoint mission: swarm-centre mean error <= 6 m",
         [&] { boids_waypoint_reproduction(opt); }, 0.0},
        {7, "entropy piecewise integral vs quadrature, scale law, hand values",
         entropy_oracles, 0.0},
        {8, "RPSO monotone max personal best and convergence", rpso_monotone_convergence, 0.0},
        {9, "RPSO two-robot hand trace (pinned randoms)", rpso_hand_trace, 0.0},
        {10, "CLI determinism: byte-identical artifacts", [&] { cli_determinism(opt); }, 0.0},
        {11, "trimMinimization vs brute-force argmin (10k queries)", trim_exhaustive, 0.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
            error = "runtime " + fmt(elapsed) + " s exceeds " + fmt(c.time_limit_s) + " s";
        }
        const bool ok = error.empty();
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d (%6.2fs): %s%s%s\n", ok ? "PASS" : "FAIL", c.id, elapsed,
                    c.name.c_str(), ok ? "" : " -- ", error.c_str());
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
