#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "airswarm/boids.hpp"
#include "airswarm/guidance.hpp"
#include "airswarm/mission.hpp"
#include "airswarm/rpso.hpp"
#include "airswarm/vehicle.hpp"

namespace airswarm {

/// Declarative mission description loaded from a UTF-8 JSON file. Field
/// names carry explicit units (suffix _m, _mps, _radps, _s, _rad).
struct Scenario {
    std::string name;
    Approach approach{Approach::Formation};
    std::uint64_t seed{0};
    double dt_s{0.1};
    double duration_s{0.0};
    Vec3 wind_mps;  // inertial NED, rotated to body frame per step

    VehicleParams vehicle;
    GuidanceGains gains;
    std::optional<TrimTable> trim_table;
    BoidsParams boids;
    RpsoParams rpso;

    struct InitialAirship {
        double north_m{0.0};
        double east_m{0.0};
        double down_m{0.0};
        double yaw_rad{0.0};
        std::optional<FormationSlot> slot;
    };
    std::vector<InitialAirship> airships;

    std::vector<Waypoint> waypoints;     // exactly one of waypoints / target
    std::optional<TargetModel> target;
    double target_hover_radius_m{20.0};  // walk-stop-walk switch radius
    double cruise_airspeed_mps{10.0};    // constant airspeed while chasing a target

    double metrics_transient_s{0.0};
};

/// Parses and fully validates a scenario file. Throws ScenarioError naming
/// the offending field on any missing field or invariant violation.
Scenario load_scenario(const std::filesystem::path& path);

/// Parses a scenario from JSON text (same validation as load_scenario).
Scenario parse_scenario(const std::string& json_text);

/// Re-checks every scenario invariant; throws ScenarioError on violation.
void validate_scenario(const Scenario& scenario);

}  // namespace airswarm
