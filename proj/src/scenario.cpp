#include "airswarm/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "airswarm/errors.hpp"

namespace airswarm {

namespace {

using nlohmann::json;

double get_number(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) throw ScenarioError(path + key, "missing required field");
    if (!j[key].is_number()) throw ScenarioError(path + key, "expected a number");
    return j[key].get<double>();
}

double get_number_or(const json& j, const std::string& path, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ScenarioError(path + key, "expected a number");
    return j[key].get<double>();
}

bool get_bool_or(const json& j, const std::string& path, const char* key, bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_boolean()) throw ScenarioError(path + key, "expected a boolean");
    return j[key].get<bool>();
}

Vec3 get_vec3(const json& j, const std::string& path) {
    Vec3 v;
    v.n = get_number(j, path, "north_m");
    v.e = get_number(j, path, "east_m");
    v.d = get_number_or(j, path, "down_m", 0.0);
    return v;
}

Vec3 get_axis_weights(const json& j, const std::string& path, const char* key, const Vec3& fallback) {
    if (!j.contains(key)) return fallback;
    const json& w = j[key];
    if (w.is_number()) {
        const double s = w.get<double>();
        return {s, s, s};
    }
    if (!w.is_array() || w.size() != 3) {
        throw ScenarioError(path + key, "expected a number or an array of 3 numbers");
    }
    return {w[0].get<double>(), w[1].get<double>(), w[2].get<double>()};
}

Approach parse_approach(const json& j) {
    if (!j.contains("approach")) throw ScenarioError("approach", "missing required field");
    const std::string a = j["approach"].get<std::string>();
    if (a == "formation") return Approach::Formation;
    if (a == "boids") return Approach::Boids;
    if (a == "rpso") return Approach::Rpso;
    throw ScenarioError("approach", "unknown approach '" + a +
                                        "' (expected formation, boids or rpso)");
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScenarioError("<document>", std::string("JSON parse error: ") + e.what());
    }

    Scenario sc;
    sc.name = j.value("name", "");
    sc.approach = parse_approach(j);
    if (!j.contains("seed")) throw ScenarioError("seed", "missing required field");
    sc.seed = j["seed"].get<std::uint64_t>();
    sc.dt_s = get_number_or(j, "", "dt_s", 0.1);
    sc.duration_s = get_number(j, "", "duration_s");
    sc.wind_mps.n = get_number_or(j, "", "wind_north_mps", 0.0);
    sc.wind_mps.e = get_number_or(j, "", "wind_east_mps", 0.0);
    sc.wind_mps.d = get_number_or(j, "", "wind_down_mps", 0.0);
    sc.metrics_transient_s = get_number_or(j, "", "metrics_transient_s", 0.0);

    if (j.contains("vehicle")) {
        const json& v = j["vehicle"];
        sc.vehicle.tau_u_s = get_number_or(v, "vehicle.", "tau_u_s", sc.vehicle.tau_u_s);
        sc.vehicle.tau_r_s = get_number_or(v, "vehicle.", "tau_r_s", sc.vehicle.tau_r_s);
        sc.vehicle.v_max_mps = get_number_or(v, "vehicle.", "v_max_mps", sc.vehicle.v_max_mps);
        sc.vehicle.r_max_radps = get_number_or(v, "vehicle.", "r_max_radps", sc.vehicle.r_max_radps);
        sc.vehicle.altitude_m = get_number_or(v, "vehicle.", "altitude_m", sc.vehicle.altitude_m);
    }
    if (j.contains("gains")) {
        const json& g = j["gains"];
        sc.gains.k_rho = get_number_or(g, "gains.", "k_rho", sc.gains.k_rho);
        sc.gains.k_zeta = get_number_or(g, "gains.", "k_zeta", sc.gains.k_zeta);
        sc.gains.k_epsilon = get_number_or(g, "gains.", "k_epsilon", sc.gains.k_epsilon);
        sc.gains.k_ff = get_number_or(g, "gains.", "k_ff", sc.gains.k_ff);
    }
    if (j.contains("trim_table")) {
        const json& t = j["trim_table"];
        if (get_bool_or(t, "trim_table.", "use_default", false)) {
            sc.trim_table = default_trim_table();
        } else {
            if (!t.contains("entries") || !t["entries"].is_array()) {
                throw ScenarioError("trim_table.entries", "expected an array of trim records");
            }
            TrimTable table;
            for (const json& e : t["entries"]) {
                table.airspeeds_mps.push_back(get_number(e, "trim_table.entries[].", "airspeed_mps"));
                table.gains.push_back({get_number(e, "trim_table.entries[].", "tau_u_s"),
                                       get_number(e, "trim_table.entries[].", "tau_r_s")});
            }
            sc.trim_table = std::move(table);
        }
    }
    if (j.contains("boids")) {
        const json& b = j["boids"];
        sc.boids.delta = get_number_or(b, "boids.", "delta", sc.boids.delta);
        sc.boids.k_r = get_number_or(b, "boids.", "k_r", sc.boids.k_r);
        sc.boids.k_m = get_number_or(b, "boids.", "k_m", sc.boids.k_m);
        sc.boids.k_a = get_number_or(b, "boids.", "k_a", sc.boids.k_a);
        sc.boids.d_lim_m = get_number_or(b, "boids.", "d_lim_m", sc.boids.d_lim_m);
        sc.boids.v_max_mps = get_number_or(b, "boids.", "v_max_mps", sc.boids.v_max_mps);
    }
    if (j.contains("rpso")) {
        const json& r = j["rpso"];
        sc.rpso.a = get_axis_weights(r, "rpso.", "a", sc.rpso.a);
        sc.rpso.b1 = get_axis_weights(r, "rpso.", "b1", sc.rpso.b1);
        sc.rpso.b2 = get_axis_weights(r, "rpso.", "b2", sc.rpso.b2);
        sc.rpso.b3 = get_axis_weights(r, "rpso.", "b3", sc.rpso.b3);
        sc.rpso.k_s = get_number_or(r, "rpso.", "k_s", sc.rpso.k_s);
        sc.rpso.k_d = get_number_or(r, "rpso.", "k_d", sc.rpso.k_d);
        sc.rpso.r_s_bits_m = get_number_or(r, "rpso.", "r_s_bits_m", sc.rpso.r_s_bits_m);
        sc.rpso.r_d_m = get_number_or(r, "rpso.", "r_d_m", sc.rpso.r_d_m);
        sc.rpso.collision_threshold_m =
            get_number_or(r, "rpso.", "collision_threshold_m", sc.rpso.collision_threshold_m);
        sc.rpso.v_max_mps = get_number_or(r, "rpso.", "v_max_mps", sc.rpso.v_max_mps);
    }

    if (!j.contains("airships") || !j["airships"].is_array() || j["airships"].empty()) {
        throw ScenarioError("airships", "expected a non-empty array");
    }
    int index = 0;
    for (const json& a : j["airships"]) {
        Scenario::InitialAirship ship;
        ship.north_m = get_number(a, "airships[].", "north_m");
        ship.east_m = get_number(a, "airships[].", "east_m");
        // Default: layered flight, one altitude band per airship.
        ship.down_m = get_number_or(a, "airships[].", "down_m",
                                    -(sc.vehicle.altitude_m + 10.0 * index));
        ship.yaw_rad = get_number_or(a, "airships[].", "yaw_rad", 0.0);
        if (a.contains("slot")) {
            const json& s = a["slot"];
            FormationSlot slot;
            slot.rho_d_m = get_number(s, "airships[].slot.", "rho_d_m");
            slot.zeta_d_rad = get_number(s, "airships[].slot.", "zeta_d_rad");
            slot.leader_id = static_cast<int>(get_number(s, "airships[].slot.", "leader_id"));
            ship.slot = slot;
        }
        sc.airships.push_back(ship);
        ++index;
    }

    if (!j.contains("mission")) throw ScenarioError("mission", "missing required field");
    const json& m = j["mission"];
    sc.target_hover_radius_m = get_number_or(m, "mission.", "hover_radius_m", 20.0);
    sc.cruise_airspeed_mps = get_number_or(m, "mission.", "cruise_airspeed_mps", 10.0);
    if (m.contains("waypoints")) {
        if (!m["waypoints"].is_array()) {
            throw ScenarioError("mission.waypoints", "expected an array");
        }
        for (const json& w : m["waypoints"]) {
            Waypoint wp;
            wp.position = get_vec3(w, "mission.waypoints[].");
            wp.hover = get_bool_or(w, "mission.waypoints[].", "hover", false);
            wp.hover_radius_m = get_number_or(w, "mission.waypoints[].", "hover_radius_m", 20.0);
            wp.hover_duration_s = get_number_or(w, "mission.waypoints[].", "hover_duration_s", 0.0);
            sc.waypoints.push_back(wp);
        }
    }
    if (m.contains("target")) {
        const json& t = m["target"];
        TargetModel model;
        const std::string kind = t.value("kind", "");
        if (kind == "scripted") {
            model.kind = TargetKind::ScriptedPolyline;
        } else if (kind == "random_walk") {
            model.kind = TargetKind::SeededRandomWalk;
        } else {
            throw ScenarioError("mission.target.kind",
                                "expected 'scripted' or 'random_walk', got '" + kind + "'");
        }
        model.speed_mps = get_number(t, "mission.target.", "speed_mps");
        if (!t.contains("start")) throw ScenarioError("mission.target.start", "missing required field");
        model.start = get_vec3(t["start"], "mission.target.start.");
        if (t.contains("waypoints")) {
            for (const json& w : t["waypoints"]) {
                model.waypoints.push_back(get_vec3(w, "mission.target.waypoints[]."));
            }
        }
        model.max_turn_rate_radps =
            get_number_or(t, "mission.target.", "max_turn_rate_radps", model.max_turn_rate_radps);
        model.resample_interval_s =
            get_number_or(t, "mission.target.", "resample_interval_s", model.resample_interval_s);
        model.initial_heading_rad =
            get_number_or(t, "mission.target.", "initial_heading_rad", 0.0);
        sc.target = std::move(model);
    }

    validate_scenario(sc);
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ScenarioError("<file>", "cannot open scenario file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    Scenario sc = parse_scenario(text.str());
    if (sc.name.empty()) sc.name = path.stem().string();
    return sc;
}

void validate_scenario(const Scenario& sc) {
    const std::size_t n = sc.airships.size();
    if (n < 1) throw ScenarioError("airships", "at least one airship is required");
    if (sc.approach != Approach::Formation && n < 2) {
        throw ScenarioError("airships", "swarm approaches require at least two airships");
    }
    if (!(sc.dt_s > 0.0) || sc.dt_s > 1.0) throw ScenarioError("dt_s", "must lie in (0, 1]");
    if (sc.duration_s < 0.0) throw ScenarioError("duration_s", "must be non-negative");
    if (sc.duration_s / sc.dt_s > 1e7) {
        throw ScenarioError("duration_s", "duration/dt exceeds 1e7 steps");
    }
    if (sc.metrics_transient_s < 0.0) {
        throw ScenarioError("metrics_transient_s", "must be non-negative");
    }
    if (!std::isfinite(sc.wind_mps.n) || !std::isfinite(sc.wind_mps.e) ||
        !std::isfinite(sc.wind_mps.d)) {
        throw ScenarioError("wind_north_mps", "wind components must be finite");
    }

    if (!(sc.vehicle.tau_u_s > 0.0)) throw ScenarioError("vehicle.tau_u_s", "must be positive");
    if (!(sc.vehicle.tau_r_s > 0.0)) throw ScenarioError("vehicle.tau_r_s", "must be positive");
    if (!(sc.vehicle.v_max_mps > 0.0) || sc.vehicle.v_max_mps > 15.0) {
        throw ScenarioError("vehicle.v_max_mps", "must lie in (0, 15]");
    }
    if (!(sc.vehicle.r_max_radps > 0.0)) throw ScenarioError("vehicle.r_max_radps", "must be positive");

    if (!validate_gains(sc.gains)) {
        throw ScenarioError("gains", "stability rule requires k_rho > 0, k_epsilon < 0 and k_zeta > k_rho");
    }
    if (sc.trim_table) {
        const TrimTable& t = *sc.trim_table;
        if (t.airspeeds_mps.empty()) throw ScenarioError("trim_table.entries", "must be non-empty");
        if (t.airspeeds_mps.size() != t.gains.size()) {
            throw ScenarioError("trim_table.entries", "airspeed/gain lengths differ");
        }
        for (std::size_t i = 0; i + 1 < t.airspeeds_mps.size(); ++i) {
            if (!(t.airspeeds_mps[i] < t.airspeeds_mps[i + 1])) {
                throw ScenarioError("trim_table.entries", "airspeeds must be strictly increasing");
            }
        }
        for (const TrimGains& g : t.gains) {
            if (!(g.tau_u_s > 0.0) || !(g.tau_r_s > 0.0)) {
                throw ScenarioError("trim_table.entries", "lags must be positive");
            }
        }
    }

    if (sc.boids.delta < 0.0 || sc.boids.delta > 1.0) {
        throw ScenarioError("boids.delta", "must lie in [0, 1]");
    }
    if (sc.boids.k_r < 0.0 || sc.boids.k_m < 0.0 || sc.boids.k_a < 0.0) {
        throw ScenarioError("boids.k_r", "rule weights must be non-negative");
    }
    if (!(sc.boids.d_lim_m > 0.0)) throw ScenarioError("boids.d_lim_m", "must be positive");
    if (!(sc.boids.v_max_mps > 0.0)) throw ScenarioError("boids.v_max_mps", "must be positive");

    if (sc.rpso.k_s < 0.0 || sc.rpso.k_d < 0.0) {
        throw ScenarioError("rpso.k_s", "objective weights must be non-negative");
    }
    if (sc.rpso.k_s + sc.rpso.k_d <= 0.0) {
        throw ScenarioError("rpso.k_s", "at least one objective weight must be positive");
    }
    if (!(sc.rpso.r_s_bits_m > 0.0)) throw ScenarioError("rpso.r_s_bits_m", "must be positive");
    if (!(sc.rpso.r_d_m > 0.0)) throw ScenarioError("rpso.r_d_m", "must be positive");
    if (!(sc.rpso.collision_threshold_m > 0.0)) {
        throw ScenarioError("rpso.collision_threshold_m", "must be positive");
    }
    if (!(sc.rpso.v_max_mps > 0.0)) throw ScenarioError("rpso.v_max_mps", "must be positive");

    for (std::size_t i = 0; i < n; ++i) {
        const auto& ship = sc.airships[i];
        if (!std::isfinite(ship.north_m) || !std::isfinite(ship.east_m) ||
            !std::isfinite(ship.down_m) || !std::isfinite(ship.yaw_rad)) {
            throw ScenarioError("airships[].north_m", "initial pose must be finite");
        }
        if (ship.slot) {
            if (ship.slot->rho_d_m < 0.0) {
                throw ScenarioError("airships[].slot.rho_d_m", "must be non-negative");
            }
            if (ship.slot->leader_id < 0 || static_cast<std::size_t>(ship.slot->leader_id) >= n) {
                throw ScenarioError("airships[].slot.leader_id", "references an unknown airship");
            }
            if (static_cast<std::size_t>(ship.slot->leader_id) == i) {
                throw ScenarioError("airships[].slot.leader_id", "airship cannot follow itself");
            }
        }
    }
    if (sc.approach == Approach::Formation) {
        if (sc.airships[0].slot) {
            throw ScenarioError("airships[0].slot", "the mission leader must not have a slot");
        }
        for (std::size_t i = 1; i < n; ++i) {
            if (!sc.airships[i].slot) {
                throw ScenarioError("airships[].slot",
                                    "formation followers require a slot (airship " +
                                        std::to_string(i) + ")");
            }
        }
    }

    const bool has_waypoints = !sc.waypoints.empty();
    const bool has_target = sc.target.has_value();
    if (has_waypoints == has_target) {
        throw ScenarioError("mission", "exactly one of mission.waypoints / mission.target is required");
    }
    for (const Waypoint& wp : sc.waypoints) {
        if (!(wp.hover_radius_m > 0.0)) {
            throw ScenarioError("mission.waypoints[].hover_radius_m", "must be positive");
        }
        if (wp.hover && wp.hover_duration_s < 0.0) {
            throw ScenarioError("mission.waypoints[].hover_duration_s", "must be non-negative");
        }
    }
    if (has_target) {
        const TargetModel& t = *sc.target;
        if (t.speed_mps < 0.0 || t.speed_mps > 8.0) {
            throw ScenarioError("mission.target.speed_mps", "must lie in [0, 8]");
        }
        if (t.kind == TargetKind::ScriptedPolyline && t.waypoints.empty() && t.speed_mps > 0.0) {
            throw ScenarioError("mission.target.waypoints", "scripted target needs waypoints");
        }
        if (t.kind == TargetKind::SeededRandomWalk) {
            if (!(t.resample_interval_s > 0.0)) {
                throw ScenarioError("mission.target.resample_interval_s", "must be positive");
            }
            const double ratio = t.resample_interval_s / sc.dt_s;
            if (std::abs(ratio - std::round(ratio)) > 1e-9) {
                throw ScenarioError("mission.target.resample_interval_s",
                                    "must be an integer multiple of dt_s");
            }
            if (t.max_turn_rate_radps < 0.0) {
                throw ScenarioError("mission.target.max_turn_rate_radps", "must be non-negative");
            }
        }
        if (!(sc.target_hover_radius_m > 0.0)) {
            throw ScenarioError("mission.hover_radius_m", "must be positive");
        }
        if (!(sc.cruise_airspeed_mps > 0.0)) {
            throw ScenarioError("mission.cruise_airspeed_mps", "must be positive");
        }
    }
}

}  // namespace airswarm
