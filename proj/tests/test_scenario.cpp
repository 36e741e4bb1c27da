#include <doctest.h>

#include <string>

#include "airswarm/errors.hpp"
#include "airswarm/scenario.hpp"

using namespace airswarm;

namespace {

// A minimal valid single-airship waypoint scenario, patchable per test.
const char* kMinimal = R"({
  "approach": "formation",
  "seed": 1,
  "duration_s": 10.0,
  "airships": [ { "north_m": 0.0, "east_m": 0.0 } ],
  "mission": { "waypoints": [ { "north_m": 100.0, "east_m": 0.0 } ] }
})";

std::string patched(const std::string& find, const std::string& replace) {
    std::string text = kMinimal;
    const auto pos = text.find(find);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, find.size(), replace);
    return text;
}

}  // namespace

TEST_CASE("minimal scenario parses with defaults") {
    const Scenario sc = parse_scenario(kMinimal);
    CHECK(sc.approach == Approach::Formation);
    CHECK(sc.dt_s == 0.1);
    CHECK(sc.vehicle.tau_u_s == 4.0);
    CHECK(sc.gains.k_rho == 0.1);
    CHECK(sc.waypoints.size() == 1);
    CHECK(sc.airships.size() == 1);
    CHECK(sc.airships[0].down_m == doctest::Approx(-50.0));  // layered default
    CHECK_FALSE(sc.trim_table.has_value());
}

TEST_CASE("scenario errors name the offending field") {
    CHECK_THROWS_WITH_AS(parse_scenario(""), doctest::Contains("<document>"), ScenarioError);

    try {
        parse_scenario(patched("\"duration_s\": 10.0,", ""));
        FAIL("expected ScenarioError");
    } catch (const ScenarioError& e) {
        CHECK(e.field_name == "duration_s");
    }

    try {
        parse_scenario(patched("\"approach\": \"formation\"", "\"approach\": \"flocking\""));
        FAIL("expected ScenarioError");
    } catch (const ScenarioError& e) {
        CHECK(e.field_name == "approach");
    }
}

TEST_CASE("gain stability rule is enforced at load time") {
    const std::string text = patched(
        "\"seed\": 1,",
        "\"seed\": 1, \"gains\": { \"k_rho\": 0.5, \"k_zeta\": 0.2, \"k_epsilon\": -0.01 },");
    try {
        parse_scenario(text);
        FAIL("expected ScenarioError");
    } catch (const ScenarioError& e) {
        CHECK(e.field_name == "gains");
        CHECK(std::string(e.what()).find("k_zeta > k_rho") != std::string::npos);
    }
}

TEST_CASE("swarm approaches need at least two airships") {
    const std::string text = patched("\"approach\": \"formation\"", "\"approach\": \"boids\"");
    CHECK_THROWS_AS(parse_scenario(text), ScenarioError);
}

TEST_CASE("exactly one mission kind") {
    const std::string both = patched(
        "\"mission\": { \"waypoints\": [ { \"north_m\": 100.0, \"east_m\": 0.0 } ] }",
        "\"mission\": { \"waypoints\": [ { \"north_m\": 100.0, \"east_m\": 0.0 } ], "
        "\"target\": { \"kind\": \"scripted\", \"speed_mps\": 5.0, "
        "\"start\": { \"north_m\": 0.0, \"east_m\": 0.0 }, "
        "\"waypoints\": [ { \"north_m\": 9.0, \"east_m\": 0.0 } ] } }");
    CHECK_THROWS_AS(parse_scenario(both), ScenarioError);
}

TEST_CASE("random-walk resample interval must sit on the dt grid") {
    const std::string text = patched(
        "\"mission\": { \"waypoints\": [ { \"north_m\": 100.0, \"east_m\": 0.0 } ] }",
        "\"mission\": { \"target\": { \"kind\": \"random_walk\", \"speed_mps\": 5.0, "
        "\"start\": { \"north_m\": 0.0, \"east_m\": 0.0 }, "
        "\"resample_interval_s\": 0.25 } }");
    try {
        parse_scenario(text);
        FAIL("expected ScenarioError");
    } catch (const ScenarioError& e) {
        CHECK(e.field_name == "mission.target.resample_interval_s");
    }
}

TEST_CASE("target speed envelope") {
    const std::string text = patched(
        "\"mission\": { \"waypoints\": [ { \"north_m\": 100.0, \"east_m\": 0.0 } ] }",
        "\"mission\": { \"target\": { \"kind\": \"scripted\", \"speed_mps\": 9.5, "
        "\"start\": { \"north_m\": 0.0, \"east_m\": 0.0 }, "
        "\"waypoints\": [ { \"north_m\": 9.0, \"east_m\": 0.0 } ] } }");
    CHECK_THROWS_AS(parse_scenario(text), ScenarioError);
}

TEST_CASE("formation followers need slots and a slotless leader") {
    const std::string no_slot = patched(
        "\"airships\": [ { \"north_m\": 0.0, \"east_m\": 0.0 } ]",
        "\"airships\": [ { \"north_m\": 0.0, \"east_m\": 0.0 }, "
        "{ \"north_m\": -20.0, \"east_m\": 0.0 } ]");
    CHECK_THROWS_AS(parse_scenario(no_slot), ScenarioError);
}

TEST_CASE("bundled scenarios load and validate") {
    const Scenario v3 = load_scenario(std::string(AIRSWARM_SCENARIO_DIR) + "/waypoint_v3.json");
    CHECK(v3.name == "waypoint_v3");
    CHECK(v3.approach == Approach::Formation);
    REQUIRE(v3.airships.size() == 3);
    CHECK_FALSE(v3.airships[0].slot.has_value());
    CHECK(v3.airships[1].slot->rho_d_m == 20.0);
    CHECK(v3.airships[2].slot->zeta_d_rad == doctest::Approx(-0.7853981633974483));
    CHECK(v3.trim_table.has_value());
    CHECK(v3.trim_table->airspeeds_mps.size() == 74);

    for (const char* name :
         {"target_formation7.json", "waypoint_boids4.json", "target_boids4.json",
          "waypoint_rpso4.json", "target_rpso4.json"}) {
        const Scenario sc = load_scenario(std::string(AIRSWARM_SCENARIO_DIR) + "/" + name);
        CHECK_NOTHROW(validate_scenario(sc));
    }
}

TEST_CASE("missing scenario file names the path") {
    try {
        load_scenario("no_such_scenario.json");
        FAIL("expected ScenarioError");
    } catch (const ScenarioError& e) {
        CHECK(std::string(e.what()).find("no_such_scenario.json") != std::string::npos);
    }
}
