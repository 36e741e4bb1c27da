#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace airswarm {

/// A kinematic state violated an invariant (e.g. non-unit attitude quaternion).
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter or configuration value is outside its documented range.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Goal and vehicle are (near-)coincident so the bearing is undefined;
/// callers hold the previously computed errors for this tick.
struct BearingUndefinedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A swarm rule was evaluated on a swarm too small to define it.
struct UndefinedRuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scenario file failed to load or validate; message names the offending field.
struct ScenarioError : std::runtime_error {
    explicit ScenarioError(const std::string& field, const std::string& what)
        : std::runtime_error("scenario field '" + field + "': " + what), field_name(field) {}
    std::string field_name;
};

/// File could not be read, written or parsed; message carries the path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simulation aborted mid-run (non-finite state); carries the failing step.
struct RunAbortedError : std::runtime_error {
    RunAbortedError(std::size_t step, const std::string& what)
        : std::runtime_error("run aborted at step " + std::to_string(step) + ": " + what),
          step_index(step) {}
    std::size_t step_index;
};

}  // namespace airswarm
