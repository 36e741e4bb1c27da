#pragma once

#include <cstdint>
#include <optional>

#include "airswarm/scenario.hpp"
#include "airswarm/trace.hpp"

namespace airswarm {

/// Runs the mission loop: per tick, every airship's guidance command is
/// computed from the previous tick's published states, logged, and applied to
/// the plant. Deterministic: identical (scenario, seed) yields a bit-identical
/// trace. Throws RunAbortedError with the step index if any state goes
/// non-finite.
Trace run_simulation(const Scenario& scenario,
                     std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace airswarm
