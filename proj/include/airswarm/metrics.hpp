#pragma once

#include <cstddef>
#include <vector>

#include "airswarm/trace.hpp"

namespace airswarm {

struct MetricStats {
    double mean_m{0.0};
    double std_m{0.0};  // population standard deviation
    double max_m{0.0};
    std::size_t samples{0};

    constexpr bool operator==(const MetricStats&) const = default;
};

/// Per-airship goal/slot error statistics plus the swarm-centre error.
struct MetricsSummary {
    std::vector<MetricStats> per_airship;
    MetricStats swarm_centre;
    double transient_s{0.0};

    bool operator==(const MetricsSummary&) const = default;
};

/// Rounds through the trace serialization precision (9 significant digits),
/// so metrics recomputed from an emitted CSV match the in-memory result
/// exactly.
double round_serialized(double value);

/// Mean / population std / max of the per-step Euclidean errors, skipping
/// records before transient_s. All samples pass through round_serialized.
MetricsSummary compute_metrics(const Trace& trace, double transient_s = 0.0);

}  // namespace airswarm
