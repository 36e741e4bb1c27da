#include "airswarm/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "airswarm/errors.hpp"

namespace airswarm {

double round_serialized(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return std::strtod(buf, nullptr);
}

namespace {

MetricStats finish(const std::vector<double>& samples) {
    MetricStats s;
    s.samples = samples.size();
    if (samples.empty()) return s;
    double sum = 0.0;
    for (double x : samples) {
        sum += x;
        if (x > s.max_m) s.max_m = x;
    }
    s.mean_m = sum / static_cast<double>(samples.size());
    double sq = 0.0;
    for (double x : samples) sq += (x - s.mean_m) * (x - s.mean_m);
    s.std_m = std::sqrt(sq / static_cast<double>(samples.size()));
    return s;
}

}  // namespace

MetricsSummary compute_metrics(const Trace& trace, double transient_s) {
    if (trace.records.empty()) {
        throw ConfigError("compute_metrics: empty trace");
    }
    MetricsSummary out;
    out.transient_s = transient_s;
    std::vector<std::vector<double>> per_ship(trace.airship_count);
    std::vector<double> centre;
    for (const TraceRecord& rec : trace.records) {
        if (round_serialized(rec.t_s) < transient_s) continue;
        centre.push_back(round_serialized(rec.centre_goal_dist_m));
        for (std::size_t i = 0; i < trace.airship_count; ++i) {
            per_ship[i].push_back(round_serialized(rec.airships[i].goal_dist_m));
        }
    }
    out.per_airship.reserve(trace.airship_count);
    for (const auto& samples : per_ship) out.per_airship.push_back(finish(samples));
    out.swarm_centre = finish(centre);
    return out;
}

}  // namespace airswarm
