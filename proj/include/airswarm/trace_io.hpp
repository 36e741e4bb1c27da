#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "airswarm/metrics.hpp"
#include "airswarm/trace.hpp"

namespace airswarm {

/// Formats a double at the trace serialization precision (9 significant
/// digits, '.' decimal separator).
std::string format_serialized(double value);

/// RFC-4180 field quoting: quotes and doubles embedded quotes when the field
/// contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

/// Column order (per airship block repeated for i = 0..N-1):
///   t_s, waypoint_index, entropy_bits_m, centre_goal_dist_m,
///   a{i}_pn_m, a{i}_pe_m, a{i}_pd_m, a{i}_yaw_rad, a{i}_u_mps, a{i}_v_mps,
///   a{i}_r_radps, a{i}_u_ref_mps, a{i}_r_ref_radps, a{i}_mode,
///   a{i}_beta_rad, a{i}_goal_dist_m
void write_csv(const Trace& trace, std::ostream& out);
void write_csv(const Trace& trace, const std::filesystem::path& path);

/// Parses a CSV produced by write_csv back into a Trace.
Trace read_trace_csv(const std::filesystem::path& path);

void write_metrics(const MetricsSummary& summary, std::ostream& out);
void write_metrics(const MetricsSummary& summary, const std::filesystem::path& path);

/// SVG 1.1 map-view plot (east right, north up): one trajectory polyline per
/// airship with an oriented glyph every 20 simulated seconds.
void write_svg(const Trace& trace, std::ostream& out);
void write_svg(const Trace& trace, const std::filesystem::path& path);

}  // namespace airswarm
