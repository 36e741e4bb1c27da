#pragma once

#include <cstddef>
#include <vector>

namespace airswarm {

/// Per-airship signals logged each step. Commands and mode are the ones
/// computed for the state at this timestamp.
struct AirshipRecord {
    double pn_m{0.0};
    double pe_m{0.0};
    double pd_m{0.0};
    double yaw_rad{0.0};
    double u_mps{0.0};
    double v_mps{0.0};
    double r_radps{0.0};
    double u_ref_mps{0.0};
    double r_ref_radps{0.0};
    int mode{0};  // 0 = cruise, 1 = hover
    double beta_rad{0.0};
    double goal_dist_m{0.0};
};

struct TraceRecord {
    double t_s{0.0};
    int waypoint_index{0};
    double entropy_bits_m{0.0};
    double centre_goal_dist_m{0.0};
    std::vector<AirshipRecord> airships;
};

/// Uniformly sampled simulation log (one record per dt, including t = 0).
struct Trace {
    std::size_t airship_count{0};
    std::vector<TraceRecord> records;
};

}  // namespace airswarm
