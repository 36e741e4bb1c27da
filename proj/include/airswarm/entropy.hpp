#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "airswarm/vec3.hpp"

namespace airswarm {

/// Dense symmetric matrix of pairwise planar distances with zero diagonal.
struct DistanceMatrix {
    std::size_t size{0};
    std::vector<double> values;  // row-major size*size

    double at(std::size_t i, std::size_t j) const { return values[i * size + j]; }
};

DistanceMatrix pairwise_distances(std::span<const Vec3> positions);

/// Shannon entropy of the per-member cluster proportions at radius h:
/// p_i = |{j : D_ij <= h}| / N, H = -sum p_i log2 p_i (bits).
double cluster_entropy_at(double h_m, const DistanceMatrix& matrix);

/// Total social entropy S = integral of H(h) dh, plus the breakpoints of the
/// piecewise-constant H curve (h strictly increasing, final H = 0).
struct EntropyResult {
    double total_bits_m{0.0};
    std::vector<std::pair<double, double>> curve;  // (h, H(h)) at each breakpoint
};

/// Exact integration: H(h) is constant between consecutive distinct pairwise
/// distances and identically zero beyond the largest one, so the integral is
/// a finite sum of interval lengths times the H value on each interval.
EntropyResult total_entropy(std::span<const Vec3> positions);

}  // namespace airswarm
