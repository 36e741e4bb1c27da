#include "airswarm/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace airswarm {

DistanceMatrix pairwise_distances(std::span<const Vec3> positions) {
    const std::size_t n = positions.size();
    DistanceMatrix m;
    m.size = n;
    m.values.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = planar_distance(positions[i], positions[j]);
            m.values[i * n + j] = d;
            m.values[j * n + i] = d;
        }
    }
    return m;
}

double cluster_entropy_at(double h_m, const DistanceMatrix& matrix) {
    const std::size_t n = matrix.size;
    if (n == 0) return 0.0;
    double entropy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t members = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (matrix.at(i, j) <= h_m) ++members;
        }
        const double p = static_cast<double>(members) / static_cast<double>(n);
        entropy -= p * std::log2(p);
    }
    return entropy;
}

EntropyResult total_entropy(std::span<const Vec3> positions) {
    const DistanceMatrix m = pairwise_distances(positions);
    const std::size_t n = m.size;
    EntropyResult out;
    if (n == 0) return out;

    std::vector<double> thresholds;
    thresholds.reserve(n * (n - 1) / 2 + 1);
    thresholds.push_back(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m.at(i, j) > 0.0) thresholds.push_back(m.at(i, j));
        }
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    out.curve.reserve(thresholds.size());
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
        const double h = thresholds[k];
        const double entropy = cluster_entropy_at(h, m);
        out.curve.emplace_back(h, entropy);
        if (k + 1 < thresholds.size()) {
            out.total_bits_m += entropy * (thresholds[k + 1] - h);
        }
    }
    return out;
}

}  // namespace airswarm
