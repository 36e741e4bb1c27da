#pragma once

#include <cmath>

#include "airswarm/quaternion.hpp"
#include "airswarm/rng.hpp"
#include "airswarm/vec3.hpp"

namespace airswarm::test {

inline Vec3 random_vec3(CounterRng& rng, double lo, double hi) {
    return {rng.next_double(lo, hi), rng.next_double(lo, hi), rng.next_double(lo, hi)};
}

/// Uniformly distributed unit quaternion (Shoemake's subgroup method).
inline Quaternion random_unit_quaternion(CounterRng& rng) {
    const double u1 = rng.next_double();
    const double u2 = rng.next_double(0.0, 2.0 * std::numbers::pi);
    const double u3 = rng.next_double(0.0, 2.0 * std::numbers::pi);
    const double a = std::sqrt(1.0 - u1);
    const double b = std::sqrt(u1);
    return {a * std::sin(u2), a * std::cos(u2), b * std::sin(u3), b * std::cos(u3)};
}

}  // namespace airswarm::test
