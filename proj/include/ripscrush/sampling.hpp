#pragma once

/** Seeded random inputs for the randomized property modes. */

#include <cstdint>
#include <random>
#include <vector>

#include "ripscrush/metric.hpp"

namespace ripscrush {

using Rng = std::mt19937_64;

/** `count` integer points in [lo, hi]^n (repeats allowed). */
std::vector<RationalPoint> random_integer_points(Rng& rng, std::size_t n, std::size_t count, Coord lo, Coord hi);

/**
 * A random admissible tau in dimension n: contains the origin, every last
 * coordinate is nonnegative, d1 diameter at most 2n-1. Coordinates are
 * rationals with denominators up to `max_den`; at most `max_points` points.
 */
std::vector<RationalPoint> random_admissible_tau(Rng& rng, std::size_t n, std::size_t max_points,
                                                 std::int64_t max_den);

/** A random rational in [lo, hi] with denominator at most max_den. */
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t max_den);

}  // namespace ripscrush
