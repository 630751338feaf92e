#pragma once

#include <cstdint>
#include <vector>

#include "ripscrush/crush.hpp"

namespace ripscrush {

struct BenchRow
{
    Coord extent = 0;                 // grid is {0..extent}^n
    std::size_t points = 0;
    std::size_t steps = 0;
    bool ok = false;
    std::int64_t micros_memo = 0;     // best of the repeats
    std::int64_t micros_plain = 0;    // memoisation off
    std::size_t searches_memo = 0;
    std::size_t distinct_patterns = 0;
};

struct BenchOptions
{
    std::size_t dim = 3;
    Rational scale = 3;
    MetricSpec metric = kManhattan;
    std::vector<Coord> extents{4, 6, 8, 10};
    unsigned repeats = 3;
    /** Keep timing rounds going until about this much wall time per extent is spent. */
    double min_seconds = 0.5;
    unsigned threads = 1;
};

std::vector<BenchRow> run_bench(const BenchOptions& opts);

/**
 * (t_b / t_a) / (P_b / P_a) for two bench rows, with the given timing. 1 means
 * exactly linear growth in the point count.
 */
Rational linearity_ratio(const BenchRow& a, const BenchRow& b, bool memoized);

}  // namespace ripscrush
