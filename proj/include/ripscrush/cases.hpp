#pragma once

/**
 * Finite case analysis for lexicographic crushing of box grids at integer
 * scale r. Recentred at the lex-least alive point, a residual grid is the set
 * of points of prod_{i<n}[a_i, b_i] x [0, b_n] that come lexicographically
 * after the origin, with a_i <= 0 <= b_i. Only offsets of size <= r can
 * matter, so every a_i, b_i is clipped to [-r, r]: (r+1)^(2n-1) shapes cover
 * every box grid of every size.
 */

#include <cstdint>
#include <vector>

#include "ripscrush/crush.hpp"

namespace ripscrush {

struct WindowConfiguration
{
    std::size_t dim = 0;
    Coord scale = 0;
    std::vector<Coord> lower;  // a_1 .. a_{n-1}, each in [-r, 0]
    std::vector<Coord> upper;  // b_1 .. b_n, each in [0, r]

    /** No point other than the anchor is alive. */
    bool terminal() const;

    /** Origin first, then the alive points within scale of it, in lex order. */
    std::vector<LatticePoint> window_points(MetricSpec metric) const;

    /** The same key classify_local_pattern would produce for this window. */
    PatternKey key(MetricSpec metric) const;
};

/**
 * Every clipped configuration for dimension n at scale r, in odometer order
 * (a_1 slowest .. b_n fastest). Throws std::invalid_argument for
 * non-integral r, r < 1 or n < 1.
 */
std::vector<WindowConfiguration> enumerate_cases(std::size_t n, const Rational& r);

enum class CaseStatus
{
    Witnessed,
    Terminal,
    Failed,
};

const char* to_string(CaseStatus status);

struct CaseRow
{
    WindowConfiguration config;
    CaseStatus status = CaseStatus::Failed;
    std::vector<LatticePoint> witness;  // offsets from the anchor
    std::size_t window_size = 0;
};

struct CaseReport
{
    std::size_t dim = 0;
    Rational scale;
    MetricSpec metric;
    std::size_t max_witness_size = 0;
    std::vector<CaseRow> rows;

    std::size_t count(CaseStatus s) const;
    /** Every non-terminal configuration has a witness. */
    bool all_witnessed() const { return count(CaseStatus::Failed) == 0; }
    std::size_t largest_witness() const;
};

struct CaseSearchOptions
{
    MetricSpec metric = kManhattan;
    std::size_t max_witness_size = 0;  // 0 means n
    unsigned threads = 1;
    /** Optional cap on the number of configurations examined (0 = all). */
    std::size_t limit = 0;
};

/**
 * Runs the witness search at the anchor of every configuration. When every
 * row is witnessed or terminal, lexicographic crushing succeeds on every
 * finite box grid at (n, r) in this metric.
 */
CaseReport conjecture_search(std::size_t n, const Rational& r, const CaseSearchOptions& opts = {});

}  // namespace ripscrush
