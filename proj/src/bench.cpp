#include "ripscrush/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace ripscrush {

namespace {

constexpr unsigned kMaxRounds = 1000;

std::int64_t time_once(const GridSpec& grid, const CrushOptions& opts, CrushOutcome& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    out = crush(grid, opts);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opts)
{
    // Rounds visit every extent in turn so slow spells on a shared machine
    // hit all rows alike; each row keeps its best time.
    using clock = std::chrono::steady_clock;
    std::vector<GridSpec> grids;
    std::vector<BenchRow> rows;
    for (Coord e : opts.extents) {
        grids.push_back(GridSpec::cube(opts.dim, 0, e, opts.metric, opts.scale));
        BenchRow row;
        row.extent = e;
        row.points = grids.back().point_count();
        row.ok = true;
        row.micros_memo = row.micros_plain = std::numeric_limits<std::int64_t>::max();
        rows.push_back(row);
    }
    CrushOptions memo;
    memo.threads = opts.threads;
    CrushOptions plain = memo;
    plain.memoize = false;

    const auto start = clock::now();
    const double budget = opts.min_seconds * static_cast<double>(grids.size());
    for (unsigned round = 0; round < kMaxRounds; ++round) {
        if (round >= std::max(1u, opts.repeats) &&
            std::chrono::duration<double>(clock::now() - start).count() >= budget)
            break;
        for (std::size_t i = 0; i < grids.size(); ++i) {
            BenchRow& row = rows[i];
            CrushOutcome out;
            row.micros_memo = std::min(row.micros_memo, time_once(grids[i], memo, out));
            row.ok = row.ok && out.ok();
            row.steps = out.stats.steps;
            row.searches_memo = out.stats.searches;
            row.distinct_patterns = out.stats.distinct_patterns;
            row.micros_plain = std::min(row.micros_plain, time_once(grids[i], plain, out));
            row.ok = row.ok && out.ok();
        }
    }
    for (auto& row : rows) {
        row.micros_memo = std::max<std::int64_t>(row.micros_memo, 1);
        row.micros_plain = std::max<std::int64_t>(row.micros_plain, 1);
    }
    return rows;
}

Rational linearity_ratio(const BenchRow& a, const BenchRow& b, bool memoized)
{
    const std::int64_t ta = memoized ? a.micros_memo : a.micros_plain;
    const std::int64_t tb = memoized ? b.micros_memo : b.micros_plain;
    return Rational(tb, ta) / Rational(static_cast<long>(b.points), static_cast<long>(a.points));
}

}  // namespace ripscrush
