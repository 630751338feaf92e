#include "ripscrush/cases.hpp"

#include <algorithm>

#include "ripscrush/parallel.hpp"

namespace ripscrush {

bool WindowConfiguration::terminal() const
{
    return std::all_of(upper.begin(), upper.end(), [](Coord b) { return b == 0; });
}

std::vector<LatticePoint> WindowConfiguration::window_points(MetricSpec metric) const
{
    const LatticePoint origin = LatticePoint::origin(dim);
    std::vector<LatticePoint> out{origin};
    const std::int64_t threshold = metric.squared() ? scale * scale : scale;

    LatticePoint cur;
    for (std::size_t i = 0; i + 1 < dim; ++i)
        cur.coords.push_back(lower[i]);
    cur.coords.push_back(0);
    auto lo = [&](std::size_t i) { return i + 1 < dim ? lower[i] : Coord{0}; };
    while (true) {
        if (lex_compare(cur, origin) > 0 && raw_distance(cur.coords, origin.coords, metric) <= threshold)
            out.push_back(cur);
        std::size_t i = 0;
        while (i < dim && cur[i] == upper[i]) {
            cur[i] = lo(i);
            ++i;
        }
        if (i == dim)
            break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

PatternKey WindowConfiguration::key(MetricSpec metric) const
{
    PatternKey k;
    const auto pts = window_points(metric);
    for (std::size_t i = 1; i < pts.size(); ++i)
        k.offsets.insert(k.offsets.end(), pts[i].coords.begin(), pts[i].coords.end());
    return k;
}

std::vector<WindowConfiguration> enumerate_cases(std::size_t n, const Rational& r)
{
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    if (r < 1)
        throw std::invalid_argument("case enumeration needs scale >= 1");
    if (denominator_i64(r) != 1)
        throw std::invalid_argument("case enumeration needs an integral scale, got " + to_string(r));
    const Coord rr = numerator_i64(r);

    // digits: a_1..a_{n-1} in [-r,0], then b_1..b_n in [0,r]; last digit fastest
    const std::size_t digits = 2 * n - 1;
    std::vector<Coord> lo(digits), hi(digits);
    for (std::size_t d = 0; d < digits; ++d) {
        lo[d] = d + 1 < n ? -rr : 0;
        hi[d] = d + 1 < n ? 0 : rr;
    }
    std::vector<Coord> cur = lo;
    std::vector<WindowConfiguration> out;
    while (true) {
        WindowConfiguration c;
        c.dim = n;
        c.scale = rr;
        c.lower.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(n - 1));
        c.upper.assign(cur.begin() + static_cast<std::ptrdiff_t>(n - 1), cur.end());
        out.push_back(std::move(c));
        std::size_t d = digits;
        while (d > 0 && cur[d - 1] == hi[d - 1]) {
            cur[d - 1] = lo[d - 1];
            --d;
        }
        if (d == 0)
            break;
        ++cur[d - 1];
    }
    return out;
}

const char* to_string(CaseStatus status)
{
    switch (status) {
    case CaseStatus::Witnessed: return "witnessed";
    case CaseStatus::Terminal: return "terminal";
    case CaseStatus::Failed: return "failed";
    }
    return "?";
}

std::size_t CaseReport::count(CaseStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [s](const CaseRow& r) { return r.status == s; }));
}

std::size_t CaseReport::largest_witness() const
{
    std::size_t best = 0;
    for (const auto& r : rows)
        best = std::max(best, r.witness.size());
    return best;
}

CaseReport conjecture_search(std::size_t n, const Rational& r, const CaseSearchOptions& opts)
{
    auto configs = enumerate_cases(n, r);
    if (opts.limit && configs.size() > opts.limit)
        configs.resize(opts.limit);

    CaseReport report;
    report.dim = n;
    report.scale = r;
    report.metric = opts.metric;
    report.max_witness_size = opts.max_witness_size ? opts.max_witness_size : n;
    report.rows.resize(configs.size());

    parallel_for(configs.size(), opts.threads, [&](std::size_t i) {
        CaseRow& row = report.rows[i];
        row.config = configs[i];
        auto pts = row.config.window_points(opts.metric);
        row.window_size = pts.size() - 1;
        if (row.window_size == 0) {
            row.status = CaseStatus::Terminal;
            return;
        }
        const NeighborhoodGraph g(std::move(pts), opts.metric, r, 1);
        const AliveMask alive = g.all_alive();
        // case rows already run in parallel; the inner search stays sequential
        const auto found = find_witness(g, 0, default_candidates(g, 0, alive), alive, {report.max_witness_size, 1});
        if (!found) {
            row.status = CaseStatus::Failed;
            return;
        }
        row.status = CaseStatus::Witnessed;
        for (VertexId v : found->members)
            row.witness.push_back(g.point(v));
        std::sort(row.witness.begin(), row.witness.end(), LexLess{});
    });
    return report;
}

}  // namespace ripscrush
