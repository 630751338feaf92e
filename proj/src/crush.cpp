#include "ripscrush/crush.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace ripscrush {

GridSpec GridSpec::cube(std::size_t dim, Coord lo, Coord hi, MetricSpec metric, Rational scale, std::int64_t m)
{
    GridSpec g;
    g.ranges.assign(dim, AxisRange{lo, hi});
    g.metric = metric;
    g.scale = std::move(scale);
    g.m = m;
    return g;
}

void GridSpec::validate() const
{
    if (ranges.empty())
        throw std::invalid_argument("grid needs at least one axis");
    for (const auto& r : ranges)
        if (r.lo > r.hi)
            throw std::invalid_argument("empty axis range " + std::to_string(r.lo) + ".." + std::to_string(r.hi));
    if (m <= 0)
        throw std::invalid_argument("lattice denominator m must be positive");
    if (scale <= 0)
        throw std::invalid_argument("scale must be positive");
}

std::size_t GridSpec::point_count() const
{
    std::size_t total = 1;
    for (const auto& r : ranges)
        total *= static_cast<std::size_t>(r.hi - r.lo + 1);
    return total;
}

std::vector<LatticePoint> GridSpec::points() const
{
    validate();
    std::vector<LatticePoint> out;
    out.reserve(point_count());
    LatticePoint cur;
    for (const auto& r : ranges)
        cur.coords.push_back(r.lo);
    // odometer with coordinate 0 fastest: this is exactly the lex order
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < dim() && cur[i] == ranges[i].hi) {
            cur[i] = ranges[i].lo;
            ++i;
        }
        if (i == dim())
            break;
        ++cur[i];
    }
    return out;
}

std::size_t PatternKeyHash::operator()(const PatternKey& k) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ k.offsets.size();
    for (Coord c : k.offsets)
        h = (h ^ static_cast<std::size_t>(c + 0x51)) * 0x100000001b3ULL;
    return h;
}

PatternKey classify_local_pattern(const NeighborhoodGraph& g, VertexId x, const AliveMask& alive)
{
    const LatticePoint& origin = g.point(x);
    std::vector<LatticePoint> offs;
    for (VertexId u : g.neighbors(x))
        if (alive[u])
            offs.push_back(g.point(u) - origin);
    std::sort(offs.begin(), offs.end(), LexLess{});
    PatternKey key;
    key.offsets.reserve(offs.size() * g.dim());
    for (const auto& o : offs)
        key.offsets.insert(key.offsets.end(), o.coords.begin(), o.coords.end());
    return key;
}

namespace {

// Cached outcome for a pattern: witness offsets relative to the anchor, or
// nullopt when no witness exists.
using CachedWitness = std::optional<std::vector<LatticePoint>>;

}  // namespace

CrushRun crush_points(std::vector<LatticePoint> points, MetricSpec metric, const Rational& scale, std::int64_t m,
                      const CrushOptions& opts)
{
    if (points.empty())
        throw std::invalid_argument("cannot crush an empty point set");
    std::sort(points.begin(), points.end(), LexLess{});
    const NeighborhoodGraph g(std::move(points), metric, scale, m);
    const std::size_t n = g.size();
    const std::size_t max_size = opts.max_witness_size ? opts.max_witness_size : std::max<std::size_t>(1, g.dim());

    CrushRun run;
    AliveMask alive(n, true);
    std::unordered_map<PatternKey, CachedWitness, PatternKeyHash> cache;
    std::unordered_map<PatternKey, char, PatternKeyHash> seen;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto x = static_cast<VertexId>(i);
        const LatticePoint& origin = g.point(x);

        std::optional<PatternKey> key;
        if (opts.memoize || opts.record_patterns) {
            key = classify_local_pattern(g, x, alive);
            if (opts.record_patterns && seen.emplace(*key, 0).second)
                run.stats.patterns.push_back(*key);
        }

        std::optional<std::vector<VertexId>> members;
        const CachedWitness* cached = nullptr;
        if (opts.memoize) {
            auto it = cache.find(*key);
            if (it != cache.end())
                cached = &it->second;
        }

        if (cached) {
            ++run.stats.cache_hits;
            if (*cached) {
                std::vector<VertexId> ids;
                for (const auto& off : **cached)
                    ids.push_back(*g.find(origin + off));
                members = std::move(ids);
            }
        } else {
            if (opts.proposer) {
                auto proposal = opts.proposer(g, x, alive);
                if (proposal && !proposal->empty()) {
                    std::sort(proposal->begin(), proposal->end());
                    bool ok = false;
                    try {
                        ok = check_local_domination(g, x, *proposal, alive);
                    } catch (const MalformedWitness&) {
                        ok = false;
                    }
                    if (ok) {
                        members = std::move(proposal);
                        ++run.stats.proposer_hits;
                    }
                }
            }
            if (!members) {
                ++run.stats.searches;
                auto found = find_witness(g, x, default_candidates(g, x, alive), alive, {max_size, opts.threads});
                if (found)
                    members = std::move(found->members);
            }
            if (opts.memoize) {
                CachedWitness entry;
                if (members) {
                    std::vector<LatticePoint> offs;
                    for (VertexId v : *members)
                        offs.push_back(g.point(v) - origin);
                    entry = std::move(offs);
                }
                cache.emplace(*key, std::move(entry));
            }
        }

        if (!members) {
            CrushFailure f;
            f.step = i;
            f.stuck = origin;
            for (VertexId u : g.neighbors(x))
                if (alive[u])
                    f.window.push_back(g.point(u));
            f.remaining = n - i;
            run.failure = std::move(f);
            break;
        }

        CrushStep step;
        step.point = origin;
        for (VertexId v : *members)
            step.witness.push_back(g.point(v));
        std::sort(step.witness.begin(), step.witness.end(), LexLess{});
        step.mode = step.witness.size() == 1 ? StepMode::Dominated : StepMode::LocallyDominated;
        run.steps.push_back(std::move(step));
        alive[x] = false;
    }

    if (!run.failure)
        run.terminal = g.point(static_cast<VertexId>(n - 1));
    run.stats.steps = run.steps.size();
    run.stats.distinct_patterns = opts.memoize ? cache.size() : seen.size();
    return run;
}

CrushOutcome crush(const GridSpec& grid, const CrushOptions& opts)
{
    grid.validate();
    CrushRun run = crush_points(grid.points(), grid.metric, grid.scale, grid.m, opts);
    CrushOutcome out;
    out.stats = std::move(run.stats);
    if (run.failure) {
        out.failure = std::move(run.failure);
        return out;
    }
    CrushCertificate cert;
    cert.grid = grid;
    cert.steps = std::move(run.steps);
    cert.terminal = std::move(*run.terminal);
    out.certificate = std::move(cert);
    return out;
}

}  // namespace ripscrush
