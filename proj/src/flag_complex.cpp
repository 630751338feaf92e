#include "ripscrush/flag_complex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ripscrush {

UnknownVertex::UnknownVertex(VertexId v) : std::out_of_range("unknown vertex " + std::to_string(v)) {}

DuplicatePoint::DuplicatePoint(const LatticePoint& p)
    : std::invalid_argument("duplicate point " + to_string(p))
{
}

namespace {

std::int64_t compute_raw_threshold(const Rational& scale, std::int64_t denominator, MetricSpec metric)
{
    if (scale < 0)
        return -1;
    Rational t = scale * denominator;
    if (metric.squared())
        t *= t;
    return numerator_i64(floor(t));
}

std::int64_t coordinate_bound(std::int64_t raw_threshold, MetricSpec metric)
{
    if (raw_threshold < 0)
        return -1;
    if (!metric.squared())
        return raw_threshold;
    auto b = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(raw_threshold)));
    while (b * b > raw_threshold)
        --b;
    while ((b + 1) * (b + 1) <= raw_threshold)
        ++b;
    return b;
}

// (2b+1)^dim, saturating at `cap`.
std::size_t cube_size(std::int64_t bound, std::size_t dim, std::size_t cap)
{
    std::size_t total = 1;
    const auto side = static_cast<std::size_t>(2 * bound + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > cap / side)
            return cap + 1;
        total *= side;
    }
    return total;
}

}  // namespace

std::vector<LatticePoint> ball_offsets(std::size_t dim, MetricSpec metric, std::int64_t raw_threshold)
{
    std::vector<LatticePoint> out;
    const std::int64_t b = coordinate_bound(raw_threshold, metric);
    if (b < 0)
        return out;
    LatticePoint cur(std::vector<Coord>(dim, -b));
    const LatticePoint zero = LatticePoint::origin(dim);
    while (true) {
        if (cur != zero && raw_distance(cur.coords, zero.coords, metric) <= raw_threshold)
            out.push_back(cur);
        std::size_t i = 0;
        while (i < dim && cur[i] == b) {
            cur[i] = -b;
            ++i;
        }
        if (i == dim)
            break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

NeighborhoodGraph::NeighborhoodGraph(std::vector<LatticePoint> points, MetricSpec metric, Rational scale,
                                     std::int64_t denominator)
    : points_(std::move(points)), metric_(metric), scale_(std::move(scale)), denominator_(denominator)
{
    if (denominator_ <= 0)
        throw std::invalid_argument("lattice denominator must be positive");
    dim_ = points_.empty() ? 0 : points_.front().dim();
    index_.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].dim() != dim_)
            throw DimensionMismatch(dim_, points_[i].dim());
        if (!index_.emplace(points_[i], static_cast<VertexId>(i)).second)
            throw DuplicatePoint(points_[i]);
    }
    raw_threshold_ = compute_raw_threshold(scale_, denominator_, metric_);
    adjacency_.assign(points_.size(), {});

    const std::int64_t bound = coordinate_bound(raw_threshold_, metric_);
    if (bound < 0)
        return;
    const std::size_t cap = std::min<std::size_t>(points_.size(), 1u << 20);
    if (cube_size(bound, dim_, cap) <= cap)
        build_by_offsets(ball_offsets(dim_, metric_, raw_threshold_));
    else
        build_pairwise();
}

void NeighborhoodGraph::build_pairwise()
{
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (raw_distance(points_[i].coords, points_[j].coords, metric_) <= raw_threshold_) {
                adjacency_[i].push_back(static_cast<VertexId>(j));
                adjacency_[j].push_back(static_cast<VertexId>(i));
            }
    for (auto& nb : adjacency_)
        std::sort(nb.begin(), nb.end());
}

void NeighborhoodGraph::build_by_offsets(const std::vector<LatticePoint>& offsets)
{
    for (std::size_t i = 0; i < points_.size(); ++i) {
        auto& nb = adjacency_[i];
        for (const auto& o : offsets) {
            auto it = index_.find(points_[i] + o);
            if (it != index_.end())
                nb.push_back(it->second);
        }
        std::sort(nb.begin(), nb.end());
    }
}

const LatticePoint& NeighborhoodGraph::point(VertexId v) const
{
    check_vertex(v);
    return points_[v];
}

std::span<const VertexId> NeighborhoodGraph::neighbors(VertexId v) const
{
    check_vertex(v);
    return adjacency_[v];
}

bool NeighborhoodGraph::adjacent(VertexId u, VertexId v) const
{
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t NeighborhoodGraph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& nb : adjacency_)
        total += nb.size();
    return total / 2;
}

bool NeighborhoodGraph::within_scale(std::span<const Coord> x, std::span<const Coord> y) const
{
    return raw_distance(x, y, metric_) <= raw_threshold_;
}

std::optional<VertexId> NeighborhoodGraph::find(const LatticePoint& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

void NeighborhoodGraph::check_vertex(VertexId v) const
{
    if (v >= points_.size())
        throw UnknownVertex(v);
}

NeighborhoodGraph NeighborhoodGraph::induced(std::span<const VertexId> vertices) const
{
    std::vector<LatticePoint> sub;
    sub.reserve(vertices.size());
    for (VertexId v : vertices)
        sub.push_back(point(v));
    return NeighborhoodGraph(std::move(sub), metric_, scale_, denominator_);
}

bool is_clique(const NeighborhoodGraph& g, std::span<const VertexId> vertices)
{
    for (VertexId v : vertices)
        g.check_vertex(v);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

LocalWindow LocalWindow::around(const NeighborhoodGraph& g, VertexId anchor, const AliveMask& alive)
{
    g.check_vertex(anchor);
    LocalWindow w;
    w.anchor = anchor;
    for (VertexId u : g.neighbors(anchor))
        if (alive[u])
            w.vertices.push_back(u);
    const std::size_t k = w.vertices.size();
    w.adjacency.assign(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i) {
        const auto nb = g.neighbors(w.vertices[i]);
        // both lists are sorted: merge
        std::size_t j = 0;
        for (VertexId u : nb) {
            while (j < k && w.vertices[j] < u)
                ++j;
            if (j == k)
                break;
            if (w.vertices[j] == u)
                w.adjacency[i].set(j);
        }
    }
    return w;
}

namespace {

// Bron-Kerbosch with Tomita pivoting over bitsets.
struct CliqueEnumerator
{
    const std::vector<Bitset>& adj;
    std::vector<Bitset>& out;

    void run(Bitset& r, Bitset p, Bitset x)
    {
        if (p.none() && x.none()) {
            out.push_back(r);
            return;
        }
        std::size_t pivot = 0;
        std::size_t best = 0;
        bool have = false;
        const Bitset px = p | x;
        for (std::size_t u = px.first(); u < px.size(); u = px.next(u + 1)) {
            const std::size_t c = p.count_and(adj[u]);
            if (!have || c > best) {
                pivot = u;
                best = c;
                have = true;
            }
        }
        Bitset candidates = p;
        candidates.subtract(adj[pivot]);
        for (std::size_t v = candidates.first(); v < candidates.size(); v = candidates.next(v + 1)) {
            r.set(v);
            run(r, p & adj[v], x & adj[v]);
            r.reset(v);
            p.reset(v);
            x.set(v);
        }
    }
};

}  // namespace

std::vector<Bitset> LocalWindow::maximal_cliques() const
{
    std::vector<Bitset> out;
    const std::size_t k = size();
    Bitset r(k);
    Bitset p(k);
    p.set_all();
    CliqueEnumerator e{adjacency, out};
    e.run(r, p, Bitset(k));
    return out;
}

void for_each_maximal_clique_containing(const NeighborhoodGraph& g, VertexId v, const AliveMask& alive,
                                        const std::function<void(const Clique&)>& visit)
{
    g.check_vertex(v);
    if (alive.size() != g.size() || !alive[v])
        throw UnknownVertex(v);
    const LocalWindow w = LocalWindow::around(g, v, alive);
    for (const Bitset& local : w.maximal_cliques()) {
        Clique c;
        c.reserve(local.count() + 1);
        c.push_back(v);
        for (std::size_t i = local.first(); i < local.size(); i = local.next(i + 1))
            c.push_back(w.vertices[i]);
        std::sort(c.begin(), c.end());
        visit(c);
    }
}

std::vector<Clique> maximal_cliques_containing(const NeighborhoodGraph& g, VertexId v, const AliveMask& alive)
{
    std::vector<Clique> out;
    for_each_maximal_clique_containing(g, v, alive, [&](const Clique& c) { out.push_back(c); });
    return out;
}

std::vector<Clique> maximal_cliques_containing(const NeighborhoodGraph& g, VertexId v)
{
    return maximal_cliques_containing(g, v, g.all_alive());
}

NeighborhoodGraph link_subgraph(const NeighborhoodGraph& g, VertexId v, const AliveMask& alive)
{
    g.check_vertex(v);
    std::vector<VertexId> nb;
    for (VertexId u : g.neighbors(v))
        if (alive[u])
            nb.push_back(u);
    return g.induced(nb);
}

NeighborhoodGraph link_subgraph(const NeighborhoodGraph& g, VertexId v)
{
    return link_subgraph(g, v, g.all_alive());
}

}  // namespace ripscrush
