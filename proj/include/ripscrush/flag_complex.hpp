#pragma once

/**
 * The Rips complex at scale r, held implicitly as the clique complex of its
 * neighbourhood graph. Vertex identity is the index into the immutable point
 * list; removals are expressed with an alive mask instead of rebuilding.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ripscrush/bitset.hpp"
#include "ripscrush/metric.hpp"
#include "ripscrush/rational.hpp"

namespace ripscrush {

using VertexId = std::uint32_t;

/** Sorted vertex ids, pairwise adjacent in the host graph. */
using Clique = std::vector<VertexId>;

/** alive[v] says whether v is still present in the residual complex. */
using AliveMask = std::vector<bool>;

class UnknownVertex : public std::out_of_range
{
public:
    explicit UnknownVertex(VertexId v);
};

class DuplicatePoint : public std::invalid_argument
{
public:
    explicit DuplicatePoint(const LatticePoint& p);
};

class NeighborhoodGraph
{
public:
    /**
     * Points are integer numerators over a common `denominator` (the lattice
     * (1/m)Z^n is stored as Z^n with m = denominator). Two vertices are
     * adjacent iff they differ and their distance is at most `scale` (closed).
     */
    NeighborhoodGraph(std::vector<LatticePoint> points, MetricSpec metric, Rational scale,
                      std::int64_t denominator = 1);

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    MetricSpec metric() const noexcept { return metric_; }
    const Rational& scale() const noexcept { return scale_; }
    std::int64_t denominator() const noexcept { return denominator_; }

    const LatticePoint& point(VertexId v) const;
    const std::vector<LatticePoint>& points() const noexcept { return points_; }

    /** Sorted neighbour ids of v (v itself excluded). */
    std::span<const VertexId> neighbors(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    std::size_t edge_count() const;

    /** Whether two arbitrary points (in numerator units) are within scale. */
    bool within_scale(std::span<const Coord> x, std::span<const Coord> y) const;
    /** Largest raw integer distance (numerator units, squared for d2) that counts as an edge. */
    std::int64_t raw_threshold() const noexcept { return raw_threshold_; }

    std::optional<VertexId> find(const LatticePoint& p) const;
    void check_vertex(VertexId v) const;

    /** Induced subgraph on `vertices`, keeping their given order. */
    NeighborhoodGraph induced(std::span<const VertexId> vertices) const;

    AliveMask all_alive() const { return AliveMask(size(), true); }

private:
    void build_pairwise();
    void build_by_offsets(const std::vector<LatticePoint>& offsets);

    std::vector<LatticePoint> points_;
    std::size_t dim_ = 0;
    MetricSpec metric_;
    Rational scale_;
    std::int64_t denominator_ = 1;
    std::int64_t raw_threshold_ = 0;
    std::vector<std::vector<VertexId>> adjacency_;
    std::unordered_map<LatticePoint, VertexId, LatticePointHash> index_;
};

/**
 * All integer offsets o != 0 with raw distance(o, 0) <= raw_threshold, sorted
 * by the reversed-index lexicographic order.
 */
std::vector<LatticePoint> ball_offsets(std::size_t dim, MetricSpec metric, std::int64_t raw_threshold);

/** Pairwise adjacency; empty sets and singletons are cliques. Throws UnknownVertex. */
bool is_clique(const NeighborhoodGraph& g, std::span<const VertexId> vertices);

/**
 * The alive neighbours of an anchor together with their induced adjacency, as
 * bitsets over local indices. This is everything needed to reason about the
 * star of the anchor.
 */
struct LocalWindow
{
    VertexId anchor = 0;
    std::vector<VertexId> vertices;     // alive neighbours of anchor, ascending id
    std::vector<Bitset> adjacency;      // adjacency[i] over local indices

    static LocalWindow around(const NeighborhoodGraph& g, VertexId anchor, const AliveMask& alive);

    std::size_t size() const noexcept { return vertices.size(); }

    /**
     * Maximal cliques of the window graph (each one, together with the
     * anchor, is a maximal clique containing the anchor). Reported as bitsets
     * over local indices in a deterministic order. An empty window yields a
     * single empty clique.
     */
    std::vector<Bitset> maximal_cliques() const;
};

/**
 * Calls `visit` once per inclusion-maximal clique of the residual graph that
 * contains v. Deterministic order (Bron-Kerbosch with pivoting, lowest ids
 * first). Throws UnknownVertex if v is not an alive vertex.
 */
void for_each_maximal_clique_containing(const NeighborhoodGraph& g, VertexId v, const AliveMask& alive,
                                        const std::function<void(const Clique&)>& visit);

std::vector<Clique> maximal_cliques_containing(const NeighborhoodGraph& g, VertexId v, const AliveMask& alive);
std::vector<Clique> maximal_cliques_containing(const NeighborhoodGraph& g, VertexId v);

/**
 * The link of v: the graph induced on its alive neighbours. Its clique complex
 * is the link of v in the flag complex.
 */
NeighborhoodGraph link_subgraph(const NeighborhoodGraph& g, VertexId v, const AliveMask& alive);
NeighborhoodGraph link_subgraph(const NeighborhoodGraph& g, VertexId v);

}  // namespace ripscrush
