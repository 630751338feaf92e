#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ripscrush/crush.hpp"
#include "ripscrush/flag_complex.hpp"

using namespace ripscrush;

namespace {

std::vector<LatticePoint> line(Coord lo, Coord hi)
{
    std::vector<LatticePoint> out;
    for (Coord x = lo; x <= hi; ++x)
        out.push_back({x});
    return out;
}

std::vector<LatticePoint> cube_points(std::size_t n, Coord lo, Coord hi)
{
    return GridSpec::cube(n, lo, hi, kManhattan, 1).points();
}

std::vector<LatticePoint> star_points()
{
    return {{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}};
}

VertexId id(const NeighborhoodGraph& g, const LatticePoint& p)
{
    const auto v = g.find(p);
    REQUIRE(v.has_value());
    return *v;
}

}  // namespace

TEST_CASE("graph construction examples")
{
    const NeighborhoodGraph path(line(0, 3), kManhattan, 1);
    CHECK(path.edge_count() == 3);

    const NeighborhoodGraph cube(cube_points(3, 0, 1), kManhattan, 2);
    CHECK(cube.edge_count() == 24);
    CHECK_FALSE(cube.adjacent(id(cube, {0, 0, 0}), id(cube, {1, 1, 1})));

    const NeighborhoodGraph star(star_points(), kManhattan, 3);
    CHECK(star.edge_count() == 3);
    CHECK(star.neighbors(id(star, {0, 0, 0})).size() == 3);
}

TEST_CASE("adjacency uses the closed threshold and honours rational scales")
{
    const NeighborhoodGraph g(line(0, 4), kManhattan, Rational(3, 2));
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    const NeighborhoodGraph e({{0, 0}, {1, 1}, {2, 0}}, kEuclidean, Rational(3, 2));
    CHECK(e.adjacent(0, 1));   // sqrt 2 <= 3/2
    CHECK_FALSE(e.adjacent(0, 2));
    // numerators over m = 2: points 0 and 3/2 at scale 3/2
    const NeighborhoodGraph h({{0}, {3}, {4}}, kManhattan, Rational(3, 2), 2);
    CHECK(h.adjacent(0, 1));
    CHECK_FALSE(h.adjacent(0, 2));
}

TEST_CASE("duplicate points are rejected")
{
    CHECK_THROWS_AS(NeighborhoodGraph({{0, 0}, {0, 0}}, kManhattan, 1), DuplicatePoint);
}

TEST_CASE("is_clique examples and errors")
{
    const NeighborhoodGraph star(star_points(), kManhattan, 3);
    const VertexId o = id(star, {0, 0, 0}), x = id(star, {3, 0, 0}), y = id(star, {0, 3, 0});
    const std::vector<VertexId> pair{o, x}, triple{o, x, y}, single{y}, none;
    CHECK(is_clique(star, pair));
    CHECK_FALSE(is_clique(star, triple));
    CHECK(is_clique(star, single));
    CHECK(is_clique(star, none));
    const std::vector<VertexId> bad{0, 99};
    CHECK_THROWS_AS(is_clique(star, bad), UnknownVertex);
}

TEST_CASE("maximal cliques through a vertex")
{
    const NeighborhoodGraph path(line(0, 2), kManhattan, 1);
    const auto mc = maximal_cliques_containing(path, 1);
    REQUIRE(mc.size() == 2);
    CHECK(mc[0] == Clique{0, 1});
    CHECK(mc[1] == Clique{1, 2});

    const NeighborhoodGraph k3(line(0, 2), kManhattan, 2);
    CHECK(maximal_cliques_containing(k3, 0) == std::vector<Clique>{{0, 1, 2}});

    const NeighborhoodGraph star(star_points(), kManhattan, 3);
    const auto sc = maximal_cliques_containing(star, id(star, {0, 0, 0}));
    CHECK(sc.size() == 3);
    for (const auto& c : sc)
        CHECK(c.size() == 2);
    CHECK_THROWS_AS(maximal_cliques_containing(star, 7), UnknownVertex);
}

TEST_CASE("link subgraphs")
{
    const NeighborhoodGraph path(line(0, 2), kManhattan, 1);
    const auto l = link_subgraph(path, 1);
    CHECK(l.size() == 2);
    CHECK(l.edge_count() == 0);

    const NeighborhoodGraph k4(line(0, 3), kManhattan, 3);
    const auto t = link_subgraph(k4, 0);
    CHECK(t.size() == 3);
    CHECK(t.edge_count() == 3);

    const NeighborhoodGraph grid(cube_points(2, 0, 3), kManhattan, 2);
    const auto g0 = link_subgraph(grid, id(grid, {0, 0}));
    std::set<std::vector<Coord>> expected{{1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}};
    // the 5 neighbours within distance 2 inside the quadrant, plus nothing else
    std::set<std::vector<Coord>> got;
    for (const auto& p : g0.points())
        got.insert(p.coords);
    CHECK(got == expected);
    CHECK_THROWS_AS(link_subgraph(grid, 1000), UnknownVertex);
}

TEST_CASE("offset-based and pairwise construction agree with brute force")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 3;
        const Coord hi = 2 + t % 3;
        const auto pts = cube_points(n, 0, hi);
        for (MetricSpec m : {kManhattan, kEuclidean, kChebyshev}) {
            const std::int64_t r = 1 + t % 3;
            const NeighborhoodGraph g(pts, m, r);
            const int p = m == kManhattan ? 1 : m == kEuclidean ? 2 : 0;
            const auto adj = oracle::adjacency(pts, p, m == kEuclidean ? r * r : r);
            for (VertexId u = 0; u < g.size(); ++u)
                for (VertexId v = 0; v < g.size(); ++v)
                    CHECK(g.adjacent(u, v) == static_cast<bool>(adj[u][v]));
        }
    }
}

TEST_CASE("maximal clique enumeration matches the all-cliques oracle")
{
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> coord(0, 4);
    for (int t = 0; t < 120; ++t) {
        std::set<std::vector<Coord>> uniq;
        const std::size_t want = 5 + t % 10;
        while (uniq.size() < want)
            uniq.insert({coord(rng), coord(rng)});
        std::vector<LatticePoint> pts;
        for (const auto& c : uniq)
            pts.emplace_back(c);
        const std::int64_t r = 1 + t % 4;
        const NeighborhoodGraph g(pts, kManhattan, r);
        const auto adj = oracle::adjacency(pts, 1, r);
        const std::uint32_t all = (1u << pts.size()) - 1;
        const auto cliques = oracle::all_cliques(adj, all);
        for (VertexId v = 0; v < g.size(); ++v) {
            std::set<std::uint32_t> expected;
            for (auto s : cliques) {
                if (!(s >> v & 1))
                    continue;
                bool maximal = true;
                for (std::size_t w = 0; w < pts.size() && maximal; ++w)
                    if (!(s >> w & 1) && oracle::is_clique_mask(adj, s | (1u << w)))
                        maximal = false;
                if (maximal)
                    expected.insert(s);
            }
            std::set<std::uint32_t> got;
            std::uint32_t covered = 0;
            for (const auto& c : maximal_cliques_containing(g, v)) {
                CHECK(is_clique(g, c));
                std::uint32_t s = 0;
                for (VertexId u : c)
                    s |= 1u << u;
                CHECK(got.insert(s).second);  // each exactly once
                covered |= s;
            }
            CHECK(got == expected);
            // union covers the closed neighbourhood
            std::uint32_t closed = 1u << v;
            for (VertexId u : g.neighbors(v))
                closed |= 1u << u;
            CHECK(covered == closed);
        }
    }
}

TEST_CASE("face sufficiency on small graphs")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coord(0, 3);
    for (int t = 0; t < 30; ++t) {
        std::set<std::vector<Coord>> uniq;
        while (uniq.size() < 8)
            uniq.insert({coord(rng), coord(rng)});
        std::vector<LatticePoint> pts;
        for (const auto& c : uniq)
            pts.emplace_back(c);
        const auto adj = oracle::adjacency(pts, 1, 2);
        const auto cliques = oracle::all_cliques(adj, (1u << pts.size()) - 1);
        for (auto big : cliques)
            for (std::size_t b = 0; b < pts.size(); ++b) {
                if (!oracle::is_clique_mask(adj, big | (1u << b)))
                    continue;
                for (auto small : cliques)
                    if ((small & big) == small)
                        CHECK(oracle::is_clique_mask(adj, small | (1u << b)));
            }
    }
}

TEST_CASE("alive masks restrict windows")
{
    const NeighborhoodGraph g(line(0, 4), kManhattan, 2);
    AliveMask alive = g.all_alive();
    alive[1] = false;
    const auto w = LocalWindow::around(g, 2, alive);
    CHECK(w.vertices == std::vector<VertexId>{0, 3, 4});
    alive[2] = false;
    CHECK_THROWS(maximal_cliques_containing(g, 2, alive));
}

TEST_CASE("ball offsets are sorted and complete")
{
    const auto offs = ball_offsets(2, kManhattan, 2);
    CHECK(offs.size() == 12);
    CHECK(std::is_sorted(offs.begin(), offs.end(), LexLess{}));
    CHECK(ball_offsets(3, kChebyshev, 1).size() == 26);
    CHECK(ball_offsets(2, kEuclidean, 2).size() == 8);
}
