#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ripscrush/cases.hpp"
#include "ripscrush/reduction.hpp"

using namespace ripscrush;

namespace {

VertexId id(const NeighborhoodGraph& g, const LatticePoint& p)
{
    const auto v = g.find(p);
    REQUIRE(v.has_value());
    return *v;
}

std::vector<VertexId> ids(const NeighborhoodGraph& g, const std::vector<LatticePoint>& pts)
{
    std::vector<VertexId> out;
    for (const auto& p : pts)
        out.push_back(id(g, p));
    std::sort(out.begin(), out.end());
    return out;
}

// The residual window of Z^3 around the origin with a = (-3,-3), b = (3,3,3).
NeighborhoodGraph full_window3()
{
    WindowConfiguration c{3, 3, {-3, -3}, {3, 3, 3}};
    return NeighborhoodGraph(c.window_points(kManhattan), kManhattan, 3);
}

std::vector<LatticePoint> random_cloud(std::mt19937_64& rng, std::size_t count, int span, std::size_t n = 2)
{
    std::uniform_int_distribution<int> coord(0, span);
    std::set<std::vector<Coord>> uniq;
    while (uniq.size() < count) {
        std::vector<Coord> c;
        for (std::size_t i = 0; i < n; ++i)
            c.push_back(coord(rng));
        uniq.insert(c);
    }
    std::vector<LatticePoint> pts;
    for (const auto& c : uniq)
        pts.emplace_back(c);
    return pts;
}

}  // namespace

TEST_CASE("domination examples")
{
    std::vector<LatticePoint> line;
    for (Coord x = 0; x <= 6; ++x)
        line.push_back({x});
    const NeighborhoodGraph g1(line, kManhattan, 1);
    CHECK(is_dominated(g1, 0, 1));
    CHECK_FALSE(is_dominated(g1, 1, 2));
    CHECK_THROWS_AS(is_dominated(g1, 2, 2), std::invalid_argument);

    std::vector<LatticePoint> sq;
    for (Coord y = 0; y <= 4; ++y)
        for (Coord x = 0; x <= 4; ++x)
            sq.push_back({x, y});
    const NeighborhoodGraph g2(sq, kManhattan, 2);
    AliveMask alive = g2.all_alive();
    // after removing everything lex-before (2,1), it is dominated by (3,2)
    for (VertexId v = 0; v < g2.size(); ++v)
        alive[v] = lex_compare(g2.point(v), LatticePoint{2, 1}) >= 0;
    CHECK(is_dominated(g2, id(g2, {2, 1}), id(g2, {3, 2}), alive));

    std::vector<LatticePoint> z;
    for (Coord c = 0; c <= 3; ++c)
        for (Coord b = 0; b <= 3; ++b)
            for (Coord a = 0; a <= 3; ++a)
                z.push_back({a, b, c});
    const NeighborhoodGraph g3(z, kManhattan, 3);
    const VertexId o = id(g3, {0, 0, 0});
    for (VertexId b = 0; b < g3.size(); ++b)
        if (b != o)
            CHECK_FALSE(is_dominated(g3, o, b));
}

TEST_CASE("the three-point witness handles the full window in dimension 3")
{
    const NeighborhoodGraph g = full_window3();
    const VertexId o = id(g, {0, 0, 0});
    CHECK(check_local_domination(g, o, ids(g, {{0, 0, 1}, {1, 1, 0}, {-1, 1, 0}})));
    CHECK_FALSE(check_local_domination(g, o, ids(g, {{0, 0, 1}})));
}

TEST_CASE("malformed witnesses are rejected")
{
    const NeighborhoodGraph g = full_window3();
    const VertexId o = id(g, {0, 0, 0});
    const std::vector<VertexId> empty;
    CHECK_THROWS_AS(check_local_domination(g, o, empty), MalformedWitness);
    const std::vector<VertexId> self{o};
    CHECK_THROWS_AS(check_local_domination(g, o, self), MalformedWitness);
    const std::vector<VertexId> far = ids(g, {{3, 0, 0}, {0, 3, 0}});
    CHECK_THROWS_AS(check_local_domination(g, o, far), MalformedWitness);
    const VertexId p = id(g, {0, 0, 1});
    const std::vector<VertexId> twice{p, p};
    CHECK_THROWS_AS(check_local_domination(g, o, twice), MalformedWitness);
    AliveMask alive = g.all_alive();
    alive[p] = false;
    const std::vector<VertexId> dead{p};
    CHECK_THROWS_AS(check_local_domination(g, o, dead, alive), MalformedWitness);
}

TEST_CASE("a witness may contain points of the simplex it extends")
{
    // b in sigma is allowed: sigma + b = sigma is still a simplex
    const NeighborhoodGraph g({{0}, {1}}, kManhattan, 1);
    const std::vector<VertexId> w{1};
    CHECK(check_local_domination(g, 0, w));
}

TEST_CASE("find_witness examples")
{
    std::vector<LatticePoint> line;
    for (Coord x = 0; x <= 5; ++x)
        line.push_back({x});
    const NeighborhoodGraph g1(line, kManhattan, 1);
    const auto w1 = find_witness(g1, 0, 1);
    REQUIRE(w1);
    CHECK(w1->members == Clique{1});
    CHECK(w1->mode() == StepMode::Dominated);

    const NeighborhoodGraph g3 = full_window3();
    const VertexId o = id(g3, {0, 0, 0});
    CHECK_FALSE(find_witness(g3, o, 1));
    const auto w3 = find_witness(g3, o, 3);
    REQUIRE(w3);
    CHECK(w3->members.size() >= 2);
    CHECK(check_local_domination(g3, o, w3->members));
}

TEST_CASE("find_witness validates its candidates")
{
    std::vector<LatticePoint> line;
    for (Coord x = 0; x <= 5; ++x)
        line.push_back({x});
    const NeighborhoodGraph g(line, kManhattan, 1);
    const std::vector<VertexId> far{3};
    CHECK_THROWS_AS(find_witness(g, 0, far, g.all_alive(), {1, 1}), std::invalid_argument);
    AliveMask alive = g.all_alive();
    alive[1] = false;
    const std::vector<VertexId> dead{1};
    CHECK_THROWS_AS(find_witness(g, 0, dead, alive, {1, 1}), std::invalid_argument);
}

TEST_CASE("domination agrees with the all-cliques quantifier")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 80; ++t) {
        const auto pts = random_cloud(rng, 6 + t % 10, 4);
        const std::int64_t r = 1 + t % 3;
        const NeighborhoodGraph g(pts, kManhattan, r);
        const auto adj = oracle::adjacency(pts, 1, r);
        const std::uint32_t all = (1u << pts.size()) - 1;
        for (VertexId a = 0; a < g.size(); ++a)
            for (VertexId b = 0; b < g.size(); ++b) {
                if (a == b)
                    continue;
                const bool brute = oracle::locally_dominated(adj, all, a, 1u << b);
                CHECK(is_dominated(g, a, b) == brute);
                const std::vector<VertexId> single{b};
                if (g.adjacent(a, b))
                    CHECK(check_local_domination(g, a, single) == brute);
            }
    }
}

TEST_CASE("local domination over maximal cliques agrees with all cliques")
{
    std::mt19937_64 rng(37);
    for (int t = 0; t < 60; ++t) {
        const auto pts = random_cloud(rng, 8 + t % 5, 3);
        const std::int64_t r = 2;
        const NeighborhoodGraph g(pts, kManhattan, r);
        const auto adj = oracle::adjacency(pts, 1, r);
        const std::uint32_t all = (1u << pts.size()) - 1;
        for (VertexId a = 0; a < g.size(); ++a) {
            const auto nb = g.neighbors(a);
            // every clique of neighbours up to size 3 as a witness
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i; j < nb.size(); ++j)
                    for (std::size_t k = j; k < nb.size(); ++k) {
                        std::set<VertexId> s{nb[i], nb[j], nb[k]};
                        std::vector<VertexId> w(s.begin(), s.end());
                        if (!is_clique(g, w))
                            continue;
                        std::uint32_t mask = 0;
                        for (VertexId v : w)
                            mask |= 1u << v;
                        CHECK(check_local_domination(g, a, w) == oracle::locally_dominated(adj, all, a, mask));
                    }
        }
    }
}

TEST_CASE("metric local crushing agrees with graph local domination")
{
    // For point sets of at most 12 points: L crushes x iff for every A with x in
    // A and Diam(A) <= r there is b in L with Diam(A + b) <= r.
    std::mt19937_64 rng(41);
    for (int t = 0; t < 25; ++t) {
        const auto pts = random_cloud(rng, 7 + t % 6, 3);
        const std::int64_t r = 2;
        const NeighborhoodGraph g(pts, kManhattan, r);
        const std::size_t n = pts.size();
        auto diam_ok = [&](std::uint32_t s) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if ((s >> i & 1) && (s >> j & 1) && distance(pts[i], pts[j]).value > r)
                        return false;
            return true;
        };
        for (VertexId x = 0; x < n; ++x) {
            const auto nb = g.neighbors(x);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i; j < nb.size(); ++j) {
                    std::set<VertexId> s{nb[i], nb[j]};
                    std::vector<VertexId> w(s.begin(), s.end());
                    std::uint32_t lmask = 0;
                    for (VertexId v : w)
                        lmask |= 1u << v;
                    if (!diam_ok(lmask))
                        continue;
                    bool metric = true;
                    for (std::uint32_t a = 1; a < (1u << n) && metric; ++a) {
                        if (!(a >> x & 1) || !diam_ok(a))
                            continue;
                        bool ext = false;
                        for (VertexId b : w)
                            ext = ext || diam_ok(a | (1u << b));
                        metric = ext;
                    }
                    CHECK(check_local_domination(g, x, w) == metric);
                }
        }
    }
}

TEST_CASE("witnesses found are valid, monotone and thread independent")
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        const auto pts = random_cloud(rng, 14, 4, 3);
        const NeighborhoodGraph g(pts, kManhattan, 3);
        const AliveMask alive = g.all_alive();
        for (VertexId a = 0; a < g.size(); ++a) {
            const auto cand = default_candidates(g, a, alive);
            const auto w1 = find_witness(g, a, cand, alive, {3, 1});
            const auto w4 = find_witness(g, a, cand, alive, {3, 4});
            CHECK(w1.has_value() == w4.has_value());
            if (!w1)
                continue;
            CHECK(w1->members == w4->members);
            CHECK(check_local_domination(g, a, w1->members, alive));
            // any clique superset of the witness inside the window also works
            for (VertexId extra : cand) {
                std::vector<VertexId> bigger = w1->members;
                if (std::find(bigger.begin(), bigger.end(), extra) != bigger.end())
                    continue;
                bigger.push_back(extra);
                std::sort(bigger.begin(), bigger.end());
                if (is_clique(g, bigger))
                    CHECK(check_local_domination(g, a, bigger, alive));
            }
        }
    }
}

TEST_CASE("pruning candidates beyond the scale never changes the outcome")
{
    // A point farther than r from a cannot extend a simplex through a, so adding
    // such points as candidates cannot create a witness.
    std::mt19937_64 rng(47);
    for (int t = 0; t < 40; ++t) {
        const auto pts = random_cloud(rng, 10, 4);
        const NeighborhoodGraph g(pts, kManhattan, 2);
        const auto adj = oracle::adjacency(pts, 1, 2);
        const std::uint32_t all = (1u << pts.size()) - 1;
        for (VertexId a = 0; a < g.size(); ++a) {
            const bool windowed = find_witness(g, a, 2).has_value();
            // brute force over all pairs of vertices (any distance) forming a clique
            bool any = false;
            for (VertexId u = 0; u < g.size() && !any; ++u)
                for (VertexId v = u; v < g.size() && !any; ++v) {
                    if (u == a || v == a)
                        continue;
                    const std::uint32_t m = (1u << u) | (1u << v);
                    if (oracle::is_clique_mask(adj, m) && oracle::locally_dominated(adj, all, a, m))
                        any = true;
                }
            CHECK(windowed == any);
        }
    }
}

TEST_CASE("preference order puts the diagonal first in the plane")
{
    std::vector<LatticePoint> sq;
    for (Coord y = 0; y <= 3; ++y)
        for (Coord x = 0; x <= 3; ++x)
            sq.push_back({x, y});
    const NeighborhoodGraph g(sq, kManhattan, 2);
    const VertexId a = id(g, {1, 1});
    const auto order = preference_order(g, a, default_candidates(g, a, g.all_alive()));
    CHECK(g.point(order.front()) == LatticePoint{2, 2});
}

TEST_CASE("step modes print and parse")
{
    CHECK(std::string(to_string(StepMode::Dominated)) == "dominated");
    CHECK(parse_step_mode("locally-dominated") == StepMode::LocallyDominated);
    CHECK_THROWS_AS(parse_step_mode("other"), std::invalid_argument);
}
