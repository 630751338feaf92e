#include <doctest.h>

#include <optional>

#include "ripscrush/geometry.hpp"
#include "ripscrush/sampling.hpp"

using namespace ripscrush;

namespace {

// Solves A z = b exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_system(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= a[i][i];
    return b;
}

// Smallest d1 radius by enumerating vertices of {(c, R) : s.c + R >= max_k s.x_k}.
Rational radius_by_vertices(const std::vector<RationalPoint>& pts)
{
    const std::size_t n = pts.front().size();
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Rational> row(n + 1, Rational(1));
        for (std::size_t i = 0; i < n; ++i)
            row[i] = (mask >> i & 1) ? -1 : 1;
        Rational best;
        bool first = true;
        for (const auto& p : pts) {
            Rational v = 0;
            for (std::size_t i = 0; i < n; ++i)
                v += row[i] * p[i];
            if (first || v > best)
                best = v;
            first = false;
        }
        rows.push_back(row);
        rhs.push_back(best);
    }
    std::optional<Rational> best;
    std::vector<std::size_t> pick(n + 1);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t depth) {
        if (depth == n + 1) {
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            for (auto i : pick) {
                a.push_back(rows[i]);
                b.push_back(rhs[i]);
            }
            const auto z = solve_system(a, b);
            if (!z)
                return;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                Rational v = 0;
                for (std::size_t k = 0; k <= n; ++k)
                    v += rows[i][k] * (*z)[k];
                if (v < rhs[i])
                    return;
            }
            if (!best || (*z)[n] < *best)
                best = (*z)[n];
            return;
        }
        for (std::size_t i = from; i < rows.size(); ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    REQUIRE(best.has_value());
    return *best;
}

Rational max_d1(const std::vector<RationalPoint>& pts, const RationalPoint& c)
{
    Rational m = 0;
    for (const auto& p : pts)
        m = std::max(m, l1_distance(p, c));
    return m;
}

}  // namespace

TEST_CASE("enclosing ball examples")
{
    const std::vector<RationalPoint> single{{Rational(1, 2), 3}};
    const auto b0 = enclosing_ball(single);
    CHECK(b0.radius == 0);
    CHECK(b0.center == single.front());

    const std::vector<RationalPoint> a{{1, 0}, {0, 1}};
    const auto b1 = enclosing_ball(a);
    CHECK(b1.radius == 1);
    CHECK(b1.center[0] == b1.center[1]);
    CHECK(bounding_box(a).contains(b1.center));

    const std::vector<RationalPoint> two{{0, 0}, {2, 0}};
    const auto b2 = enclosing_ball(two, kChebyshev);
    CHECK(b2.radius == 1);
    CHECK(b2.center == RationalPoint{1, 0});

    CHECK_THROWS_AS(enclosing_ball(a, kEuclidean), UnsupportedMetric);
    CHECK_THROWS_AS(enclosing_ball(std::vector<RationalPoint>{}), EmptyPointSet);
}

TEST_CASE("enclosing radius agrees with vertex enumeration and the per-point program")
{
    Rng rng(2024);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + t % 3;
        const std::size_t k = 1 + t % 6;
        auto pts = random_integer_points(rng, n, k, -4, 4);
        for (auto& p : pts)
            for (auto& v : p)
                v /= 1 + t % 3;
        const auto ball = enclosing_ball(pts);
        CHECK(ball.radius == radius_by_vertices(pts));
        CHECK(max_d1(pts, ball.center) == ball.radius);
        CHECK(bounding_box(pts).contains(ball.center));
        const auto alt = enclosing_ball_per_point(pts);
        CHECK(alt.radius == ball.radius);
        CHECK(max_d1(pts, alt.center) == alt.radius);
    }
}

TEST_CASE("the d_inf ball is the box midpoint")
{
    Rng rng(9);
    for (int t = 0; t < 200; ++t) {
        const auto pts = random_integer_points(rng, 1 + t % 4, 1 + t % 7, -5, 5);
        const auto ball = enclosing_ball(pts, kChebyshev);
        Rational worst = 0;
        for (const auto& p : pts)
            worst = std::max(worst, distance(p, ball.center, kChebyshev).value);
        CHECK(worst == ball.radius);
        CHECK(2 * ball.radius == diameter(pts, kChebyshev).value);
        CHECK(bounding_box(pts).contains(ball.center));
    }
}

TEST_CASE("Jung ratio examples")
{
    const std::vector<RationalPoint> a{{1, 0}, {0, 1}};
    CHECK(jung_ratio(a) == Rational(1, 2));
    const std::vector<RationalPoint> cross{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    CHECK(jung_ratio(cross) == Rational(1, 2));
    CHECK(jung_bound(3) == Rational(3, 4));
    const std::vector<RationalPoint> one{{0, 0}};
    CHECK_THROWS_AS(jung_ratio(one), std::invalid_argument);
    const std::vector<RationalPoint> same{{1, 1}, {1, 1}};
    CHECK_THROWS_AS(jung_ratio(same), std::invalid_argument);
}

TEST_CASE("a three-dimensional configuration attains ratio 3/4")
{
    // exhaustive search over subsets of the cube vertices {-1,1}^3
    std::vector<RationalPoint> verts;
    for (int m = 0; m < 8; ++m)
        verts.push_back({(m & 1) ? 1 : -1, (m & 2) ? 1 : -1, (m & 4) ? 1 : -1});
    Rational best = 0;
    std::vector<RationalPoint> arg;
    for (int s = 1; s < 256; ++s) {
        std::vector<RationalPoint> pts;
        for (int i = 0; i < 8; ++i)
            if (s >> i & 1)
                pts.push_back(verts[i]);
        if (pts.size() < 2)
            continue;
        const Rational r = jung_ratio(pts);
        CHECK(r <= jung_bound(3));
        if (r > best) {
            best = r;
            arg = pts;
        }
    }
    CHECK(best == Rational(3, 4));
    CHECK(arg.size() == 4);
}

TEST_CASE("random point sets respect the Jung bound")
{
    Rng rng(77);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto pts = random_integer_points(rng, n, 2 + t % 9, -5, 5);
        if (diameter(pts).value == 0)
            continue;
        CHECK(jung_ratio(pts) <= jung_bound(n));
    }
}

TEST_CASE("near-centre construction examples")
{
    const std::vector<RationalPoint> origin{{0, 0}};
    const auto c0 = lec_center_construct(origin);
    CHECK(c0.center == RationalPoint{0, 0});
    CHECK(c0.holds());

    const std::vector<RationalPoint> seg{{0, 0}, {3, 0}};
    const auto c1 = lec_center_construct(seg, Rational(2, 3));
    CHECK(c1.lambda == Rational(1, 2));
    CHECK(c1.target == Rational(5, 2));
    CHECK(c1.enclosing_center[1] == 0);
    CHECK(c1.center[0] * 2 == c1.enclosing_center[0]);
    CHECK(c1.holds());
    for (const auto& e : c1.trace)
        CHECK(e.to_center <= Rational(5, 2));
}

TEST_CASE("construction preconditions name the violated clause")
{
    const std::vector<RationalPoint> no_origin{{1, 0}};
    CHECK_THROWS_WITH_AS(lec_center_construct(no_origin), doctest::Contains("origin"), PreconditionViolation);
    const std::vector<RationalPoint> below{{0, 0}, {0, -1}};
    CHECK_THROWS_WITH_AS(lec_center_construct(below), doctest::Contains("negative"), PreconditionViolation);
    const std::vector<RationalPoint> wide{{0, 0}, {4, 0}};
    CHECK_THROWS_WITH_AS(lec_center_construct(wide), doctest::Contains("Diam"), PreconditionViolation);
    const std::vector<RationalPoint> ok{{0, 0}, {1, 1}};
    CHECK_THROWS_WITH_AS(lec_center_construct(ok, Rational(1, 2)), doctest::Contains("kappa"), PreconditionViolation);
    CHECK_THROWS_AS(lec_center_construct(ok, Rational(1)), PreconditionViolation);
    const std::vector<RationalPoint> line{{0}, {1}};
    CHECK_THROWS_WITH_AS(lec_center_construct(line), doctest::Contains("n must"), PreconditionViolation);
}

TEST_CASE("random admissible sets satisfy the construction and the verifier")
{
    Rng rng(55);
    for (std::size_t n = 2; n <= 4; ++n)
        for (int t = 0; t < 150; ++t) {
            const auto tau = random_admissible_tau(rng, n, 8, 6);
            const auto c = lec_center_construct(tau);
            CHECK(c.holds());
            CHECK(c.target == Rational(2 * static_cast<long>(n) - 1) - Rational(1, static_cast<long>(n)));
            CHECK(unit_half_box(n).contains(c.center));
            CHECK(bounding_box(tau).contains(c.center));
            CHECK(max_d1(tau, c.center) <= c.target);
            CHECK(lec_verify(n, Rational(1, static_cast<long>(n)), tau));
            // a larger kappa still works with its own redundancy
            const Rational k2 = (jung_bound(n) + 1) / 2;
            CHECK(lec_center_construct(tau, k2).holds());
        }
}

TEST_CASE("LEC verification examples and monotonicity")
{
    const std::vector<RationalPoint> seg{{0, 0}, {3, 0}};
    CHECK_FALSE(lec_verify(2, 2, seg));
    CHECK(lec_verify(2, Rational(1, 2), seg));
    const auto f = lec_feasibility(2, 2, seg);
    CHECK(f.min_radius == 2);
    CHECK(unit_half_box(2).contains(f.center));

    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        const auto tau = random_admissible_tau(rng, 3, 6, 4);
        const auto feas = lec_feasibility(3, Rational(1, 3), tau);
        const Rational rho_max = 5 - feas.min_radius;  // largest redundancy that holds
        CHECK(lec_verify(3, rho_max, tau));
        CHECK(lec_verify(3, rho_max / 2, tau));
        CHECK_FALSE(lec_verify(3, rho_max + Rational(1, 100), tau));
    }
    CHECK_THROWS_AS(lec_verify(3, 1, seg), PreconditionViolation);
    CHECK_THROWS_AS(lec_verify(2, 0, seg), PreconditionViolation);
}

TEST_CASE("snapping examples")
{
    const RationalPoint c{Rational(5, 7), Rational(-2, 7), Rational(1, 5)};
    CHECK(snap_to_sublattice(c, {0, 0, 0}, 3) == RationalPoint{Rational(2, 3), 0, Rational(1, 3)});
    const RationalPoint on{Rational(1, 2), Rational(3, 2)};
    CHECK(snap_to_sublattice(on, {0, 0}, 2) == on);
    CHECK(snap_to_sublattice({0, Rational(1, 4)}, {0, 0}, 2) == RationalPoint{0, Rational(1, 2)});
    CHECK_THROWS_AS(snap_to_sublattice({0, 0}, {0, Rational(1, 3)}, 2), std::invalid_argument);
    CHECK_THROWS_AS(snap_to_sublattice({0, 0}, {0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(snap_to_sublattice({0, 0}, {0, 0, 0}, 1), DimensionMismatch);
}

TEST_CASE("snapping moves little and lands above the anchor")
{
    Rng rng(13);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + t % 4;
        const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 9)(rng);
        RationalPoint x(n), c(n);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = Rational(std::uniform_int_distribution<std::int64_t>(-20, 20)(rng), m);
            c[j] = x[j] + random_rational(rng, j + 1 < n ? Rational(-1) : Rational(0), 1, 12);
        }
        const RationalPoint s = snap_to_sublattice(c, x, m);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(abs(s[j] - c[j]) <= Rational(1, m));
            CHECK(denominator_i64(s[j] * m) == 1);
            if (j + 1 < n)
                CHECK(abs(s[j] - x[j]) <= 1);
        }
        CHECK(l1_distance(s, c) <= Rational(static_cast<long>(n), m));
        CHECK(s.back() > x.back());
        CHECK(s.back() - x.back() <= 1);
    }
}
