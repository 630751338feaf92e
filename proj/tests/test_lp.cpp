#include <doctest.h>

#include <random>

#include "ripscrush/lp.hpp"

using namespace ripscrush;

TEST_CASE("single-variable programs")
{
    RationalLP lp;
    lp.add_variable(1);
    lp.add_constraint({1}, Relation::GreaterEqual, 3);
    const LPResult r = solve_lp(lp);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.x[0] == 3);
    CHECK(r.objective == 3);

    RationalLP bad;
    bad.add_variable(0);
    bad.add_constraint({1}, Relation::GreaterEqual, 1);
    bad.add_constraint({1}, Relation::LessEqual, 0);
    CHECK(solve_lp(bad).status == LPStatus::Infeasible);

    RationalLP open;
    open.add_variable(-1);
    open.add_constraint({1}, Relation::GreaterEqual, 0);
    CHECK(solve_lp(open).status == LPStatus::Unbounded);
}

TEST_CASE("the enclosing radius of two points in the plane")
{
    // min R : |1-c1| + |c2| <= R, |c1| + |1-c2| <= R via t-variables
    RationalLP lp;
    const auto c1 = lp.add_variable();
    const auto c2 = lp.add_variable();
    const auto R = lp.add_variable(1);
    const std::vector<std::vector<int>> pts{{1, 0}, {0, 1}};
    for (const auto& p : pts) {
        const auto t1 = lp.add_variable(0, {Rational(0), std::nullopt});
        const auto t2 = lp.add_variable(0, {Rational(0), std::nullopt});
        auto row = [&](std::vector<std::pair<std::size_t, int>> terms, Relation rel, Rational rhs) {
            std::vector<Rational> c(lp.variables(), Rational(0));
            for (auto [k, v] : terms)
                c[k] = v;
            lp.add_constraint(c, rel, rhs);
        };
        row({{t1, 1}, {c1, 1}}, Relation::GreaterEqual, p[0]);
        row({{t1, 1}, {c1, -1}}, Relation::GreaterEqual, -p[0]);
        row({{t2, 1}, {c2, 1}}, Relation::GreaterEqual, p[1]);
        row({{t2, 1}, {c2, -1}}, Relation::GreaterEqual, -p[1]);
        row({{t1, 1}, {t2, 1}, {R, -1}}, Relation::LessEqual, 0);
    }
    const LPResult r = solve_lp(lp);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.objective == 1);
}

TEST_CASE("bounds, equalities and redundant rows")
{
    RationalLP lp;
    lp.add_variable(1, {Rational(-2), Rational(5)});
    lp.add_variable(-1, {std::nullopt, Rational(4)});
    lp.add_constraint({1, 1}, Relation::Equal, 3);
    lp.add_constraint({2, 2}, Relation::Equal, 6);  // redundant copy
    const LPResult r = solve_lp(lp);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.x[0] == -1);
    CHECK(r.x[1] == 4);
    CHECK(r.objective == -5);
}

TEST_CASE("malformed programs are rejected")
{
    RationalLP lp;
    lp.add_variable(1, {Rational(3), Rational(1)});
    CHECK_THROWS_AS(solve_lp(lp), MalformedLP);
    RationalLP ragged;
    ragged.add_variable(1);
    ragged.constraints.push_back({{1, 2}, Relation::LessEqual, 1});
    CHECK_THROWS_AS(solve_lp(ragged), MalformedLP);
}

TEST_CASE("two-variable programs agree with vertex enumeration")
{
    // Bounded programs over a box: the optimum is attained at an intersection
    // of two tight constraints (including box faces).
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> coef(-5, 5), rhs(-10, 10);
    for (int t = 0; t < 300; ++t) {
        RationalLP lp;
        lp.add_variable(coef(rng), {Rational(-6), Rational(6)});
        lp.add_variable(coef(rng), {Rational(-6), Rational(6)});
        struct Half
        {
            Rational a, b, c;  // a x + b y <= c
        };
        std::vector<Half> halves{{1, 0, 6}, {-1, 0, 6}, {0, 1, 6}, {0, -1, 6}};
        for (int k = 0; k < 4; ++k) {
            Half h{coef(rng), coef(rng), rhs(rng)};
            lp.add_constraint({h.a, h.b}, Relation::LessEqual, h.c);
            halves.push_back(h);
        }
        std::optional<Rational> best;
        for (std::size_t i = 0; i < halves.size(); ++i)
            for (std::size_t j = i + 1; j < halves.size(); ++j) {
                const Rational det = halves[i].a * halves[j].b - halves[i].b * halves[j].a;
                if (det == 0)
                    continue;
                const Rational x = (halves[i].c * halves[j].b - halves[i].b * halves[j].c) / det;
                const Rational y = (halves[i].a * halves[j].c - halves[i].c * halves[j].a) / det;
                bool ok = true;
                for (const auto& h : halves)
                    ok = ok && h.a * x + h.b * y <= h.c;
                if (!ok)
                    continue;
                const Rational v = lp.objective[0] * x + lp.objective[1] * y;
                if (!best || v < *best)
                    best = v;
            }
        const LPResult r = solve_lp(lp);
        if (!best) {
            CHECK(r.status == LPStatus::Infeasible);
            continue;
        }
        REQUIRE(r.status == LPStatus::Optimal);
        CHECK(r.objective == *best);
        for (const auto& c : lp.constraints)
            CHECK(c.coeffs[0] * r.x[0] + c.coeffs[1] * r.x[1] <= c.rhs);
    }
}
