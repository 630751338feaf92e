#include "ripscrush/geometry.hpp"

#include "ripscrush/lp.hpp"

namespace ripscrush {

namespace {

std::size_t uniform_dim(std::span<const RationalPoint> points)
{
    if (points.empty())
        throw EmptyPointSet("empty point set");
    const std::size_t n = points.front().size();
    for (const auto& p : points)
        if (p.size() != n)
            throw DimensionMismatch(n, p.size());
    return n;
}

Rational dot(const std::vector<int>& s, const RationalPoint& x)
{
    Rational acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += s[i] > 0 ? x[i] : Rational(-x[i]);
    return acc;
}

// Sign vectors with first entry +1; the negations are added alongside.
std::vector<std::vector<int>> half_sign_vectors(std::size_t n)
{
    std::vector<std::vector<int>> out;
    const std::size_t count = n == 0 ? 1 : (std::size_t{1} << (n - 1));
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<int> s(n, 1);
        for (std::size_t i = 1; i < n; ++i)
            if (mask & (std::size_t{1} << (i - 1)))
                s[i] = -1;
        out.push_back(std::move(s));
    }
    return out;
}

// min R subject to d1(x_k, c) <= R for all k, c within `box`.
LPResult l1_minimax(std::span<const RationalPoint> points, const Box* box)
{
    const std::size_t n = uniform_dim(points);
    RationalLP lp;
    for (std::size_t i = 0; i < n; ++i) {
        VariableBounds b;
        if (box) {
            b.lower = box->sides[i].lo;
            b.upper = box->sides[i].hi;
        }
        lp.add_variable(0, b);
    }
    const std::size_t r = lp.add_variable(1, {Rational(0), std::nullopt});
    for (auto s : half_sign_vectors(n)) {
        for (int sign : {1, -1}) {
            std::vector<int> sv = s;
            if (sign < 0)
                for (auto& v : sv)
                    v = -v;
            Rational best = dot(sv, points.front());
            for (const auto& p : points) {
                Rational d = dot(sv, p);
                if (d > best)
                    best = std::move(d);
            }
            std::vector<Rational> coeffs(n + 1, Rational(0));
            for (std::size_t i = 0; i < n; ++i)
                coeffs[i] = sv[i];
            coeffs[r] = 1;
            lp.add_constraint(std::move(coeffs), Relation::GreaterEqual, best);
        }
    }
    return solve_lp(lp);
}

Rational max_distance(std::span<const RationalPoint> points, const RationalPoint& c)
{
    Rational best = 0;
    for (const auto& p : points) {
        Rational d = l1_distance(p, c);
        if (d > best)
            best = std::move(d);
    }
    return best;
}

}  // namespace

EnclosingBall enclosing_ball(std::span<const RationalPoint> points, MetricSpec metric)
{
    const std::size_t n = uniform_dim(points);
    const Box box = bounding_box(points);
    EnclosingBall ball;
    switch (metric.kind()) {
    case Metric::L2:
        throw UnsupportedMetric("enclosing balls are only computed for d1 and d_inf");
    case Metric::Linf:
        ball.radius = 0;
        for (const auto& side : box.sides) {
            ball.center.push_back((side.lo + side.hi) / 2);
            Rational half = (side.hi - side.lo) / 2;
            if (half > ball.radius)
                ball.radius = std::move(half);
        }
        return ball;
    case Metric::L1: {
        const LPResult res = l1_minimax(points, nullptr);
        if (res.status != LPStatus::Optimal)
            throw std::logic_error("enclosing-ball LP did not reach an optimum");
        RationalPoint c(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n));
        ball.center = box.clamp(c);
        ball.radius = res.objective;
        if (max_distance(points, ball.center) != ball.radius)
            throw std::logic_error("clamped centre changed the enclosing radius");
        return ball;
    }
    }
    throw UnsupportedMetric("unknown metric");
}

EnclosingBall enclosing_ball_per_point(std::span<const RationalPoint> points)
{
    const std::size_t n = uniform_dim(points);
    RationalLP lp;
    for (std::size_t i = 0; i < n; ++i)
        lp.add_variable();
    const std::size_t r = lp.add_variable(1, {Rational(0), std::nullopt});
    for (const auto& p : points) {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < n; ++i)
            t.push_back(lp.add_variable(0, {Rational(0), std::nullopt}));
        for (std::size_t i = 0; i < n; ++i) {
            // t >= x - c  and  t >= c - x
            std::vector<Rational> up(lp.variables(), Rational(0));
            up[t[i]] = 1;
            up[i] = 1;
            lp.add_constraint(up, Relation::GreaterEqual, p[i]);
            std::vector<Rational> down(lp.variables(), Rational(0));
            down[t[i]] = 1;
            down[i] = -1;
            lp.add_constraint(down, Relation::GreaterEqual, -p[i]);
        }
        std::vector<Rational> sum(lp.variables(), Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            sum[t[i]] = 1;
        sum[r] = -1;
        lp.add_constraint(sum, Relation::LessEqual, 0);
    }
    for (auto& c : lp.constraints)
        c.coeffs.resize(lp.variables());
    const LPResult res = solve_lp(lp);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("per-point enclosing-ball LP did not reach an optimum");
    EnclosingBall ball;
    ball.center = bounding_box(points).clamp(RationalPoint(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n)));
    ball.radius = res.objective;
    return ball;
}

Rational jung_ratio(std::span<const RationalPoint> points, MetricSpec metric)
{
    if (points.size() < 2)
        throw std::invalid_argument("the Jung ratio needs at least two points");
    const DistanceValue diam = diameter(points, metric);
    if (diam.value == 0)
        throw std::invalid_argument("the Jung ratio needs two distinct points");
    return enclosing_ball(points, metric).radius / diam.value;
}

Rational jung_bound(std::size_t n)
{
    return Rational(static_cast<long>(n), static_cast<long>(n + 1));
}

Box unit_half_box(std::size_t n)
{
    Box b;
    for (std::size_t i = 0; i + 1 < n; ++i)
        b.sides.push_back({Rational(-1), Rational(1)});
    b.sides.push_back({Rational(0), Rational(1)});
    return b;
}

void check_lec_input(std::span<const RationalPoint> tau, const Rational* kappa)
{
    if (tau.empty())
        throw PreconditionViolation("tau must contain the origin (it is empty)");
    const std::size_t n = uniform_dim(tau);
    if (n < 2)
        throw PreconditionViolation("dimension n must exceed 1");
    const RationalPoint origin(n, Rational(0));
    bool has_origin = false;
    for (const auto& p : tau) {
        if (p == origin)
            has_origin = true;
        if (p.back() < 0)
            throw PreconditionViolation("point " + to_string(p) + " has a negative last coordinate");
    }
    if (!has_origin)
        throw PreconditionViolation("tau must contain the origin");
    const Rational limit = 2 * static_cast<long>(n) - 1;
    if (diameter(tau, kManhattan).value > limit)
        throw PreconditionViolation("Diam(tau) exceeds 2n-1 = " + to_string(limit));
    if (kappa) {
        if (*kappa < jung_bound(n))
            throw PreconditionViolation("kappa must be at least n/(n+1) = " + to_string(jung_bound(n)));
        if (*kappa >= 1)
            throw PreconditionViolation("kappa must be below 1");
    }
}

LecConstruction lec_center_construct(std::span<const RationalPoint> tau, const Rational& kappa)
{
    check_lec_input(tau, &kappa);
    const std::size_t n = tau.front().size();
    const Rational span_len = 2 * static_cast<long>(n) - 1;

    LecConstruction out;
    out.kappa = kappa;
    out.diameter = diameter(tau, kManhattan).value;
    const EnclosingBall ball = enclosing_ball(tau, kManhattan);
    out.enclosing_center = ball.center;
    out.enclosing_radius = ball.radius;
    out.lambda = 1 / (span_len * kappa);
    out.chain_bound = 1 + span_len - 1 / kappa;
    out.target = span_len - (1 - kappa) / kappa;

    for (const auto& v : ball.center)
        out.center.push_back(out.lambda * v);

    const Box tau_box = bounding_box(tau);
    out.center_in_boxes = unit_half_box(n).contains(out.center) && tau_box.contains(out.center);
    out.radius_within_jung = out.enclosing_radius <= kappa * out.diameter && out.enclosing_radius <= span_len * kappa;

    const RationalPoint origin(n, Rational(0));
    out.distances_within_target = true;
    for (const auto& y : tau) {
        LecTraceEntry e;
        e.point = y;
        e.to_enclosing_center = l1_distance(y, out.enclosing_center);
        e.to_origin = l1_distance(y, origin);
        e.convex_bound = out.lambda * e.to_enclosing_center + (1 - out.lambda) * e.to_origin;
        e.to_center = l1_distance(y, out.center);
        if (e.to_center > e.convex_bound || e.convex_bound > out.chain_bound || e.to_center > out.target)
            out.distances_within_target = false;
        out.trace.push_back(std::move(e));
    }
    if (out.chain_bound > out.target)
        out.distances_within_target = false;
    return out;
}

LecConstruction lec_center_construct(std::span<const RationalPoint> tau)
{
    if (tau.empty())
        throw PreconditionViolation("tau must contain the origin (it is empty)");
    return lec_center_construct(tau, jung_bound(tau.front().size()));
}

LecFeasibility lec_feasibility(std::size_t n, const Rational& rho, std::span<const RationalPoint> tau)
{
    check_lec_input(tau);
    if (tau.front().size() != n)
        throw PreconditionViolation("tau lives in dimension " + std::to_string(tau.front().size()) + ", expected " +
                                    std::to_string(n));
    if (rho <= 0)
        throw PreconditionViolation("rho must be positive");
    const Box allowed = unit_half_box(n).intersect(bounding_box(tau));
    LecFeasibility out;
    const LPResult res = l1_minimax(tau, &allowed);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("LEC LP did not reach an optimum");
    out.min_radius = res.objective;
    out.center.assign(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n));
    out.holds = out.min_radius <= Rational(2 * static_cast<long>(n) - 1) - rho;
    return out;
}

bool lec_verify(std::size_t n, const Rational& rho, std::span<const RationalPoint> tau)
{
    return lec_feasibility(n, rho, tau).holds;
}

RationalPoint snap_to_sublattice(const RationalPoint& c, const RationalPoint& x, std::int64_t m)
{
    if (c.size() != x.size())
        throw DimensionMismatch(c.size(), x.size());
    if (c.empty())
        throw std::invalid_argument("cannot snap a zero-dimensional point");
    if (m <= 0)
        throw std::invalid_argument("m must be positive");
    for (const auto& v : x)
        if (denominator_i64(v * m) != 1)
            throw std::invalid_argument("x must lie on (1/m)Z^n");

    const Rational step(1, m);
    RationalPoint out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        const Rational scaled = c[j] * m;
        if (c[j] > x[j])
            out[j] = floor(scaled) / m;
        else if (c[j] < x[j])
            out[j] = ceil(scaled) / m;
        else
            out[j] = c[j];
    }
    if (out.back() == x.back())
        out.back() = x.back() + step;
    return out;
}

}  // namespace ripscrush
