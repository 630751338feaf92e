#pragma once

/**
 * Smallest enclosing balls, the Jung ratio Rad/Diam, the local Euclidean
 * crushing (LEC) property and the snapping rule that moves a near-centre onto
 * the sublattice (1/m)Z^n. All computations are exact; d2 is excluded because
 * its centres are irrational in general.
 */

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ripscrush/metric.hpp"

namespace ripscrush {

class PreconditionViolation : public std::invalid_argument
{
public:
    explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

class UnsupportedMetric : public std::invalid_argument
{
public:
    explicit UnsupportedMetric(const std::string& what) : std::invalid_argument(what) {}
};

struct EnclosingBall
{
    RationalPoint center;
    Rational radius;
};

/**
 * Smallest ball (d1 or d_inf) containing `points`. The returned centre lies
 * in the bounding box of the input. For d1 this solves
 *     min R  s.t.  s.c + R >= max_k s.x_k  for every sign vector s,
 * since |v|_1 = max_s s.v. For d_inf the box midpoint is optimal.
 */
EnclosingBall enclosing_ball(std::span<const RationalPoint> points, MetricSpec metric = kManhattan);

/**
 * The same d1 radius from the per-point formulation: t_{k,i} >= +-(x_{k,i} - c_i),
 * sum_i t_{k,i} <= R. Larger LP; kept as an independent route.
 */
EnclosingBall enclosing_ball_per_point(std::span<const RationalPoint> points);

/** Rad/Diam; needs at least two distinct points. */
Rational jung_ratio(std::span<const RationalPoint> points, MetricSpec metric = kManhattan);

/** Upper bound n/(n+1) on the d1 Jung constant. */
Rational jung_bound(std::size_t n);

/** The box [-1,1]^{n-1} x [0,1] that near-centres are confined to. */
Box unit_half_box(std::size_t n);

struct LecTraceEntry
{
    RationalPoint point;
    Rational to_enclosing_center;  // d(y, c')
    Rational to_origin;            // d(y, 0)
    Rational convex_bound;         // lambda d(y,c') + (1-lambda) d(y,0)
    Rational to_center;            // d(y, c_tau)
};

/** Result of the constructive near-centre, with the inequality chain it relies on. */
struct LecConstruction
{
    RationalPoint center;              // c_tau
    RationalPoint enclosing_center;    // c'_tau, inside Box(tau)
    Rational enclosing_radius;         // Rad(tau)
    Rational diameter;                 // Diam(tau)
    Rational kappa;
    Rational lambda;                   // 1 / ((2n-1) kappa)
    Rational chain_bound;              // 1 + (2n-1) - 1/kappa
    Rational target;                   // (2n-1) - (1-kappa)/kappa
    std::vector<LecTraceEntry> trace;

    bool center_in_boxes = false;      // c_tau in unit_half_box and Box(tau)
    bool radius_within_jung = false;   // Rad(tau) <= kappa Diam(tau)... <= (2n-1) kappa
    bool distances_within_target = false;

    bool holds() const { return center_in_boxes && radius_within_jung && distances_within_target; }
};

/**
 * Checks the admissibility conditions on tau: n > 1, the origin belongs to
 * tau, every point has nonnegative last coordinate, Diam(tau) <= 2n-1 (d1),
 * and if `kappa` is given, n/(n+1) <= kappa < 1. Throws PreconditionViolation
 * naming the violated clause.
 */
void check_lec_input(std::span<const RationalPoint> tau, const Rational* kappa = nullptr);

/**
 * Constructs c_tau = c' / ((2n-1) kappa) from an enclosing centre c' in
 * Box(tau) and records every quantity of the bound
 *     d(y, c_tau) <= lambda d(y, c') + (1 - lambda) d(y, 0) <= (2n-1) - (1-kappa)/kappa.
 */
LecConstruction lec_center_construct(std::span<const RationalPoint> tau, const Rational& kappa);
LecConstruction lec_center_construct(std::span<const RationalPoint> tau);

struct LecFeasibility
{
    bool holds = false;
    Rational min_radius;   // min over admissible centres of max_y d(y, c)
    RationalPoint center;  // an optimal admissible centre
};

/**
 * Minimises max_y d1(y, c) over c in unit_half_box(n) intersected with
 * Box(tau) and compares against (2n-1) - rho.
 */
LecFeasibility lec_feasibility(std::size_t n, const Rational& rho, std::span<const RationalPoint> tau);
bool lec_verify(std::size_t n, const Rational& rho, std::span<const RationalPoint> tau);

/**
 * Moves c onto (1/m)Z^n: coordinates j < n go to the nearest multiple of 1/m
 * in the direction of x_j (unchanged if already a multiple); the last
 * coordinate likewise, except that landing on x_n is replaced by x_n + 1/m.
 * x must itself lie on (1/m)Z^n.
 */
RationalPoint snap_to_sublattice(const RationalPoint& c, const RationalPoint& x, std::int64_t m);

}  // namespace ripscrush
