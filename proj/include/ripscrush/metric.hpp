#pragma once

/**
 * Points, d_p distances (p in {1, 2, inf}), the reversed-index lexicographic
 * order and bounding boxes. Everything here is exact: integer points measure
 * with 64-bit integers, rational points with GMP rationals.
 */

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ripscrush/rational.hpp"

namespace ripscrush {

using Coord = std::int64_t;

class DimensionMismatch : public std::invalid_argument
{
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs);
};

class EmptyPointSet : public std::invalid_argument
{
public:
    explicit EmptyPointSet(const std::string& what) : std::invalid_argument(what) {}
};

struct LatticePoint
{
    std::vector<Coord> coords;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<Coord> c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<Coord> c) : coords(c) {}

    /** The all-zero point of the given dimension. */
    static LatticePoint origin(std::size_t dim) { return LatticePoint(std::vector<Coord>(dim, 0)); }

    std::size_t dim() const noexcept { return coords.size(); }
    Coord operator[](std::size_t i) const { return coords[i]; }
    Coord& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);

struct LatticePointHash
{
    std::size_t operator()(const LatticePoint& p) const noexcept;
};

using RationalPoint = std::vector<Rational>;

RationalPoint to_rational(const LatticePoint& p, std::int64_t denominator = 1);

enum class Metric
{
    L1,
    L2,
    Linf,
};

/** A d_p metric restricted to the exactly comparable cases. */
class MetricSpec
{
public:
    constexpr MetricSpec() = default;
    constexpr MetricSpec(Metric m) : metric_(m) {}

    /** Accepts "1", "d1", "l1", "2", "d2", "l2", "inf", "dinf", "linf", "infinity". */
    static MetricSpec parse(std::string_view text);

    constexpr Metric kind() const noexcept { return metric_; }
    /** Whether distances are reported squared (d2 only). */
    constexpr bool squared() const noexcept { return metric_ == Metric::L2; }
    std::string name() const;

    friend constexpr bool operator==(MetricSpec, MetricSpec) = default;

private:
    Metric metric_ = Metric::L1;
};

inline constexpr MetricSpec kManhattan{Metric::L1};
inline constexpr MetricSpec kEuclidean{Metric::L2};
inline constexpr MetricSpec kChebyshev{Metric::Linf};

enum class DistanceKind
{
    Exact,
    Squared,
};

/**
 * A distance in the form that can be compared exactly: the value itself for
 * d1 and d_inf, its square for d2.
 */
struct DistanceValue
{
    DistanceKind kind = DistanceKind::Exact;
    Rational value;

    /** Throws std::invalid_argument when the kinds differ. */
    friend std::strong_ordering operator<=>(const DistanceValue& a, const DistanceValue& b);
    friend bool operator==(const DistanceValue& a, const DistanceValue& b);

    /** distance <= threshold, squaring the threshold for the squared kind. */
    bool within(const Rational& threshold) const;
};

/** The raw integer distance: d1 / d_inf, or the squared d2 value. */
std::int64_t raw_distance(std::span<const Coord> x, std::span<const Coord> y, MetricSpec metric);

DistanceValue distance(const LatticePoint& x, const LatticePoint& y, MetricSpec metric = kManhattan);
DistanceValue distance(const RationalPoint& x, const RationalPoint& y, MetricSpec metric = kManhattan);

/** Plain d1 between rational points. */
Rational l1_distance(const RationalPoint& x, const RationalPoint& y);

DistanceValue diameter(std::span<const LatticePoint> points, MetricSpec metric = kManhattan);
DistanceValue diameter(std::span<const RationalPoint> points, MetricSpec metric = kManhattan);

/**
 * Reversed-index lexicographic order: x precedes y iff the largest index where
 * they differ has x_i < y_i. The last coordinate is the dominant digit.
 */
std::strong_ordering lex_compare(std::span<const Coord> x, std::span<const Coord> y);
std::strong_ordering lex_compare(const LatticePoint& x, const LatticePoint& y);
std::strong_ordering lex_compare(const RationalPoint& x, const RationalPoint& y);

struct LexLess
{
    bool operator()(const LatticePoint& a, const LatticePoint& b) const { return lex_compare(a, b) < 0; }
};

struct Interval
{
    Rational lo;
    Rational hi;

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/** Axis-aligned box, one closed interval per coordinate. */
struct Box
{
    std::vector<Interval> sides;

    std::size_t dim() const noexcept { return sides.size(); }
    bool contains(const RationalPoint& p) const;
    /** Coordinate-wise clamp into the box. */
    RationalPoint clamp(const RationalPoint& p) const;
    /** Coordinate-wise intersection; empty optional-like result signalled by has_empty_side(). */
    Box intersect(const Box& other) const;
    bool has_empty_side() const;

    friend bool operator==(const Box&, const Box&) = default;
};

Box bounding_box(std::span<const RationalPoint> points);
Box bounding_box(std::span<const LatticePoint> points);

std::string to_string(const LatticePoint& p);
std::string to_string(const RationalPoint& p);

}  // namespace ripscrush
