#include "ripscrush/metric.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

namespace ripscrush {

DimensionMismatch::DimensionMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
{
}

namespace {

void check_dims(std::size_t a, std::size_t b)
{
    if (a != b)
        throw DimensionMismatch(a, b);
}

template <typename Point>
void check_uniform(std::span<const Point> points)
{
    if (points.empty())
        throw EmptyPointSet("empty point set");
    for (const auto& p : points)
        check_dims(points.front().size(), p.size());
}

}  // namespace

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b)
{
    check_dims(a.dim(), b.dim());
    LatticePoint out = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        out[i] += b[i];
    return out;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b)
{
    check_dims(a.dim(), b.dim());
    LatticePoint out = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        out[i] -= b[i];
    return out;
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Coord c : p.coords)
        h = (h ^ std::hash<Coord>{}(c)) * 0x100000001b3ULL;
    return h;
}

RationalPoint to_rational(const LatticePoint& p, std::int64_t denominator)
{
    RationalPoint out;
    out.reserve(p.dim());
    for (Coord c : p.coords)
        out.emplace_back(c, denominator);
    return out;
}

MetricSpec MetricSpec::parse(std::string_view text)
{
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "1" || t == "d1" || t == "l1")
        return kManhattan;
    if (t == "2" || t == "d2" || t == "l2")
        return kEuclidean;
    if (t == "inf" || t == "dinf" || t == "linf" || t == "infinity" || t == "d_inf")
        return kChebyshev;
    throw std::invalid_argument("unsupported metric '" + std::string(text) + "' (expected 1, 2 or inf)");
}

std::string MetricSpec::name() const
{
    switch (metric_) {
    case Metric::L1: return "d1";
    case Metric::L2: return "d2";
    case Metric::Linf: return "dinf";
    }
    return "?";
}

std::strong_ordering operator<=>(const DistanceValue& a, const DistanceValue& b)
{
    if (a.kind != b.kind)
        throw std::invalid_argument("comparing exact and squared distances");
    if (a.value < b.value)
        return std::strong_ordering::less;
    if (b.value < a.value)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool operator==(const DistanceValue& a, const DistanceValue& b)
{
    return (a <=> b) == 0;
}

bool DistanceValue::within(const Rational& threshold) const
{
    if (kind == DistanceKind::Squared)
        return threshold >= 0 && value <= threshold * threshold;
    return value <= threshold;
}

std::int64_t raw_distance(std::span<const Coord> x, std::span<const Coord> y, MetricSpec metric)
{
    check_dims(x.size(), y.size());
    std::int64_t acc = 0;
    switch (metric.kind()) {
    case Metric::L1:
        for (std::size_t i = 0; i < x.size(); ++i)
            acc += std::abs(x[i] - y[i]);
        break;
    case Metric::L2:
        for (std::size_t i = 0; i < x.size(); ++i)
            acc += (x[i] - y[i]) * (x[i] - y[i]);
        break;
    case Metric::Linf:
        for (std::size_t i = 0; i < x.size(); ++i)
            acc = std::max<std::int64_t>(acc, std::abs(x[i] - y[i]));
        break;
    }
    return acc;
}

DistanceValue distance(const LatticePoint& x, const LatticePoint& y, MetricSpec metric)
{
    const auto kind = metric.squared() ? DistanceKind::Squared : DistanceKind::Exact;
    return {kind, Rational(raw_distance(x.coords, y.coords, metric))};
}

DistanceValue distance(const RationalPoint& x, const RationalPoint& y, MetricSpec metric)
{
    check_dims(x.size(), y.size());
    Rational acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rational d = abs(Rational(x[i] - y[i]));
        switch (metric.kind()) {
        case Metric::L1: acc += d; break;
        case Metric::L2: acc += d * d; break;
        case Metric::Linf:
            if (d > acc)
                acc = d;
            break;
        }
    }
    return {metric.squared() ? DistanceKind::Squared : DistanceKind::Exact, acc};
}

Rational l1_distance(const RationalPoint& x, const RationalPoint& y)
{
    return distance(x, y, kManhattan).value;
}

namespace {

template <typename Point>
DistanceValue diameter_impl(std::span<const Point> points, MetricSpec metric)
{
    if (points.empty())
        throw EmptyPointSet("diameter of an empty set");
    DistanceValue best{metric.squared() ? DistanceKind::Squared : DistanceKind::Exact, Rational(0)};
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            DistanceValue d = distance(points[i], points[j], metric);
            if (d > best)
                best = std::move(d);
        }
    return best;
}

}  // namespace

DistanceValue diameter(std::span<const LatticePoint> points, MetricSpec metric)
{
    return diameter_impl(points, metric);
}

DistanceValue diameter(std::span<const RationalPoint> points, MetricSpec metric)
{
    return diameter_impl(points, metric);
}

std::strong_ordering lex_compare(std::span<const Coord> x, std::span<const Coord> y)
{
    check_dims(x.size(), y.size());
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] != y[i])
            return x[i] <=> y[i];
    return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const LatticePoint& x, const LatticePoint& y)
{
    return lex_compare(std::span<const Coord>(x.coords), std::span<const Coord>(y.coords));
}

std::strong_ordering lex_compare(const RationalPoint& x, const RationalPoint& y)
{
    check_dims(x.size(), y.size());
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] < y[i])
            return std::strong_ordering::less;
        if (y[i] < x[i])
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool Box::contains(const RationalPoint& p) const
{
    check_dims(dim(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!sides[i].contains(p[i]))
            return false;
    return true;
}

RationalPoint Box::clamp(const RationalPoint& p) const
{
    check_dims(dim(), p.size());
    RationalPoint out = p;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (out[i] < sides[i].lo)
            out[i] = sides[i].lo;
        if (out[i] > sides[i].hi)
            out[i] = sides[i].hi;
    }
    return out;
}

Box Box::intersect(const Box& other) const
{
    check_dims(dim(), other.dim());
    Box out;
    out.sides.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out.sides.push_back({std::max(sides[i].lo, other.sides[i].lo), std::min(sides[i].hi, other.sides[i].hi)});
    return out;
}

bool Box::has_empty_side() const
{
    return std::any_of(sides.begin(), sides.end(), [](const Interval& s) { return s.lo > s.hi; });
}

Box bounding_box(std::span<const RationalPoint> points)
{
    check_uniform(points);
    Box box;
    for (std::size_t i = 0; i < points.front().size(); ++i) {
        Interval side{points.front()[i], points.front()[i]};
        for (const auto& p : points) {
            if (p[i] < side.lo)
                side.lo = p[i];
            if (p[i] > side.hi)
                side.hi = p[i];
        }
        box.sides.push_back(std::move(side));
    }
    return box;
}

Box bounding_box(std::span<const LatticePoint> points)
{
    std::vector<RationalPoint> rp;
    rp.reserve(points.size());
    for (const auto& p : points)
        rp.push_back(to_rational(p));
    return bounding_box(std::span<const RationalPoint>(rp));
}

std::string to_string(const LatticePoint& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::string to_string(const RationalPoint& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ",";
        s += to_string(p[i]);
    }
    return s + ")";
}

}  // namespace ripscrush
