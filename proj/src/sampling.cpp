#include "ripscrush/sampling.hpp"

namespace ripscrush {

std::vector<RationalPoint> random_integer_points(Rng& rng, std::size_t n, std::size_t count, Coord lo, Coord hi)
{
    std::uniform_int_distribution<Coord> coord(lo, hi);
    std::vector<RationalPoint> out(count, RationalPoint(n));
    for (auto& p : out)
        for (auto& v : p)
            v = coord(rng);
    return out;
}

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t max_den)
{
    const std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, max_den)(rng);
    const std::int64_t a = numerator_i64(ceil(lo * den));
    const std::int64_t b = numerator_i64(floor(hi * den));
    if (a > b)
        return lo;
    return Rational(std::uniform_int_distribution<std::int64_t>(a, b)(rng), den);
}

std::vector<RationalPoint> random_admissible_tau(Rng& rng, std::size_t n, std::size_t max_points,
                                                 std::int64_t max_den)
{
    const Rational span = 2 * static_cast<long>(n) - 1;
    std::vector<RationalPoint> tau{RationalPoint(n, Rational(0))};
    const std::size_t target = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_points))(rng);
    for (std::size_t attempt = 0; tau.size() < target && attempt < 50 * max_points; ++attempt) {
        RationalPoint p(n);
        for (std::size_t j = 0; j < n; ++j)
            p[j] = random_rational(rng, j + 1 < n ? Rational(-span) : Rational(0), span, max_den);
        bool fits = true;
        for (const auto& q : tau)
            if (l1_distance(p, q) > span) {
                fits = false;
                break;
            }
        if (fits)
            tau.push_back(std::move(p));
    }
    return tau;
}

}  // namespace ripscrush
