#include "ripscrush/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace ripscrush {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

BigInt parse_integer(std::string_view s)
{
    if (s[0] == '+')
        s.remove_prefix(1);
    return BigInt(std::string(s));
}

std::int64_t to_i64(const BigInt& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return v.convert_to<std::int64_t>();
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));

    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-')
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    const BigInt d = parse_integer(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational floor(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num)
        q -= 1;
    return Rational(q);
}

Rational ceil(const Rational& value)
{
    return -floor(-value);
}

std::int64_t numerator_i64(const Rational& value)
{
    return to_i64(boost::multiprecision::numerator(value));
}

std::int64_t denominator_i64(const Rational& value)
{
    return to_i64(boost::multiprecision::denominator(value));
}

}  // namespace ripscrush
