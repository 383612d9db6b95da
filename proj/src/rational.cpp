#include "tensorcert/rational.hpp"

#include "tensorcert/errors.hpp"

#include <algorithm>
#include <cctype>

namespace tensorcert {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole, bool allow_sign)
{
    std::string_view body = digits;
    if (allow_sign && !body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (body.empty() || !std::all_of(body.begin(), body.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; }))
        throw ParseError("not a rational: \"" + std::string(whole) + "\"");
    std::string text(digits.front() == '+' ? digits.substr(1) : digits);
    return Integer(text);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text, true));

    const Integer num = parse_integer(text.substr(0, slash), text, true);
    const Integer den = parse_integer(text.substr(slash + 1), text, false);
    if (den == 0)
        throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    return Rational(num, den);
}

std::string to_string(const Rational& value)
{
    if (denominator(value) == 1)
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

} // namespace tensorcert
