#include "pencilforge/arith.hpp"

#include <stdexcept>

namespace pencilforge {

Integer floor(const Rational& q)
{
    Integer num = numerator(q);
    Integer den = denominator(q);
    Integer quot = num / den; // truncates toward zero
    if (num < 0 && quot * den != num) {
        --quot;
    }
    return quot;
}

std::string to_string(const Rational& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

Integer parse_integer(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
        }
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return Integer(std::string(text));
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

} // namespace pencilforge
