#pragma once

// Exact scalar types shared by every module. Nothing in the library uses
// floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pencilforge {

// Expression templates are off so that `auto` and `?:` always see plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                                   boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Largest integer not exceeding q.
Integer floor(const Rational& q);

/// Always "p/q" with q >= 1, lowest terms ("2/1", "-3/4").
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Decimal integer with optional leading sign.
Integer parse_integer(std::string_view text);

} // namespace pencilforge
