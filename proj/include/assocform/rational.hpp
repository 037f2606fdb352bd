#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace assocform {

// Expression templates are disabled so that Eigen sees plain value types.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Canonical text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "p" or "p/q" with an optional leading sign. Throws SyntaxError.
Rational parse_rational(std::string_view text);

Integer factorial(int k);
Integer binomial(int top, int bottom);

} // namespace assocform
