#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bireg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q", always in lowest terms with q > 0.
std::string rational_to_string(const Rational& q);

// Accepts "p" and "p/q" with optional leading '-'. No decimals.
Rational parse_rational(std::string_view s);

double to_double(const Rational& q);

}  // namespace bireg
