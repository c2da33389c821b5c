#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace balg {

/// Exact scalar field for place functions and atom-model vectors.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "7", "-3", "2/5" or "-2/5". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p" or "p/q".
std::string to_string(const Rational& value);

}  // namespace balg
