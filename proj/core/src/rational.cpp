#include "balg/rational.hpp"

#include <cctype>

#include "balg/errors.hpp"

namespace balg {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  const Integer d(std::string{den});
  if (d == 0) throw ParseError("rational with zero denominator");
  Rational r(Integer(std::string{num}), d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
  return value.str();
}

}  // namespace balg
