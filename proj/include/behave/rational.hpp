#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "behave/errors.hpp"

namespace behave {

/// Exact rational: arbitrary-precision numerator/denominator, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses "int" or "p/q". Decimals and exponents are rejected.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::is_integer_literal(text)) {
      throw InvalidObject("not an exact rational: '" + std::string(text) + "'");
    }
    return Rational(Integer(std::string(text[0] == '+' ? text.substr(1) : text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw InvalidObject("not an exact rational: '" + std::string(text) + "'");
  }
  const Integer d(std::string{den});
  if (d == 0) throw InvalidObject("zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(std::string(num[0] == '+' ? num.substr(1) : num)), d);
}

}  // namespace behave
