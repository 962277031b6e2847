#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace stoc {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(errc::invalid_argument, "zero denominator");
  return rational(bigint(num), bigint(den));
}

// Canonical "p/q" form; integers print without the slash.
inline std::string rational_str(const rational& r) {
  const bigint num = boost::multiprecision::numerator(r);
  const bigint den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return rational(bigint(text));
    const bigint num(text.substr(0, slash));
    const bigint den(text.substr(slash + 1));
    if (den == 0) fail(errc::parse, "zero denominator: " + text);
    return rational(num, den);
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::parse, "malformed rational: " + text);
  }
}

inline bigint ipow(bigint base, unsigned exp) {
  bigint result = 1;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

inline double rational_to_double(const rational& r) {
  return boost::multiprecision::numerator(r).convert_to<double>() /
         boost::multiprecision::denominator(r).convert_to<double>();
}

}  // namespace stoc
