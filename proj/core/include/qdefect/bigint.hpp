#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qdefect {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace qdefect
