#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qdefect/bigint.hpp"

namespace qdefect {

enum class Var : std::uint8_t { q, z, X1, X2, X3, X4, X, Y, y };
inline constexpr std::size_t kVarCount = 9;

std::string_view var_name(Var v);

using Exponents = std::array<std::uint32_t, kVarCount>;

// Graded order: higher total degree first, then lexicographically larger
// exponent vector (in the order q, z, X1, ..., y) first.
struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Partial or full assignment of variables to exact rationals.
using Assignment = std::array<std::optional<Rational>, kVarCount>;

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v, std::uint32_t power = 1);
  static MultiPoly monomial(const Exponents& e, const BigInt& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, BigInt, GradedOrder>& terms() const { return terms_; }
  BigInt coefficient(const Exponents& e) const;
  std::uint32_t degree(Var v) const;
  bool uses(Var v) const { return degree(v) > 0; }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly operator-() const;
  MultiPoly pow(std::uint32_t e) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Exact value; every variable that occurs must be assigned.
  Rational eval(const Assignment& at) const;
  // Substitutes the assigned variables and keeps the rest symbolic; values must be integers.
  MultiPoly partial_eval(Var v, const BigInt& value) const;
  MultiPoly subst(Var v, const MultiPoly& replacement) const;

  // Quotient when `d` divides this polynomial exactly, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

  // e.g. `q^4+q^3+2*q^2+q+1`; `0` for the zero polynomial.
  std::string render() const;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  std::map<Exponents, BigInt, GradedOrder> terms_;
};

// q-binomial coefficient as a polynomial in q, obtained by exact division.
MultiPoly gaussian_binomial_poly(int a, int b);

Assignment assign(std::initializer_list<std::pair<Var, Rational>> values);

}  // namespace qdefect
