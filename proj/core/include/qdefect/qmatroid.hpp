#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdefect/lattice.hpp"
#include "qdefect/polyarith.hpp"
#include "qdefect/rmcode.hpp"

namespace qdefect {

enum class MatroidKind { matrix, uniform, direct_sum, table };

// q-matroid on the ground space F_q^n, queried through canonical F_q-subspace bases.
// Copies share one memo table.
class QMatroid {
 public:
  static QMatroid from_matrix(const Mat& g);
  static QMatroid uniform(TowerPtr tower, int k, int n);
  static QMatroid direct_sum(const QMatroid& a, const QMatroid& b,
                             const BigInt& budget = kDefaultSubspaceBudget);
  // Explicit ranks; every subspace that gets queried must be listed.
  static QMatroid from_table(TowerPtr tower, int n, const std::vector<std::pair<Mat, int>>& table);

  const TowerPtr& tower() const;
  MatroidKind kind() const;
  int ground_dim() const;
  int full_rank() const;

  // rho(V) for V the row space of `v` (level q, n columns).
  int rank(const Mat& v) const;

  // Structure accessors; each raises BadParams when the kind does not match.
  const Mat& generator() const;
  int uniform_rank() const;
  std::pair<const QMatroid*, const QMatroid*> summands() const;
  std::vector<std::pair<Mat, int>> table() const;

 private:
  struct Impl;
  explicit QMatroid(std::shared_ptr<Impl> impl);

  std::shared_ptr<Impl> impl_;
};

struct AxiomReport {
  bool r1 = true;  // 0 <= rho(A) <= dim A
  bool r2 = true;  // A <= B implies rho(A) <= rho(B)
  bool r3 = true;  // rho(A+B) + rho(A cap B) <= rho(A) + rho(B)
  std::string violated;        // "R1", "R2", "R3" or empty
  std::vector<Mat> witness;    // A (and B) of the first violation
  std::size_t subspaces = 0;
  std::size_t pairs = 0;

  bool ok() const { return r1 && r2 && r3; }
};

AxiomReport check_axioms(const QMatroid& m, const BigInt& budget = kDefaultSubspaceBudget);

struct RepresentationReport {
  bool holds = false;
  std::optional<Mat> witness;
  int rank_matrix = 0;
  int rank_matroid = 0;
  std::size_t subspaces = 0;
};

RepresentationReport is_representation(const Mat& g, const QMatroid& m,
                                       const BigInt& budget = kDefaultSubspaceBudget);

// R_M(X1, X2, X3, X4) = sum_D X1^{rho(E)-rho(D)} X2^{dim D-rho(D)} g^{dim D}(X3, X4),
// g^l = prod_{i<l} (X3 - q^i X4).
MultiPoly rank_generating_function(const QMatroid& m, const BigInt& budget = kDefaultSubspaceBudget);

// W_C(X, Y) = sum_i A_i X^{n-i} Y^i.
MultiPoly weight_enumerator(const WeightDistribution& a);

// Two readings of the substitution linking W_C and R_{M_G}:
//   derived: Y^{n-k} R(q^m Y, Y^{-1}, X, Y)
//   literal: Y^{n-k} R(q Y^{1/m}, Y^{-1/m}, X, Y), evaluated through Y = y^m.
enum class IdentityForm { derived, literal };

struct IdentityPoint {
  Rational y;  // Y = y^m
  Rational x;
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

std::vector<IdentityPoint> check_weight_enumerator_identity(
    const WeightDistribution& a, const MultiPoly& rgf, int n, int k, std::uint64_t q, int m,
    const std::vector<std::pair<Rational, Rational>>& points, IdentityForm form);

}  // namespace qdefect
