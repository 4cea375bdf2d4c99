#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qdefect/rmcode.hpp"

namespace qdefect {

// k x n generator with rows (g_j^{q^i})_j, i < k, for g_j = x^j (needs n <= m).
Mat gabidulin_generator(const TowerPtr& tower, int k, int n);
Mat gabidulin_generator(const TowerPtr& tower, int k, std::span<const Elem> g);

// f(x) = sum_i c_i x^{q^i}.
Elem eval_linearized(const FieldTower& tower, std::span<const Elem> coeffs, Elem x);

// {(f_1(x), ..., f_k(x)) : x in F_{q^m}} for q-polynomials f_j.
FqSystem linearized_system(const TowerPtr& tower, const std::vector<std::vector<Elem>>& polys);
// {(x, f(x))} in F_{q^m}^2.
FqSystem graph_system(const TowerPtr& tower, std::span<const Elem> coeffs);

// {(x^q, x^{q^2} - x, x^{q^3} - a t) : x in F_{q^4}, t in F_q}.
FqSystem quasi_mrd_example(const TowerPtr& tower, Elem a);

Mat block_diagonal(const std::vector<Mat>& blocks);

// Systematic [I_k | R] with R uniform over F_{q^m}.
Mat random_systematic(const TowerPtr& tower, int k, int n, std::mt19937_64& rng);

struct CorpusCode {
  std::string shape;  // "m=<m> k=<k> n=<n>"
  RankCode code;
};

// q = 2, m in {3, 4}, k <= 3, n <= 6, n - k <= 3; codes with C and C^perp non-degenerate,
// at most `per_shape` distinct codes per (m, k, n), deterministic in the seed.
std::vector<CorpusCode> desk_corpus(std::uint64_t seed, int per_shape = 16);

// First systematic [4,2] code over F_{2^4} with profile 0 < eps(1) = 1 < eps(2) and both
// sides non-degenerate.
std::optional<RankCode> find_near_mrd(const TowerPtr& tower);

// Random search for f with dim ker f = 2 whose graph is a 2-club; `tries` candidates at most.
struct ClubSearch {
  std::optional<FqSystem> system;
  std::vector<Elem> coeffs;
  int tried = 0;
};
ClubSearch find_two_club(const TowerPtr& tower, std::uint64_t seed, int tries = 20000);

// G = [[1, a, 0, 0], [0, 0, 1, b]] that are ((2,2),(1,1))-MRD, in (a, b) order.
std::vector<RankCode> block_11_mrd_codes(const TowerPtr& tower);

// Equivalence under GL(n, q) on columns, F_{q^m}-scalars and Frobenius.
bool codes_equivalent(const RankCode& a, const RankCode& b,
                      const BigInt& budget = kDefaultSubspaceBudget);

}  // namespace qdefect
