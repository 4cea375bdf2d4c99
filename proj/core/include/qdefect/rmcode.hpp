#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdefect/polyarith.hpp"
#include "qdefect/qsystem.hpp"

namespace qdefect {

inline const BigInt kDefaultCodewordBudget{std::uint64_t{1} << 24};

// F_{q^m}-linear code of length n and dimension k, stored by its RREF generator.
class RankCode {
 public:
  static RankCode from_generator(const Mat& g);

  const TowerPtr& tower() const { return g_.tower(); }
  std::size_t n() const { return g_.cols(); }
  std::size_t k() const { return g_.rows(); }
  const Mat& generator() const { return g_; }
  // Columns F_q-independent, i.e. dim U_C = n.
  bool nondegenerate() const { return system_->n() == n(); }
  bool dual_nondegenerate() const { return dual_nondegenerate_; }
  // U_C: the F_q-span of the columns of G inside F_{q^m}^k.
  const FqSystem& system() const { return *system_; }

  bool operator==(const RankCode& o) const { return g_ == o.g_; }

 private:
  explicit RankCode(Mat g);

  Mat g_;
  std::shared_ptr<const FqSystem> system_;
  bool dual_nondegenerate_ = false;
};

RankCode code_from_generator(const Mat& g);
RankCode dual_code(const RankCode& c);

int rank_weight(const FieldTower& tower, std::span<const Elem> v);

enum class SupportMethod { expansion, trace, perp };

struct WeightSupport {
  int weight;
  Mat support;  // RREF basis of supp(v) in F_q^n
};

WeightSupport rank_weight_support(const TowerPtr& tower, std::span<const Elem> v,
                                  SupportMethod method);
// supp(D) for the row space D of `rows`.
Mat subcode_support(const Mat& rows);

// fn(x-index, codeword) for every codeword xG in message order.
void for_each_codeword(const RankCode& c, const BigInt& budget,
                       const std::function<void(std::span<const Elem>)>& fn);

using WeightDistribution = std::vector<BigInt>;
using SymbolicDistribution = std::vector<MultiPoly>;

WeightDistribution weight_distribution(const RankCode& c,
                                       const BigInt& budget = kDefaultCodewordBudget);

enum class GenWeightMethod { defect, codim, subcode };

std::vector<int> generalized_weights(const RankCode& c, GenWeightMethod method,
                                     const BigInt& budget = kDefaultSubspaceBudget);
std::vector<int> dual_generalized_weights_from_profile(const RankCode& c,
                                                       const BigInt& budget = kDefaultSubspaceBudget);
// {d_r(C^perp)} and {n+1-d_r(C)} partition {1..n}.
bool wei_partition_holds(int n, const std::vector<int>& d, const std::vector<int>& d_dual);

struct Blocks {
  std::vector<int> n;
  std::vector<int> k;
};

struct CodeReport {
  int n = 0;
  int k = 0;
  int m = 0;
  bool nondegenerate = false;
  bool dual_nondegenerate = false;
  int d = 0;
  int dual_d = 0;
  std::vector<int> d_r;
  WeightDistribution A;  // empty when over budget
  std::map<std::string, bool> verdicts;
  std::map<std::string, bool> crosschecks;  // name -> agreement between the two routes
  std::map<std::string, std::vector<Elem>> witnesses;
};

CodeReport classify_code(const RankCode& c, const std::optional<Blocks>& blocks = std::nullopt,
                         const BigInt& subspace_budget = kDefaultSubspaceBudget,
                         const BigInt& codeword_budget = kDefaultCodewordBudget);

// B of the dual from A, numeric (field size q, degree m) and symbolic (q, z = q^m).
WeightDistribution macwilliams(const WeightDistribution& a, int N, int K, std::uint64_t q, int m);
SymbolicDistribution macwilliams(const SymbolicDistribution& a, int N, int K);

SymbolicDistribution mrd_wdist(int n, int k);
WeightDistribution instantiate(const SymbolicDistribution& a, std::uint64_t q, int m);

// Symbolic distribution of an ((n1,n2),(k1,k2))-MRD code.
SymbolicDistribution nkmrd_wdist(int n1, int n2, int k1, int k2);

// A_i(q) with z := q^m, as a polynomial in q alone.
MultiPoly at_degree(const MultiPoly& a, int m);

struct SignSummary {
  bool identically_zero = false;
  bool negative_everywhere = false;  // over all prime powers q >= 2
  bool nonnegative_everywhere = false;
  bool nonzero_everywhere = false;
};
SignSummary sign_summary(const MultiPoly& p_in_q);

struct Refutation {
  int index;          // i of the offending A_i
  std::string kind;   // "negative" or "beyond-max-rank"
};

// Empty when some prime power q escapes both refutation criteria at this m.
std::optional<Refutation> refute_at(const SymbolicDistribution& a, int N, int m);

struct NkMrdFeasibility {
  std::optional<int> min_m;
  std::vector<std::pair<int, Refutation>> refuted;  // m below min_m with the reason
};

NkMrdFeasibility nkmrd_feasibility(int n1, int n2, int k1, int k2, int horizon = 64);
// Raises HorizonExceeded when no m up to the horizon survives.
int min_feasible_m(int n1, int n2, int k1, int k2, int horizon = 64);

}  // namespace qdefect
