#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qdefect/lattice.hpp"
#include "qdefect/matrices.hpp"

namespace qdefect {

struct DefectStep {
  int t;
  int eps;
  Mat witness;
};

struct DefectProfile {
  std::vector<int> eps;         // eps[r] for r = 0..k
  std::vector<Mat> witnesses;   // first subspace in stream order attaining eps[r]
  std::vector<DefectStep> sequence;
  // t_s < k, equivalently some hyperplane has weight n-1.
  bool full_defect_below_k = false;

  int s() const { return static_cast<int>(sequence.size()); }
};

// An F_q-subspace U of F_{q^m}^k, stored by its RREF basis in expanded
// coordinates (entry j, Gamma index i) -> j*m + i.
class FqSystem {
 public:
  FqSystem(TowerPtr tower, std::size_t k, const Mat& basis_q);
  // F_q-span of the rows of an F_{q^m} matrix with k columns.
  static FqSystem from_vectors(const Mat& vectors);
  // F_q-span of the columns of a k x n matrix over F_{q^m}.
  static FqSystem from_columns(const Mat& g);

  const TowerPtr& tower() const { return tower_; }
  std::size_t k() const { return k_; }
  std::size_t n() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  // Basis rows as vectors of F_{q^m}^k.
  Mat vectors() const { return unflatten_rows(basis_, k_); }
  std::size_t qm_rank() const { return qm_rank_; }
  bool spans_ambient() const { return qm_rank_ == k_; }

  // Cached on first success.
  const DefectProfile& profile(const BigInt& budget = kDefaultSubspaceBudget) const;

  bool operator==(const FqSystem& o) const { return k_ == o.k_ && basis_ == o.basis_; }

 private:
  struct Cache {
    std::mutex mu;
    std::optional<DefectProfile> profile;
  };

  TowerPtr tower_;
  std::size_t k_;
  Mat basis_;
  std::size_t qm_rank_;
  std::shared_ptr<Cache> cache_;
};

struct WeightDefect {
  int weight;
  int defect;
};

// Fast w_U(T) for many T against one U.
class WeightOracle {
 public:
  explicit WeightOracle(const FqSystem& u);
  // `t` must be an RREF (or at least independent) basis over F_{q^m}.
  int weight(const Mat& t) const;

 private:
  const FqSystem* u_;
  bool packed_;
  BitReducer bits_;
  RowReducer rows_;
};

WeightDefect weight_defect(const FqSystem& u, const Mat& t);

DefectProfile defect_profile(const FqSystem& u, const BigInt& budget = kDefaultSubspaceBudget);

bool is_minimal_wrt_defect(const FqSystem& u, const Mat& t,
                           const BigInt& budget = kDefaultSubspaceBudget);

struct DefectEntry {
  Mat t;
  int dim;
  int eps;
};

// E_U: proper subspaces of positive defect whose proper subspaces all have smaller defect.
std::vector<DefectEntry> minimal_defect_set(const FqSystem& u,
                                            const BigInt& budget = kDefaultSubspaceBudget);

// Number of r-dimensional subspaces by weight.
std::map<int, BigInt> weight_spectrum(const FqSystem& u, int r,
                                      const BigInt& budget = kDefaultSubspaceBudget);

class Decomposition {
 public:
  // `parts` are F_q bases (expanded coordinates) of the components U_i.
  Decomposition(const FqSystem& u, std::vector<Mat> parts);

  const std::vector<Mat>& parts() const { return parts_; }
  const std::vector<Mat>& spans() const { return spans_; }
  const std::vector<int>& k_type() const { return k_type_; }
  const std::vector<int>& n_type() const { return n_type_; }

 private:
  std::vector<Mat> parts_;
  std::vector<Mat> spans_;
  std::vector<int> k_type_;
  std::vector<int> n_type_;
};

struct EvasiveEntry {
  int h;
  int r_min;
};

struct KScatteredReport {
  bool components_scattered = false;  // condition 2
  bool cross_hyperplanes = false;     // condition 3
  bool verdict = false;
  bool nonpositive_defect = false;    // defect <= 0 off the components, dims <= k-1
  std::optional<Mat> witness;         // first violating subspace, if any
};

struct SystemReport {
  std::size_t k = 0;
  std::size_t n = 0;
  DefectProfile profile;
  int max_scattered_h = 0;
  std::vector<EvasiveEntry> evasive;
  bool is_subgeometry = false;
  std::vector<int> maximum_scattered_h;
  std::optional<int> club_index;
  bool is_1_defect = false;
  std::optional<KScatteredReport> k_scattered;
};

SystemReport classify_system(const FqSystem& u, const Decomposition* decomposition = nullptr,
                             const BigInt& budget = kDefaultSubspaceBudget);

}  // namespace qdefect
