#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdefect/qsystem.hpp"

namespace qdefect {

enum class Side { primal, dual };

// V(k,q^m) = F_{q^m}^n / Gamma with U the image of W = F_q^n, and the mirror
// picture V(n-k,q^m) = F_{q^m}^n / Gamma^perp with U^d the image of W.
class QuotientModel {
 public:
  // Uses the RREF basis of U as the columns of G.
  static QuotientModel from_system(const FqSystem& u);
  // Uses the rows of `basis` (an F_q-basis of U in expanded coordinates) as the columns of G.
  static QuotientModel from_basis(const FqSystem& u, const Mat& basis);

  std::size_t n() const { return g_.cols(); }
  std::size_t k() const { return g_.rows(); }
  const Mat& g() const { return g_; }  // generator of C, rowspace = Gamma^perp
  const Mat& h() const { return h_; }  // RREF basis of Gamma = C^perp
  const FqSystem& primal() const { return primal_; }
  const FqSystem& dual() const { return dual_; }
  const FqSystem& system(Side side) const { return side == Side::primal ? primal_ : dual_; }

  // dim_Fq(W cap Gamma^perp) = k - t_s, with a basis of the intersection.
  std::size_t dual_degeneracy() const { return dual_degeneracy_.rows(); }
  const Mat& dual_degeneracy_witness() const { return dual_degeneracy_; }
  // Raises DegenerateDual (with the witness in the message) when W meets Gamma^perp.
  void require_nondegenerate_dual() const;

  // T^d: for T on `side` with <T cap U> = T, the subspace psi((S_h^*)^perp) on the other side.
  Mat dual_subspace(const Mat& t, Side side = Side::primal) const;
  // phi^{-1}(T cap U) inside W = F_q^n.
  Mat preimage(const Mat& t, Side side = Side::primal) const;

 private:
  QuotientModel(Mat g, Mat h, FqSystem primal, FqSystem dual, Mat degeneracy);

  Mat g_;
  Mat h_;
  FqSystem primal_;
  FqSystem dual_;
  Mat dual_degeneracy_;
};

QuotientModel model_from_system(const FqSystem& u);

// U^d = U_{C^perp}, the F_q-span of the columns of H.
FqSystem delsarte_dual(const FqSystem& u);

struct SequenceDualityReport {
  std::vector<std::pair<int, int>> expected;  // transform of U's sequence
  std::vector<std::pair<int, int>> computed;  // sequence of U^d
  bool holds = false;
  std::size_t dual_dimension = 0;
  std::string mismatch;
};

SequenceDualityReport verify_sequence_duality(const FqSystem& u,
                                              const BigInt& budget = kDefaultSubspaceBudget);

// (n-k-eps_{s-1}, k-t_{s-1}), ..., (n-k-eps_1, k-t_1), (n-k, k)
std::vector<std::pair<int, int>> dual_sequence_transform(const DefectProfile& p, int n, int k);

}  // namespace qdefect
