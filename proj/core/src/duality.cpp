#include "qdefect/duality.hpp"

#include <sstream>

#include "qdefect/error.hpp"

namespace qdefect {

namespace {

std::string rows_text(const Mat& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os.str();
}

}  // namespace

QuotientModel::QuotientModel(Mat g, Mat h, FqSystem primal, FqSystem dual, Mat degeneracy)
    : g_(std::move(g)), h_(std::move(h)), primal_(std::move(primal)), dual_(std::move(dual)),
      dual_degeneracy_(std::move(degeneracy)) {}

QuotientModel QuotientModel::from_system(const FqSystem& u) { return from_basis(u, u.basis()); }

QuotientModel QuotientModel::from_basis(const FqSystem& u, const Mat& basis) {
  if (!u.spans_ambient()) raise(Errc::NotSpanning, "U does not span the ambient space");
  if (u.n() == u.k()) raise(Errc::SubgeometryCase, "n = k: U is a subgeometry, Gamma would be zero");
  if (basis.rows() != u.n() || !equal_spaces(basis, u.basis())) {
    raise(Errc::BadParams, "supplied rows are not a basis of U");
  }
  Mat g = transpose(unflatten_rows(basis, u.k()));
  Mat gamma = kernel(g);
  const Mat meet = restrict_to_base(gamma);
  if (meet.rows() != 0) {
    raise(Errc::DegenerateDual, "Gamma meets W in: " + rows_text(meet));
  }
  FqSystem primal = FqSystem::from_columns(g);
  FqSystem dual = FqSystem::from_columns(gamma);
  Mat degeneracy = restrict_to_base(span_of(g));
  return QuotientModel(std::move(g), std::move(gamma), std::move(primal), std::move(dual),
                       std::move(degeneracy));
}

void QuotientModel::require_nondegenerate_dual() const {
  if (dual_degeneracy_.rows() != 0) {
    raise(Errc::DegenerateDual, "W meets Gamma^perp in dimension " +
                                    std::to_string(dual_degeneracy_.rows()) + ": " +
                                    rows_text(dual_degeneracy_));
  }
}

Mat QuotientModel::preimage(const Mat& t, Side side) const {
  const Mat& proj = side == Side::primal ? g_ : h_;
  if (t.level() != Level::qm || t.cols() != proj.rows()) {
    raise(Errc::AmbientMismatch, "subspace does not live in the quotient's ambient space");
  }
  const Mat y = kernel(t);
  return fq_kernel(multiply(y, proj));
}

Mat QuotientModel::dual_subspace(const Mat& t, Side side) const {
  const Mat& proj = side == Side::primal ? g_ : h_;
  const Mat& other = side == Side::primal ? h_ : g_;
  const Mat s = preimage(t, side);
  const Mat image = span_of(multiply(s.lifted(), transpose(proj)));
  if (!(image == span_of(t))) {
    raise(Errc::NotGeneratedByIntersection, "T is not spanned by its intersection with U");
  }
  const Mat perp = kernel(span_of(s.lifted()));
  return span_of(multiply(perp, transpose(other)));
}

QuotientModel model_from_system(const FqSystem& u) { return QuotientModel::from_system(u); }

FqSystem delsarte_dual(const FqSystem& u) { return model_from_system(u).dual(); }

std::vector<std::pair<int, int>> dual_sequence_transform(const DefectProfile& p, int n, int k) {
  std::vector<std::pair<int, int>> out;
  for (int i = p.s() - 2; i >= 0; --i) {
    out.emplace_back(n - k - p.sequence[i].eps, k - p.sequence[i].t);
  }
  out.emplace_back(n - k, k);
  return out;
}

SequenceDualityReport verify_sequence_duality(const FqSystem& u, const BigInt& budget) {
  const DefectProfile& p = u.profile(budget);
  if (p.full_defect_below_k) {
    raise(Errc::HyperplaneWeightTooLarge,
          "a hyperplane has weight n-1 (t_s = " + std::to_string(p.sequence.back().t) + " < k)");
  }
  const int n = static_cast<int>(u.n());
  const int k = static_cast<int>(u.k());
  SequenceDualityReport rep;
  rep.expected = dual_sequence_transform(p, n, k);
  const FqSystem ud = delsarte_dual(u);
  rep.dual_dimension = ud.n();
  for (const auto& step : ud.profile(budget).sequence) rep.computed.emplace_back(step.t, step.eps);
  rep.holds = rep.expected == rep.computed && rep.dual_dimension == u.n();
  if (!rep.holds) {
    std::ostringstream os;
    os << "expected";
    for (auto [t, e] : rep.expected) os << " (" << t << "," << e << ")";
    os << " computed";
    for (auto [t, e] : rep.computed) os << " (" << t << "," << e << ")";
    rep.mismatch = os.str();
  }
  return rep;
}

}  // namespace qdefect
