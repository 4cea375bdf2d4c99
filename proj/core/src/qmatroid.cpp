#include "qdefect/qmatroid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "qdefect/error.hpp"

namespace qdefect {

struct QMatroid::Impl {
  TowerPtr tower;
  MatroidKind kind = MatroidKind::uniform;
  int n = 0;
  int full = 0;
  std::optional<Mat> g;
  int k = 0;
  std::vector<QMatroid> parts;
  BigInt budget;
  std::map<std::vector<Elem>, int> table;

  std::mutex mu;
  std::map<std::vector<Elem>, int> memo;

  int compute(const Mat& v) const;
};

namespace {

BigInt lattice_size(int dim, std::uint64_t q) {
  BigInt total = 0;
  for (int r = 0; r <= dim; ++r) total += gaussian_binomial(dim, r, q);
  return total;
}

}  // namespace

int QMatroid::Impl::compute(const Mat& v) const {
  const int dim = static_cast<int>(v.rows());
  switch (kind) {
    case MatroidKind::matrix:
      if (dim == 0) return 0;
      return static_cast<int>(qdefect::rank(multiply(*g, transpose(v.lifted()))));
    case MatroidKind::uniform:
      return std::min(k, dim);
    case MatroidKind::direct_sum: {
      const int n1 = parts[0].ground_dim();
      const int n2 = parts[1].ground_dim();
      const BigInt need = lattice_size(dim, tower->q());
      if (need > budget) {
        throw BudgetError(need, budget, "direct-sum rank query needs " + need.str() +
                                            " subspaces, budget " + budget.str());
      }
      int best = 0;  // X = 0
      for (int r = 1; r <= dim; ++r) {
        auto s = enum_subspaces_of(v, r, budget);
        while (s.next()) {
          const Mat& x = s.current();
          const int val = parts[0].rank(x.select_cols(0, n1)) + parts[1].rank(x.select_cols(n1, n2)) - r;
          best = std::min(best, val);
        }
      }
      return dim + best;
    }
    case MatroidKind::table: {
      auto it = table.find(v.data());
      if (it == table.end()) raise(Errc::OutOfRange, "subspace missing from the rank table");
      return it->second;
    }
  }
  return 0;
}

QMatroid::QMatroid(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

QMatroid QMatroid::from_matrix(const Mat& g) {
  if (g.level() != Level::qm) raise(Errc::LevelMismatch, "representation must be over F_{q^m}");
  Echelon e = rref(g);
  if (e.rank != g.rows()) raise(Errc::RankDeficient, "generator is rank deficient");
  auto impl = std::make_shared<Impl>();
  impl->tower = g.tower();
  impl->kind = MatroidKind::matrix;
  impl->n = static_cast<int>(g.cols());
  impl->full = static_cast<int>(e.rank);
  impl->g = std::move(e.basis);
  return QMatroid(std::move(impl));
}

QMatroid QMatroid::uniform(TowerPtr tower, int k, int n) {
  if (n < 0 || k < 0 || k > n) raise(Errc::BadRange, "uniform q-matroid needs 0 <= k <= n");
  auto impl = std::make_shared<Impl>();
  impl->tower = std::move(tower);
  impl->kind = MatroidKind::uniform;
  impl->n = n;
  impl->k = k;
  impl->full = k;
  return QMatroid(std::move(impl));
}

QMatroid QMatroid::direct_sum(const QMatroid& a, const QMatroid& b, const BigInt& budget) {
  if (a.tower()->q() != b.tower()->q()) raise(Errc::GroundMismatch, "summands over different F_q");
  auto impl = std::make_shared<Impl>();
  impl->tower = a.tower();
  impl->kind = MatroidKind::direct_sum;
  impl->n = a.ground_dim() + b.ground_dim();
  impl->full = a.full_rank() + b.full_rank();
  impl->parts = {a, b};
  impl->budget = budget;
  return QMatroid(std::move(impl));
}

QMatroid QMatroid::from_table(TowerPtr tower, int n, const std::vector<std::pair<Mat, int>>& table) {
  auto impl = std::make_shared<Impl>();
  impl->tower = tower;
  impl->kind = MatroidKind::table;
  impl->n = n;
  for (const auto& [v, r] : table) {
    if (v.level() != Level::q || static_cast<int>(v.cols()) != n) {
      raise(Errc::GroundMismatch, "table entry is not a subspace of F_q^n");
    }
    impl->table[span_of(v).data()] = r;
  }
  const Mat e = Mat::identity(tower, Level::q, n);
  auto it = impl->table.find(e.data());
  if (it == impl->table.end()) raise(Errc::OutOfRange, "rank table lacks the ground space");
  impl->full = it->second;
  return QMatroid(std::move(impl));
}

const TowerPtr& QMatroid::tower() const { return impl_->tower; }
MatroidKind QMatroid::kind() const { return impl_->kind; }
int QMatroid::ground_dim() const { return impl_->n; }
int QMatroid::full_rank() const { return impl_->full; }

int QMatroid::rank(const Mat& v) const {
  if (v.level() != Level::q || static_cast<int>(v.cols()) != impl_->n) {
    raise(Errc::GroundMismatch, "query is not a subspace of the ground space");
  }
  const Mat basis = span_of(v);
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->memo.find(basis.data());
    if (it != impl_->memo.end()) return it->second;
  }
  const int r = impl_->compute(basis);
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->memo.emplace(basis.data(), r);
  return r;
}

const Mat& QMatroid::generator() const {
  if (impl_->kind != MatroidKind::matrix) raise(Errc::BadParams, "not a matrix q-matroid");
  return *impl_->g;
}

int QMatroid::uniform_rank() const {
  if (impl_->kind != MatroidKind::uniform) raise(Errc::BadParams, "not a uniform q-matroid");
  return impl_->k;
}

std::pair<const QMatroid*, const QMatroid*> QMatroid::summands() const {
  if (impl_->kind != MatroidKind::direct_sum) raise(Errc::BadParams, "not a direct sum");
  return {&impl_->parts[0], &impl_->parts[1]};
}

std::vector<std::pair<Mat, int>> QMatroid::table() const {
  if (impl_->kind != MatroidKind::table) raise(Errc::BadParams, "not a table q-matroid");
  std::vector<std::pair<Mat, int>> out;
  const std::size_t n = impl_->n;
  for (const auto& [data, r] : impl_->table) {
    Mat v(impl_->tower, Level::q, n ? data.size() / n : 0, n);
    std::copy(data.begin(), data.end(), v.row(0).data());
    out.emplace_back(std::move(v), r);
  }
  return out;
}

AxiomReport check_axioms(const QMatroid& m, const BigInt& budget) {
  AxiomReport rep;
  const auto subs = all_subspaces(m.tower(), Level::q, m.ground_dim(), budget);
  rep.subspaces = subs.size();
  std::vector<int> rho(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    rho[i] = m.rank(subs[i]);
    if (rep.r1 && (rho[i] < 0 || rho[i] > static_cast<int>(subs[i].rows()))) {
      rep.r1 = false;
      if (rep.violated.empty()) {
        rep.violated = "R1";
        rep.witness = {subs[i]};
      }
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      ++rep.pairs;
      const Mat& a = subs[i];
      const Mat& b = subs[j];
      const Mat meet = intersect(a, b);
      const Mat join = sum(a, b);
      // Lattice order is by dimension, so only A <= B with i < j can occur.
      if (meet.rows() == a.rows() && a.rows() < b.rows() && rho[i] > rho[j]) {
        rep.r2 = false;
        if (rep.violated.empty()) {
          rep.violated = "R2";
          rep.witness = {a, b};
        }
      }
      if (m.rank(join) + m.rank(meet) > rho[i] + rho[j]) {
        rep.r3 = false;
        if (rep.violated.empty()) {
          rep.violated = "R3";
          rep.witness = {a, b};
        }
      }
    }
  }
  return rep;
}

RepresentationReport is_representation(const Mat& g, const QMatroid& m, const BigInt& budget) {
  if (static_cast<int>(g.cols()) != m.ground_dim()) {
    raise(Errc::GroundMismatch, "generator length differs from the ground dimension");
  }
  if (g.tower()->q() != m.tower()->q()) raise(Errc::GroundMismatch, "different base fields");
  const QMatroid mg = QMatroid::from_matrix(g);
  RepresentationReport rep;
  const auto subs = all_subspaces(g.tower(), Level::q, m.ground_dim(), budget);
  rep.subspaces = subs.size();
  for (const auto& v : subs) {
    const int a = mg.rank(v);
    const int b = m.rank(v);
    if (a != b) {
      rep.witness = v;
      rep.rank_matrix = a;
      rep.rank_matroid = b;
      return rep;
    }
  }
  rep.holds = true;
  rep.rank_matrix = mg.full_rank();
  rep.rank_matroid = m.full_rank();
  return rep;
}

MultiPoly rank_generating_function(const QMatroid& m, const BigInt& budget) {
  const auto subs = all_subspaces(m.tower(), Level::q, m.ground_dim(), budget);
  std::map<std::tuple<int, int, int>, long long> counts;
  for (const auto& d : subs) {
    const int r = m.rank(d);
    const int dim = static_cast<int>(d.rows());
    ++counts[{m.full_rank() - r, dim - r, dim}];
  }
  const MultiPoly x3 = MultiPoly::variable(Var::X3);
  const MultiPoly x4 = MultiPoly::variable(Var::X4);
  std::vector<MultiPoly> g{MultiPoly(1)};
  for (int l = 1; l <= m.ground_dim(); ++l) {
    const BigInt ql = ipow(BigInt(m.tower()->q()), static_cast<unsigned>(l - 1));
    g.push_back(g.back() * (x3 - MultiPoly(ql) * x4));
  }
  MultiPoly out;
  for (const auto& [key, c] : counts) {
    const auto [a, b, l] = key;
    out += MultiPoly(c) * MultiPoly::variable(Var::X1, a) * MultiPoly::variable(Var::X2, b) * g[l];
  }
  return out;
}

MultiPoly weight_enumerator(const WeightDistribution& a) {
  const int n = static_cast<int>(a.size()) - 1;
  MultiPoly out;
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    out += MultiPoly(a[i]) * MultiPoly::variable(Var::X, n - i) * MultiPoly::variable(Var::Y, i);
  }
  return out;
}

namespace {

Rational rpow(const Rational& b, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

}  // namespace

std::vector<IdentityPoint> check_weight_enumerator_identity(
    const WeightDistribution& a, const MultiPoly& rgf, int n, int k, std::uint64_t q, int m,
    const std::vector<std::pair<Rational, Rational>>& points, IdentityForm form) {
  if (static_cast<int>(a.size()) != n + 1) raise(Errc::InconsistentInput, "distribution length");
  const MultiPoly w = weight_enumerator(a);
  const Rational qq{BigInt(q)};
  std::vector<IdentityPoint> out;
  for (const auto& [y, x] : points) {
    if (y == 0) raise(Errc::DivisionByZero, "evaluation needs y != 0");
    const Rational big_y = rpow(y, m);
    IdentityPoint p{y, x, 0, 0, false};
    p.lhs = w.eval(assign({{Var::X, x}, {Var::Y, big_y}}));
    Rational x1;
    Rational x2;
    if (form == IdentityForm::derived) {
      x1 = rpow(qq, m) * big_y;
      x2 = 1 / big_y;
    } else {
      x1 = qq * y;
      x2 = 1 / y;
    }
    p.rhs = rpow(big_y, n - k) *
            rgf.eval(assign({{Var::X1, x1}, {Var::X2, x2}, {Var::X3, x}, {Var::X4, big_y}}));
    p.equal = p.lhs == p.rhs;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qdefect
