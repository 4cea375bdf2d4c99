#include "qdefect/qsystem.hpp"

#include <algorithm>
#include <limits>

#include "qdefect/error.hpp"
#include "qdefect/parallel.hpp"

namespace qdefect {

FqSystem::FqSystem(TowerPtr tower, std::size_t k, const Mat& basis_q)
    : tower_(std::move(tower)), k_(k), basis_(basis_q), qm_rank_(0),
      cache_(std::make_shared<Cache>()) {
  if (basis_q.level() != Level::q) raise(Errc::LevelMismatch, "system basis must be over F_q");
  if (!same_tower(tower_, basis_q.tower())) raise(Errc::TowerMismatch, "basis over another tower");
  if (basis_q.cols() != k * static_cast<std::size_t>(tower_->m())) {
    raise(Errc::AmbientMismatch, "system basis width must be m*k");
  }
  basis_ = span_of(basis_q);
  qm_rank_ = rank(unflatten_rows(basis_, k_));
}

FqSystem FqSystem::from_vectors(const Mat& vectors) {
  if (vectors.level() != Level::qm) raise(Errc::LevelMismatch, "vectors must be over F_{q^m}");
  return FqSystem(vectors.tower(), vectors.cols(), flatten_rows(vectors));
}

FqSystem FqSystem::from_columns(const Mat& g) { return from_vectors(transpose(g)); }

const DefectProfile& FqSystem::profile(const BigInt& budget) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->profile) cache_->profile = defect_profile(*this, budget);
  return *cache_->profile;
}

WeightOracle::WeightOracle(const FqSystem& u)
    : u_(&u),
      packed_(u.tower()->q() == 2 && u.basis().cols() <= 64),
      rows_(u.tower()->base(), u.basis().cols()) {
  const Mat& b = u.basis();
  if (packed_) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::uint64_t w = 0;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(r, c)) w |= std::uint64_t{1} << c;
      }
      bits_.insert(w);
    }
  } else {
    for (std::size_t r = 0; r < b.rows(); ++r) rows_.insert(b.row(r));
  }
}

int WeightOracle::weight(const Mat& t) const {
  const FieldTower& T = *u_->tower();
  const Field& F = T.top();
  const int m = T.m();
  const std::size_t k = u_->k();
  if (t.cols() != k || t.level() != Level::qm) {
    raise(Errc::AmbientMismatch, "subspace does not live in the system's ambient space");
  }
  int added = 0;
  if (packed_) {
    BitReducer red = bits_;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      for (int i = 0; i < m; ++i) {
        const Elem g = T.gamma(i);
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < k; ++j) {
          w |= std::uint64_t{F.mul(g, t(r, j))} << (j * m);
        }
        if (red.insert(w)) ++added;
      }
    }
  } else {
    RowReducer red = rows_;
    std::vector<Elem> flat(k * m);
    for (std::size_t r = 0; r < t.rows(); ++r) {
      for (int i = 0; i < m; ++i) {
        const Elem g = T.gamma(i);
        for (std::size_t j = 0; j < k; ++j) {
          const auto c = T.coordinates(F.mul(g, t(r, j)));
          std::copy(c.begin(), c.end(), flat.begin() + j * m);
        }
        if (red.insert(flat)) ++added;
      }
    }
  }
  return m * static_cast<int>(t.rows()) - added;
}

WeightDefect weight_defect(const FqSystem& u, const Mat& t) {
  if (!same_tower(u.tower(), t.tower())) raise(Errc::TowerMismatch, "subspace over another tower");
  if (t.level() != Level::qm || t.cols() != u.k()) {
    raise(Errc::AmbientMismatch, "subspace does not live in the system's ambient space");
  }
  const Mat basis = span_of(t);
  const int w = WeightOracle(u).weight(basis);
  return {w, w - static_cast<int>(basis.rows())};
}

namespace {

struct Best {
  int eps = std::numeric_limits<int>::min();
  std::optional<Mat> witness;
};

// Maximum defect over r-dimensional subspaces; ties keep the earliest in stream order.
Best max_defect(const FqSystem& u, const WeightOracle& oracle, int r, const BigInt& budget) {
  const int k = static_cast<int>(u.k());
  SubspaceStream check(u.tower(), Level::qm, k, r, budget);  // budget check only
  const auto sets = pivot_sets(k, r);
  std::vector<Best> partial(sets.size());
  parallel_for(sets.size(), [&](std::size_t i) {
    auto s = SubspaceStream::with_pivots(u.tower(), Level::qm, k, sets[i]);
    Best b;
    while (s.next()) {
      const int e = oracle.weight(s.current()) - r;
      if (e > b.eps) {
        b.eps = e;
        b.witness = s.current();
      }
    }
    partial[i] = std::move(b);
  });
  Best out;
  for (auto& b : partial) {
    if (b.eps > out.eps) out = std::move(b);
  }
  return out;
}

}  // namespace

DefectProfile defect_profile(const FqSystem& u, const BigInt& budget) {
  if (!u.spans_ambient()) raise(Errc::NotSpanning, "U does not span the ambient space");
  const int k = static_cast<int>(u.k());
  const int n = static_cast<int>(u.n());
  DefectProfile p;
  p.eps.assign(k + 1, 0);
  p.witnesses.assign(k + 1, Mat(u.tower(), Level::qm, 0, k));
  p.witnesses[k] = Mat::identity(u.tower(), Level::qm, k);
  p.eps[k] = n - k;
  const WeightOracle oracle(u);
  for (int r = 1; r < k; ++r) {
    Best b = max_defect(u, oracle, r, budget);
    p.eps[r] = b.eps;
    p.witnesses[r] = std::move(*b.witness);
  }
  int last = 0;
  for (int r = 1; r <= k; ++r) {
    if (p.eps[r] > last) {
      p.sequence.push_back({r, p.eps[r], p.witnesses[r]});
      last = p.eps[r];
    }
  }
  p.full_defect_below_k = !p.sequence.empty() && p.sequence.back().t < k;
  return p;
}

bool is_minimal_wrt_defect(const FqSystem& u, const Mat& t, const BigInt& budget) {
  const Mat basis = span_of(t);
  const int d = static_cast<int>(basis.rows());
  if (d == 0) raise(Errc::BadParams, "minimality needs a nonzero subspace");
  const WeightOracle oracle(u);
  const int e = oracle.weight(basis) - d;
  if (e <= 0) return false;
  for (int r = 1; r < d; ++r) {
    auto s = enum_subspaces_of(basis, r, budget);
    while (s.next()) {
      if (oracle.weight(s.current()) - r >= e) return false;
    }
  }
  return true;
}

std::vector<DefectEntry> minimal_defect_set(const FqSystem& u, const BigInt& budget) {
  if (!u.spans_ambient()) raise(Errc::NotSpanning, "U does not span the ambient space");
  const int k = static_cast<int>(u.k());
  const WeightOracle oracle(u);
  std::map<std::vector<Elem>, int> memo;
  auto defect = [&](const Mat& t) {
    auto [it, fresh] = memo.try_emplace(t.data(), 0);
    if (fresh) it->second = oracle.weight(t) - static_cast<int>(t.rows());
    return it->second;
  };
  std::vector<DefectEntry> out;
  for (int r = 1; r < k; ++r) {
    auto s = enum_subspaces(u.tower(), Level::qm, k, r, budget);
    while (s.next()) {
      const Mat& t = s.current();
      const int e = defect(t);
      if (e <= 0) continue;
      bool minimal = true;
      for (int j = 1; j < r && minimal; ++j) {
        auto sub = enum_subspaces_of(t, j, budget);
        while (sub.next()) {
          if (defect(sub.current()) >= e) {
            minimal = false;
            break;
          }
        }
      }
      if (minimal) out.push_back({t, r, e});
    }
  }
  return out;
}

std::map<int, BigInt> weight_spectrum(const FqSystem& u, int r, const BigInt& budget) {
  const WeightOracle oracle(u);
  std::map<int, BigInt> out;
  auto s = enum_subspaces(u.tower(), Level::qm, static_cast<int>(u.k()), r, budget);
  while (s.next()) out[oracle.weight(s.current())] += 1;
  return out;
}

Decomposition::Decomposition(const FqSystem& u, std::vector<Mat> parts) {
  const std::size_t k = u.k();
  Mat all(u.tower(), Level::q, 0, u.basis().cols());
  Mat spans(u.tower(), Level::qm, 0, k);
  int n_total = 0;
  int k_total = 0;
  for (auto& part : parts) {
    if (part.level() != Level::q || part.cols() != u.basis().cols()) {
      raise(Errc::DecompositionInvalid, "component is not an F_q-subspace of the expansion");
    }
    Mat b = span_of(part);
    if (!contains(u.basis(), b)) raise(Errc::DecompositionInvalid, "component is not inside U");
    Mat f = span_of(unflatten_rows(b, k));
    n_total += static_cast<int>(b.rows());
    k_total += static_cast<int>(f.rows());
    if (f.rows() > b.rows()) raise(Errc::DecompositionInvalid, "component has k_i > n_i");
    n_type_.push_back(static_cast<int>(b.rows()));
    k_type_.push_back(static_cast<int>(f.rows()));
    all = stack(all, b);
    spans = stack(spans, f);
    parts_.push_back(std::move(b));
    spans_.push_back(std::move(f));
  }
  if (n_total != static_cast<int>(u.n()) || rank(all) != u.n()) {
    raise(Errc::DecompositionInvalid, "components do not form a direct sum equal to U");
  }
  if (k_total != static_cast<int>(k) || rank(spans) != k) {
    raise(Errc::DecompositionInvalid, "component spans do not form a direct sum equal to V");
  }
}

namespace {

bool contains_some_component(const Mat& t, const Decomposition& d) {
  for (const auto& f : d.spans()) {
    if (contains(t, f)) return true;
  }
  return false;
}

KScatteredReport check_k_scattered(const FqSystem& u, const Decomposition& d,
                                   const BigInt& budget) {
  KScatteredReport rep;
  const WeightOracle oracle(u);
  const int k = static_cast<int>(u.k());
  auto note = [&](const Mat& w) {
    if (!rep.witness) rep.witness = w;
  };

  rep.components_scattered = true;
  for (std::size_t i = 0; i < d.spans().size(); ++i) {
    const int ki = d.k_type()[i];
    const int ni = d.n_type()[i];
    if (ni <= ki) {
      rep.components_scattered = false;
      note(d.spans()[i]);
      continue;
    }
    if (ki == 1) continue;
    auto s = enum_subspaces_of(d.spans()[i], ki - 1, budget);
    while (s.next()) {
      if (oracle.weight(s.current()) > ki - 1) {
        rep.components_scattered = false;
        note(s.current());
        break;
      }
    }
  }

  rep.cross_hyperplanes = true;
  {
    auto s = enum_subspaces(u.tower(), Level::qm, k, k - 1, budget);
    while (s.next()) {
      if (contains_some_component(s.current(), d)) continue;
      if (oracle.weight(s.current()) > k - 1) {
        rep.cross_hyperplanes = false;
        note(s.current());
        break;
      }
    }
  }

  rep.nonpositive_defect = true;
  for (int r = 1; r < k && rep.nonpositive_defect; ++r) {
    auto s = enum_subspaces(u.tower(), Level::qm, k, r, budget);
    while (s.next()) {
      if (contains_some_component(s.current(), d)) continue;
      if (oracle.weight(s.current()) - r > 0) {
        rep.nonpositive_defect = false;
        break;
      }
    }
  }
  rep.verdict = rep.components_scattered && rep.cross_hyperplanes;
  return rep;
}

}  // namespace

SystemReport classify_system(const FqSystem& u, const Decomposition* decomposition,
                             const BigInt& budget) {
  SystemReport rep;
  rep.k = u.k();
  rep.n = u.n();
  rep.profile = u.profile(budget);
  const auto& eps = rep.profile.eps;
  const int k = static_cast<int>(u.k());
  const int n = static_cast<int>(u.n());
  const int m = u.tower()->m();
  for (int h = 1; h <= k; ++h) {
    if (eps[h] <= 0) rep.max_scattered_h = h;
    rep.evasive.push_back({h, h + eps[h]});
  }
  rep.is_subgeometry = std::all_of(eps.begin(), eps.end(), [](int e) { return e <= 0; });
  for (int h = 1; h < k; ++h) {
    if (eps[h] <= 0 && (h + 1) * n == k * m) rep.maximum_scattered_h.push_back(h);
  }
  if (k == 2) {
    const auto spectrum = weight_spectrum(u, 1, budget);
    BigInt heavy = 0;
    int heavy_weight = 0;
    for (const auto& [w, c] : spectrum) {
      if (w >= 2) {
        heavy += c;
        heavy_weight = w;
      }
    }
    if (heavy == 1) rep.club_index = heavy_weight;
  }
  rep.is_1_defect = rep.profile.s() == 2;
  if (decomposition) rep.k_scattered = check_k_scattered(u, *decomposition, budget);
  return rep;
}

}  // namespace qdefect
