#include "qdefect/constructions.hpp"

#include <set>

#include "qdefect/error.hpp"

namespace qdefect {

Mat gabidulin_generator(const TowerPtr& tower, int k, std::span<const Elem> g) {
  const int n = static_cast<int>(g.size());
  if (k < 1 || k > n) raise(Errc::BadParams, "Gabidulin code needs 1 <= k <= n");
  Mat out(tower, Level::qm, k, n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = tower->frobenius(Level::qm, g[j], i);
  }
  return out;
}

Mat gabidulin_generator(const TowerPtr& tower, int k, int n) {
  if (n > tower->m()) raise(Errc::BadParams, "Gabidulin code needs n <= m");
  std::vector<Elem> g;
  for (int j = 0; j < n; ++j) g.push_back(tower->gamma(j));
  return gabidulin_generator(tower, k, g);
}

Elem eval_linearized(const FieldTower& tower, std::span<const Elem> coeffs, Elem x) {
  const Field& F = tower.top();
  Elem out = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i]) {
      out = F.add(out, F.mul(coeffs[i], tower.frobenius(Level::qm, x, static_cast<unsigned>(i))));
    }
  }
  return out;
}

FqSystem linearized_system(const TowerPtr& tower, const std::vector<std::vector<Elem>>& polys) {
  const int m = tower->m();
  Mat v(tower, Level::qm, m, polys.size());
  for (int i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < polys.size(); ++j) {
      v(i, j) = eval_linearized(*tower, polys[j], tower->gamma(i));
    }
  }
  return FqSystem::from_vectors(v);
}

FqSystem graph_system(const TowerPtr& tower, std::span<const Elem> coeffs) {
  return linearized_system(tower, {{1}, {coeffs.begin(), coeffs.end()}});
}

FqSystem quasi_mrd_example(const TowerPtr& tower, Elem a) {
  if (tower->m() != 4) raise(Errc::BadParams, "the example lives in F_{q^4}^3");
  const Field& F = tower->top();
  Mat v(tower, Level::qm, 0, 3);
  for (int i = 0; i < 4; ++i) {
    const Elem x = tower->gamma(i);
    const Elem row[3] = {tower->frobenius(Level::qm, x, 1),
                         F.sub(tower->frobenius(Level::qm, x, 2), x),
                         tower->frobenius(Level::qm, x, 3)};
    v.append_row(row);
  }
  const Elem last[3] = {0, 0, F.neg(a)};
  v.append_row(last);
  return FqSystem::from_vectors(v);
}

Mat block_diagonal(const std::vector<Mat>& blocks) {
  if (blocks.empty()) raise(Errc::BadParams, "no blocks");
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (!same_tower(b.tower(), blocks[0].tower()) || b.level() != blocks[0].level()) {
      raise(Errc::TowerMismatch, "blocks over different fields");
    }
    rows += b.rows();
    cols += b.cols();
  }
  Mat out(blocks[0].tower(), blocks[0].level(), rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Mat random_systematic(const TowerPtr& tower, int k, int n, std::mt19937_64& rng) {
  if (k < 0 || k > n) raise(Errc::BadRange, "systematic generator needs 0 <= k <= n");
  std::uniform_int_distribution<Elem> pick(0, tower->size() - 1);
  Mat g(tower, Level::qm, k, n);
  for (int i = 0; i < k; ++i) {
    g(i, i) = 1;
    for (int j = k; j < n; ++j) g(i, j) = pick(rng);
  }
  return g;
}

std::vector<CorpusCode> desk_corpus(std::uint64_t seed, int per_shape) {
  struct Shape {
    int m, k, n;
  };
  static const Shape kShapes[] = {
      {3, 1, 2}, {3, 1, 3}, {3, 2, 3}, {3, 2, 4}, {3, 2, 5}, {3, 3, 5}, {3, 3, 6},
      {4, 1, 2}, {4, 1, 3}, {4, 1, 4}, {4, 2, 3}, {4, 2, 4}, {4, 2, 5}, {4, 3, 4},
      {4, 3, 5}, {4, 3, 6},
  };
  std::vector<CorpusCode> out;
  for (const auto& s : kShapes) {
    const TowerPtr tower = FieldTower::make(2, 1, s.m);
    std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(s.m * 100 + s.k * 10 + s.n));
    std::set<std::vector<Elem>> seen;
    int found = 0;
    for (int attempt = 0; attempt < per_shape * 200 && found < per_shape; ++attempt) {
      const Mat g = random_systematic(tower, s.k, s.n, rng);
      if (!seen.insert(g.data()).second) continue;
      RankCode c = RankCode::from_generator(g);
      if (!c.nondegenerate() || !c.dual_nondegenerate()) continue;
      out.push_back({"m=" + std::to_string(s.m) + " k=" + std::to_string(s.k) +
                         " n=" + std::to_string(s.n),
                     std::move(c)});
      ++found;
    }
  }
  return out;
}

std::optional<RankCode> find_near_mrd(const TowerPtr& tower) {
  const Elem size = tower->size();
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      for (Elem c = 0; c < size; ++c) {
        for (Elem d = 0; d < size; ++d) {
          const Mat g = Mat::from_rows(tower, Level::qm, 4, {{1, 0, a, b}, {0, 1, c, d}});
          RankCode code = RankCode::from_generator(g);
          if (!code.nondegenerate() || !code.dual_nondegenerate()) continue;
          if (code.system().profile().eps[1] == 1) return code;
        }
      }
    }
  }
  return std::nullopt;
}

ClubSearch find_two_club(const TowerPtr& tower, std::uint64_t seed, int tries) {
  const int m = tower->m();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, tower->size() - 1);
  ClubSearch out;
  for (; out.tried < tries;) {
    ++out.tried;
    std::vector<Elem> coeffs(m);
    for (auto& c : coeffs) c = pick(rng);
    // Kernel of f as an F_q-linear map, through its matrix on Gamma.
    Mat images(tower, Level::qm, m, 1);
    for (int i = 0; i < m; ++i) images(i, 0) = eval_linearized(*tower, coeffs, tower->gamma(i));
    const int kernel_dim = m - static_cast<int>(rank(flatten_rows(images)));
    if (kernel_dim != 2) continue;
    FqSystem u = graph_system(tower, coeffs);
    const auto spectrum = weight_spectrum(u, 1);
    BigInt heavy = 0;
    bool two = true;
    for (const auto& [w, count] : spectrum) {
      if (w >= 2) {
        heavy += count;
        two = two && w == 2;
      }
    }
    if (heavy == 1 && two) {
      out.system = std::move(u);
      out.coeffs = std::move(coeffs);
      return out;
    }
  }
  return out;
}

std::vector<RankCode> block_11_mrd_codes(const TowerPtr& tower) {
  const Elem size = tower->size();
  const Elem q = tower->q();
  std::vector<RankCode> out;
  for (Elem a = q; a < size; ++a) {
    for (Elem b = q; b < size; ++b) {
      bool ok = true;
      for (Elem mu = 1; mu < size && ok; ++mu) {
        const Elem w[4] = {1, a, mu, tower->top().mul(mu, b)};
        ok = rank_weight(*tower, w) >= 3;
      }
      if (!ok) continue;
      out.push_back(RankCode::from_generator(
          Mat::from_rows(tower, Level::qm, 4, {{1, a, 0, 0}, {0, 0, 1, b}})));
    }
  }
  return out;
}

bool codes_equivalent(const RankCode& a, const RankCode& b, const BigInt& budget) {
  if (!same_tower(a.tower(), b.tower())) raise(Errc::TowerMismatch, "codes over different towers");
  if (a.n() != b.n() || a.k() != b.k()) return false;
  const TowerPtr& tower = a.tower();
  const std::size_t n = a.n();
  const std::uint32_t q = tower->q();
  const BigInt total = ipow(BigInt(q), static_cast<unsigned>(n * n));
  if (total > budget) {
    throw BudgetError(total, budget, "equivalence search over " + total.str() + " matrices");
  }
  std::vector<Mat> frob;
  for (int i = 0; i < tower->m(); ++i) {
    Mat g = a.generator();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < n; ++c) g(r, c) = tower->frobenius(Level::qm, g(r, c), i);
    }
    frob.push_back(std::move(g));
  }
  Mat x(tower, Level::q, n, n);
  const std::uint64_t count = static_cast<std::uint64_t>(total);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        x(r, c) = static_cast<Elem>(v % q);
        v /= q;
      }
    }
    if (rank(x) != n) continue;
    const Mat lifted = x.lifted();
    for (const auto& g : frob) {
      if (span_of(multiply(g, lifted)) == b.generator()) return true;
    }
  }
  return false;
}

}  // namespace qdefect
