#pragma once

#include <random>
#include <vector>

#include "qdefect/qsystem.hpp"

namespace fixtures {

using namespace qdefect;

inline std::vector<std::vector<Elem>> rows_of(const Mat& m) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

inline Mat random_mat(const TowerPtr& t, Level lv, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Mat m(t, lv, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rng() % t->order(lv));
  return m;
}

// Spanning F_q-subspace of F_{q^m}^k with F_q-dimension n.
inline FqSystem random_system(const TowerPtr& t, int k, int n, std::mt19937_64& rng) {
  for (;;) {
    FqSystem u = FqSystem::from_vectors(random_mat(t, Level::qm, n, k, rng));
    if (static_cast<int>(u.n()) == n && u.spans_ambient()) return u;
  }
}

inline FqSystem subgeometry(const TowerPtr& t, int k) {
  return FqSystem::from_vectors(Mat::identity(t, Level::qm, k));
}

}  // namespace fixtures
