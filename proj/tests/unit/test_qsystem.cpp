#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qdefect/constructions.hpp"
#include "qdefect/error.hpp"
#include "qdefect/qsystem.hpp"

using namespace qdefect;
using fixtures::random_system;
using fixtures::rows_of;
using fixtures::subgeometry;

namespace {

// w_U(T) by intersecting the two point sets.
int brute_weight(const FqSystem& u, const Mat& t) {
  const auto& tower = *u.tower();
  const auto pts = oracle::fq_span_elements(tower, rows_of(u.vectors()), u.k());
  const auto tp = oracle::fqm_span_elements(tower, rows_of(t.empty() ? Mat(u.tower(), Level::qm, 1, u.k()) : t), u.k());
  std::size_t common = 0;
  for (const auto& v : pts) common += tp.count(v);
  return oracle::exact_log(common, tower.q());
}

// Brute maximum defect over all r-dimensional subspaces.
std::vector<int> brute_profile(const FqSystem& u) {
  std::vector<int> eps;
  for (int r = 0; r <= static_cast<int>(u.k()); ++r) {
    int best = -1000;
    auto s = enum_subspaces(u.tower(), Level::qm, static_cast<int>(u.k()), r);
    while (s.next()) best = std::max(best, brute_weight(u, s.current()) - r);
    eps.push_back(best);
  }
  return eps;
}

// U_1 + U_2 in F_{q^m}^2 with U_1 = {(a, 0) : a in A}, U_2 = {(0, b) : b in B}.
struct Split {
  FqSystem u;
  Mat part1, part2;
};

Split split_system(const TowerPtr& t, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  Mat v1(t, Level::qm, 0, 2), v2(t, Level::qm, 0, 2);
  for (Elem x : a) {
    const Elem row[2] = {x, 0};
    v1.append_row(row);
  }
  for (Elem x : b) {
    const Elem row[2] = {0, x};
    v2.append_row(row);
  }
  const FqSystem u1 = FqSystem::from_vectors(v1);
  const FqSystem u2 = FqSystem::from_vectors(v2);
  return {FqSystem::from_vectors(stack(v1, v2)), u1.basis(), u2.basis()};
}

// Every F_q-basis (as elements) of every n-dimensional F_q-subspace of F_{q^m}.
std::vector<std::vector<Elem>> subspaces_of_field(const TowerPtr& t, int n) {
  const auto base = FieldTower::make(t->p(), t->e(), 1);
  std::vector<std::vector<Elem>> out;
  auto s = enum_subspaces(base, Level::q, t->m(), n);
  while (s.next()) {
    std::vector<Elem> basis;
    for (std::size_t r = 0; r < s.current().rows(); ++r) basis.push_back(t->from_coordinates(s.current().row(r)));
    out.push_back(std::move(basis));
  }
  return out;
}

}  // namespace

TEST(Qsystem, WeightDefectExamples) {
  const auto t = FieldTower::make(2, 1, 4);
  const FqSystem sub = subgeometry(t, 3);
  const auto zero = weight_defect(sub, Mat(t, Level::qm, 0, 3));
  EXPECT_EQ(zero.weight, 0);
  EXPECT_EQ(zero.defect, 0);
  // Subspaces spanned by F_q-vectors have full weight; every subspace has defect <= 0.
  const auto f2 = FieldTower::make(2, 1, 1);
  for (int r = 0; r <= 3; ++r) {
    auto s = enum_subspaces(f2, Level::q, 3, r);
    while (s.next()) {
      const Mat tq = Mat(s.current()).lifted();
      const Mat tt = Mat::from_rows(t, Level::qm, 3, rows_of(tq));
      const auto wd = weight_defect(sub, tt);
      EXPECT_EQ(wd.weight, r);
      EXPECT_EQ(wd.defect, 0);
    }
    auto all = enum_subspaces(t, Level::qm, 3, r);
    while (all.next()) ASSERT_LE(weight_defect(sub, all.current()).defect, 0);
  }
  const FqSystem full = FqSystem::from_vectors(Mat::from_rows(t, Level::qm, 1, {{1}, {2}, {4}, {8}}));
  const auto wd = weight_defect(full, Mat::identity(t, Level::qm, 1));
  EXPECT_EQ(wd.weight, 4);
  EXPECT_EQ(wd.defect, 3);
  try {
    weight_defect(sub, Mat::identity(t, Level::qm, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AmbientMismatch);
  }
}

TEST(Qsystem, WeightAgainstPointCount) {
  std::mt19937_64 rng(2);
  for (auto [m, k, n] : std::vector<std::array<int, 3>>{{3, 2, 3}, {3, 2, 4}, {4, 2, 5}, {3, 3, 5}}) {
    const auto t = FieldTower::make(2, 1, m);
    const FqSystem u = random_system(t, k, n, rng);
    const WeightOracle oracle(u);
    for (int r = 0; r <= k; ++r) {
      auto s = enum_subspaces(t, Level::qm, k, r);
      while (s.next()) {
        const int w = brute_weight(u, s.current());
        ASSERT_EQ(weight_defect(u, s.current()).weight, w);
        ASSERT_EQ(oracle.weight(s.current()), w);
      }
    }
  }
}

TEST(Qsystem, ProfileAgainstBruteForce) {
  std::mt19937_64 rng(3);
  for (auto [m, k, n] : std::vector<std::array<int, 3>>{{3, 2, 3}, {3, 2, 5}, {4, 2, 4}, {4, 2, 6}, {3, 3, 4}, {3, 3, 6}}) {
    const auto t = FieldTower::make(2, 1, m);
    for (int trial = 0; trial < 3; ++trial) {
      const FqSystem u = random_system(t, k, n, rng);
      const auto& p = u.profile();
      ASSERT_EQ(p.eps, brute_profile(u));
      // Witnesses attain the stated values.
      for (int r = 0; r <= k; ++r) EXPECT_EQ(weight_defect(u, p.witnesses[r]).defect, p.eps[r]);
      // Sequence: strictly increasing pairs, last is (t_s, n-k), and eps is a step function.
      int last_t = 0, last_e = 0;
      for (const auto& st : p.sequence) {
        EXPECT_GT(st.t, last_t);
        EXPECT_GT(st.eps, last_e);
        EXPECT_EQ(p.eps[st.t], st.eps);
        EXPECT_LT(p.eps[st.t - 1], st.eps);
        EXPECT_EQ(weight_defect(u, st.witness).defect, st.eps);
        EXPECT_EQ(static_cast<int>(st.witness.rows()), st.t);
        last_t = st.t;
        last_e = st.eps;
      }
      EXPECT_EQ(last_e, n - k);
      // Monotone and pinned at both ends.
      EXPECT_EQ(p.eps[0], 0);
      EXPECT_EQ(p.eps[k], n - k);
      for (int r = 1; r <= k; ++r) EXPECT_GE(p.eps[r], p.eps[r - 1]);
      // t_s < k iff some hyperplane has weight n-1.
      bool heavy = false;
      auto h = enum_subspaces(t, Level::qm, k, k - 1);
      while (h.next()) heavy = heavy || brute_weight(u, h.current()) == n - 1;
      EXPECT_EQ(p.full_defect_below_k, heavy);
    }
  }
}

TEST(Qsystem, ProfileExamples) {
  const auto t = FieldTower::make(2, 1, 4);
  const FqSystem sub = subgeometry(t, 3);
  const auto& ps = sub.profile();
  EXPECT_EQ(ps.eps, (std::vector<int>{0, 0, 0, 0}));
  // No non-zero defects at all: the sequence is empty.
  EXPECT_EQ(ps.s(), 0);
  EXPECT_FALSE(ps.full_defect_below_k);

  const FqSystem gab = linearized_system(t, {{1}, {0, 1}});
  EXPECT_EQ(gab.n(), 4u);
  const auto& pg = gab.profile();
  ASSERT_EQ(pg.s(), 1);
  EXPECT_EQ(pg.sequence[0].t, 2);
  EXPECT_EQ(pg.sequence[0].eps, 2);
  EXPECT_EQ(pg.eps[1], 0);

  try {
    FqSystem::from_vectors(Mat::from_rows(t, Level::qm, 2, {{1, 0}, {2, 0}})).profile();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSpanning);
  }
  try {
    gab.profile(BigInt(3));
    // A cached profile needs no budget, so only a fresh system can trip it.
    linearized_system(t, {{1}, {0, 0, 1}}).profile(BigInt(3));
    FAIL();
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Qsystem, GlInvariance) {
  std::mt19937_64 rng(4);
  const auto t = FieldTower::make(2, 1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const FqSystem u = random_system(t, 3, 5, rng);
    Mat phi(t, Level::qm, 3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) phi(i, j) = static_cast<Elem>(rng() % t->size());
    } while (rank(phi) != 3);
    const FqSystem v = FqSystem::from_vectors(multiply(u.vectors(), phi));
    EXPECT_EQ(u.profile().eps, v.profile().eps);
  }
}

TEST(Qsystem, SubmodularityWithEqualityCondition) {
  std::mt19937_64 rng(5);
  const auto t = FieldTower::make(2, 1, 3);
  int equalities = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const FqSystem u = random_system(t, 3, 3 + static_cast<int>(rng() % 4), rng);
    const Mat a = random_subspace(t, Level::qm, 3, static_cast<int>(rng() % 4), rng);
    const Mat b = random_subspace(t, Level::qm, 3, static_cast<int>(rng() % 4), rng);
    const int ws = weight_defect(u, sum(a, b)).weight;
    const int wa = weight_defect(u, a).weight;
    const int wb = weight_defect(u, b).weight;
    const int wi = weight_defect(u, intersect(a, b)).weight;
    EXPECT_GE(ws, wa + wb - wi);
    const Mat ua = intersect(u.basis(), expand_fq(a, 3));
    const Mat ub = intersect(u.basis(), expand_fq(b, 3));
    const Mat us = intersect(u.basis(), expand_fq(sum(a, b), 3));
    const bool split = sum(ua, ub) == us;
    EXPECT_EQ(ws == wa + wb - wi, split);
    // The defect inequality is the same statement shifted by dimensions.
    const int es = ws - static_cast<int>(sum(a, b).rows());
    const int ei = wi - static_cast<int>(intersect(a, b).rows());
    EXPECT_GE(es, (wa - static_cast<int>(a.rows())) + (wb - static_cast<int>(b.rows())) - ei);
    equalities += split;
  }
  EXPECT_GT(equalities, 0);
}

TEST(Qsystem, SubgeometryCharacterization) {
  std::mt19937_64 rng(6);
  const auto t = FieldTower::make(2, 1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const FqSystem u = random_system(t, k, k + static_cast<int>(rng() % 3), rng);
    const auto& p = u.profile();
    const bool nonpositive = std::all_of(p.eps.begin(), p.eps.end(), [](int e) { return e <= 0; });
    EXPECT_EQ(nonpositive, u.qm_rank() == u.n());
    EXPECT_EQ(classify_system(u).is_subgeometry, nonpositive);
  }
}

TEST(Qsystem, MinimalityExamples) {
  const auto t = FieldTower::make(2, 1, 4);
  // One extra vector on top of a subgeometry: the hyperplane through it has weight n-1.
  const FqSystem u = FqSystem::from_vectors(Mat::from_rows(t, Level::qm, 2, {{1, 0}, {0, 1}, {2, 0}}));
  const Mat line = Mat::from_rows(t, Level::qm, 2, {{1, 0}});
  EXPECT_EQ(weight_defect(u, line).weight, 2);
  EXPECT_TRUE(is_minimal_wrt_defect(u, line));
  EXPECT_FALSE(is_minimal_wrt_defect(u, Mat::identity(t, Level::qm, 2)));
  EXPECT_TRUE(u.profile().full_defect_below_k);
  const auto e = minimal_defect_set(u);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].t, line);
  EXPECT_TRUE(minimal_defect_set(subgeometry(t, 3)).empty());
}

TEST(Qsystem, MinimalDefectSetAgainstDefinition) {
  std::mt19937_64 rng(7);
  const auto t = FieldTower::make(2, 1, 3);
  for (int trial = 0; trial < 8; ++trial) {
    const FqSystem u = random_system(t, 3, 4 + static_cast<int>(rng() % 3), rng);
    std::vector<Mat> expected;
    for (int r = 1; r < 3; ++r) {
      auto s = enum_subspaces(t, Level::qm, 3, r);
      while (s.next()) {
        const int e = brute_weight(u, s.current()) - r;
        if (e <= 0) continue;
        bool minimal = true;
        for (int r2 = 0; r2 < r && minimal; ++r2) {
          auto sub = enum_subspaces_of(s.current(), r2);
          while (sub.next() && minimal) minimal = brute_weight(u, sub.current()) - r2 < e;
        }
        if (minimal) expected.push_back(s.current());
      }
    }
    const auto got = minimal_defect_set(u);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].t, expected[i]);
      EXPECT_EQ(got[i].dim, static_cast<int>(expected[i].rows()));
      // A minimal subspace is spanned by its points of U.
      const Mat pts = unflatten_rows(intersect(u.basis(), expand_fq(got[i].t, 3)), 3);
      EXPECT_EQ(span_of(pts), got[i].t);
    }
  }
}

TEST(Qsystem, TwoClubHasOneMinimalLine) {
  const auto t = FieldTower::make(2, 1, 4);
  const auto found = find_two_club(t, 1);
  ASSERT_TRUE(found.system.has_value());
  const FqSystem& u = *found.system;
  const auto rep = classify_system(u);
  ASSERT_TRUE(rep.club_index.has_value());
  EXPECT_EQ(*rep.club_index, 2);
  const auto e = minimal_defect_set(u);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].dim, 1);
  EXPECT_EQ(e[0].eps, 1);
  EXPECT_EQ(brute_weight(u, e[0].t), 2);
}

TEST(Qsystem, ClassifyExamples) {
  const auto t = FieldTower::make(2, 1, 4);
  const auto sub = classify_system(subgeometry(t, 2));
  EXPECT_TRUE(sub.is_subgeometry);
  EXPECT_FALSE(sub.is_1_defect);
  EXPECT_EQ(sub.max_scattered_h, 2);
  for (const auto& ev : sub.evasive) EXPECT_EQ(ev.r_min, ev.h);

  const FqSystem gab = linearized_system(t, {{1}, {0, 1}});
  const auto g = classify_system(gab);
  EXPECT_FALSE(g.is_subgeometry);
  EXPECT_GE(g.max_scattered_h, 1);
  EXPECT_NE(std::find(g.maximum_scattered_h.begin(), g.maximum_scattered_h.end(), 1), g.maximum_scattered_h.end());
  EXPECT_FALSE(g.club_index.has_value());
}

TEST(Qsystem, OneDefectFlag) {
  std::mt19937_64 rng(8);
  const auto t = FieldTower::make(2, 1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const FqSystem u = random_system(t, 3, 5, rng);
    EXPECT_EQ(classify_system(u).is_1_defect, u.profile().s() == 2);
  }
}

TEST(Qsystem, KScatteredPositiveInstance) {
  const auto t = FieldTower::make(2, 1, 4);
  const Elem w = t->top().pow(2, 5);  // generator of F_4^*
  const Split s = split_system(t, {1, w}, {1, 2});
  const Decomposition d(s.u, {s.part1, s.part2});
  EXPECT_EQ(d.k_type(), (std::vector<int>{1, 1}));
  EXPECT_EQ(d.n_type(), (std::vector<int>{2, 2}));
  const auto rep = classify_system(s.u, &d);
  ASSERT_TRUE(rep.k_scattered.has_value());
  EXPECT_TRUE(rep.k_scattered->components_scattered);
  EXPECT_TRUE(rep.k_scattered->cross_hyperplanes);
  EXPECT_TRUE(rep.k_scattered->verdict);
  EXPECT_TRUE(rep.k_scattered->nonpositive_defect);
  // Both components are minimal; E_U is exactly the two proper component sums.
  for (const auto& f : d.spans()) EXPECT_TRUE(is_minimal_wrt_defect(s.u, f));
  const auto e = minimal_defect_set(s.u);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_TRUE((e[0].t == d.spans()[0] && e[1].t == d.spans()[1]) ||
              (e[0].t == d.spans()[1] && e[1].t == d.spans()[0]));
  // Additivity on component-respecting sums.
  EXPECT_EQ(weight_defect(s.u, d.spans()[0]).weight + weight_defect(s.u, d.spans()[1]).weight,
            weight_defect(s.u, sum(d.spans()[0], d.spans()[1])).weight);
}

TEST(Qsystem, KScatteredBelowTheBoundDoesNotExist) {
  // With k = (1,1) a k-scattered system needs m >= n_1 + n_2, with equality only for n_1 = n_2.
  for (auto [m, n1, n2] : std::vector<std::array<int, 3>>{{3, 2, 2}, {4, 2, 3}, {4, 3, 3}, {5, 2, 3}}) {
    const auto t = FieldTower::make(2, 1, m);
    const auto as = subspaces_of_field(t, n1);
    const auto bs = subspaces_of_field(t, n2);
    int verdicts = 0;
    for (const auto& a : as) {
      for (const auto& b : bs) {
        const Split s = split_system(t, a, b);
        const Decomposition d(s.u, {s.part1, s.part2});
        verdicts += classify_system(s.u, &d).k_scattered->verdict;
      }
    }
    EXPECT_EQ(verdicts, 0) << "m=" << m << " n=(" << n1 << "," << n2 << ")";
  }
}

TEST(Qsystem, DecompositionValidation) {
  const auto t = FieldTower::make(2, 1, 4);
  const Split s = split_system(t, {1, 2}, {1, 4});
  try {
    // The first part listed twice does not give a direct sum equal to U.
    Decomposition bad(s.u, {s.part1, s.part1});
    (void)classify_system(s.u, &bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DecompositionInvalid);
  }
}

TEST(Qsystem, WeightSpectrumTotals) {
  std::mt19937_64 rng(9);
  const auto t = FieldTower::make(2, 1, 4);
  const FqSystem u = random_system(t, 2, 5, rng);
  BigInt total = 0;
  BigInt points = 0;
  for (const auto& [w, count] : weight_spectrum(u, 1)) {
    total += count;
    points += count * (ipow(BigInt(2), w) - 1);
  }
  EXPECT_EQ(total, gaussian_binomial(2, 1, 16));
  // Each nonzero vector of U lies on exactly one line.
  EXPECT_EQ(points, ipow(BigInt(2), 5) - 1);
}
