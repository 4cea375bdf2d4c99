#include "qdefect/rmcode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qdefect/error.hpp"
#include "qdefect/parallel.hpp"

namespace qdefect {

namespace {

Mat canonical_generator(const Mat& g) {
  if (g.level() != Level::qm) raise(Errc::LevelMismatch, "generator must be over F_{q^m}");
  Echelon e = rref(g);
  if (e.rank != g.rows()) {
    raise(Errc::RankDeficient, "generator has rank " + std::to_string(e.rank) + " < " +
                                   std::to_string(g.rows()) + " rows");
  }
  return std::move(e.basis);
}

// Gamma(v): the m x n matrix over F_q of coordinates, entry (i, j) = i-th coordinate of v_j.
Mat expansion_matrix(const TowerPtr& tower, std::span<const Elem> v) {
  const int m = tower->m();
  Mat out(tower, Level::q, m, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (int i = 0; i < m; ++i) out(i, j) = tower->coordinate(v[j], i);
  }
  return out;
}

// Rank of the coordinate columns without building matrices.
class WeightMeter {
 public:
  explicit WeightMeter(const FieldTower& tower) : tower_(&tower), packed_(tower.q() == 2) {}

  int operator()(std::span<const Elem> v) const {
    if (packed_) {
      BitReducer red;
      for (Elem x : v) {
        if (x) red.insert(x);
      }
      return static_cast<int>(red.rank());
    }
    RowReducer red(tower_->base(), tower_->m());
    for (Elem x : v) {
      if (x) red.insert(tower_->coordinates(x));
    }
    return static_cast<int>(red.rank());
  }

 private:
  const FieldTower* tower_;
  bool packed_;
};

BigInt codeword_count(const FieldTower& t, std::size_t k) {
  return ipow(BigInt(t.size()), static_cast<unsigned>(k));
}

void check_codeword_budget(const BigInt& count, const BigInt& budget, const std::string& what) {
  if (count > budget) {
    throw BudgetError(count, budget,
                      what + " needs " + to_string(count) + " codewords, budget " + to_string(budget));
  }
}

// Codewords xG with x_0 fixed, remaining coordinates as an odometer (last fastest).
template <class Fn>
void enumerate_with_head(const Mat& g, Elem head, Fn&& fn) {
  const Field& F = g.field();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  const std::uint32_t order = F.order();
  std::vector<Elem> x(k, 0);
  x[0] = head;
  std::vector<Elem> word(n);
  for (;;) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(x[i], g(i, j)));
    }
    fn(std::span<const Elem>(word));
    std::size_t pos = k;
    while (pos > 1) {
      --pos;
      if (++x[pos] < order) break;
      x[pos] = 0;
      if (pos == 1) return;
    }
    if (k == 1) return;
  }
}

}  // namespace

RankCode::RankCode(Mat g) : g_(std::move(g)) {
  system_ = std::make_shared<const FqSystem>(FqSystem::from_columns(g_));
  const Mat h = kernel(g_);
  dual_nondegenerate_ = rank(flatten_rows(transpose(h))) == n();
}

RankCode RankCode::from_generator(const Mat& g) { return RankCode(canonical_generator(g)); }

RankCode code_from_generator(const Mat& g) { return RankCode::from_generator(g); }

RankCode dual_code(const RankCode& c) { return RankCode::from_generator(kernel(c.generator())); }

int rank_weight(const FieldTower& tower, std::span<const Elem> v) { return WeightMeter(tower)(v); }

WeightSupport rank_weight_support(const TowerPtr& tower, std::span<const Elem> v,
                                  SupportMethod method) {
  const std::size_t n = v.size();
  const int m = tower->m();
  Mat supp(tower, Level::q, 0, n);
  switch (method) {
    case SupportMethod::expansion:
      supp = span_of(expansion_matrix(tower, v));
      break;
    case SupportMethod::trace: {
      // Tr(<v>) is spanned by Tr(gamma_i v) over the basis gamma_0..gamma_{m-1}.
      const Field& F = tower->top();
      Mat rows(tower, Level::q, m, n);
      for (int i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows(i, j) = tower->trace(F.mul(tower->gamma(i), v[j]));
      }
      supp = span_of(rows);
      break;
    }
    case SupportMethod::perp: {
      Mat d(tower, Level::qm, 0, n);
      d.append_row(v);
      supp = orthogonal_complement(restrict_to_base(kernel(d)));
      break;
    }
  }
  const int w = static_cast<int>(supp.rows());
  return {w, std::move(supp)};
}

Mat subcode_support(const Mat& rows) {
  Mat all(rows.tower(), Level::q, 0, rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    all = stack(all, expansion_matrix(rows.tower(), rows.row(r)));
  }
  return span_of(all);
}

void for_each_codeword(const RankCode& c, const BigInt& budget,
                       const std::function<void(std::span<const Elem>)>& fn) {
  check_codeword_budget(codeword_count(*c.tower(), c.k()), budget, "codeword enumeration");
  if (c.k() == 0) {
    std::vector<Elem> zero(c.n(), 0);
    fn(zero);
    return;
  }
  for (Elem head = 0; head < c.tower()->size(); ++head) enumerate_with_head(c.generator(), head, fn);
}

WeightDistribution weight_distribution(const RankCode& c, const BigInt& budget) {
  const std::size_t n = c.n();
  check_codeword_budget(codeword_count(*c.tower(), c.k()), budget, "weight distribution");
  WeightDistribution out(n + 1, 0);
  if (c.k() == 0) {
    out[0] = 1;
    return out;
  }
  const std::uint32_t heads = c.tower()->size();
  std::vector<std::vector<std::uint64_t>> partial(heads, std::vector<std::uint64_t>(n + 1, 0));
  const WeightMeter meter(*c.tower());
  parallel_for(heads, [&](std::size_t h) {
    auto& counts = partial[h];
    enumerate_with_head(c.generator(), static_cast<Elem>(h),
                        [&](std::span<const Elem> w) { ++counts[meter(w)]; });
  });
  for (const auto& counts : partial) {
    for (std::size_t i = 0; i <= n; ++i) out[i] += counts[i];
  }
  return out;
}

namespace {

void require_nondegenerate(const RankCode& c) {
  if (!c.nondegenerate()) raise(Errc::DegenerateCode, "code is degenerate");
  if (!c.dual_nondegenerate()) raise(Errc::DegenerateCode, "dual code is degenerate");
}

// Max weight of (k-r)-dimensional subspaces against U_C.
int max_weight(const RankCode& c, int dim, const BigInt& budget) {
  if (dim == 0) return 0;
  const WeightOracle oracle(c.system());
  int best = 0;
  auto s = enum_subspaces(c.tower(), Level::qm, static_cast<int>(c.k()), dim, budget);
  while (s.next()) best = std::max(best, oracle.weight(s.current()));
  return best;
}

}  // namespace

std::vector<int> generalized_weights(const RankCode& c, GenWeightMethod method,
                                     const BigInt& budget) {
  const int n = static_cast<int>(c.n());
  const int k = static_cast<int>(c.k());
  std::vector<int> d(k);
  switch (method) {
    case GenWeightMethod::defect: {
      require_nondegenerate(c);
      const auto& eps = c.system().profile(budget).eps;
      for (int r = 1; r <= k; ++r) d[r - 1] = n - k + r - eps[k - r];
      break;
    }
    case GenWeightMethod::codim: {
      const int dim_u = static_cast<int>(c.system().n());
      for (int r = 1; r <= k; ++r) d[r - 1] = dim_u - max_weight(c, k - r, budget);
      break;
    }
    case GenWeightMethod::subcode: {
      for (int r = 1; r <= k; ++r) {
        int best = n + 1;
        auto s = enum_subspaces(c.tower(), Level::qm, k, r, budget);
        while (s.next()) {
          const Mat sub = multiply(s.current(), c.generator());
          best = std::min(best, static_cast<int>(subcode_support(sub).rows()));
        }
        d[r - 1] = best;
      }
      break;
    }
  }
  return d;
}

std::vector<int> dual_generalized_weights_from_profile(const RankCode& c, const BigInt& budget) {
  require_nondegenerate(c);
  const int n = static_cast<int>(c.n());
  const int k = static_cast<int>(c.k());
  const auto& seq = c.system().profile(budget).sequence;
  std::vector<int> d;
  for (int r = 1; r <= n - k; ++r) {
    auto it = std::find_if(seq.begin(), seq.end(), [r](const DefectStep& s) { return r <= s.eps; });
    if (it == seq.end()) raise(Errc::InconsistentInput, "defect sequence does not reach n-k");
    d.push_back(r + it->t);
  }
  return d;
}

bool wei_partition_holds(int n, const std::vector<int>& d, const std::vector<int>& d_dual) {
  if (static_cast<int>(d.size() + d_dual.size()) != n) return false;
  std::set<int> seen;
  for (int x : d_dual) seen.insert(x);
  for (int x : d) seen.insert(n + 1 - x);
  return static_cast<int>(seen.size()) == n && *seen.begin() == 1 && *seen.rbegin() == n;
}

namespace {

Rational singleton_bound(int n, int k, int m) {
  const Rational a = n - k + 1;
  const Rational b = Rational(m + 1) - Rational(k * m, n);
  return std::min(a, b);
}

bool is_quasi_mrd(int n, int k, int m, int d) {
  if (n <= m || (m * k) % n == 0) return false;
  const int ceil_km_n = (k * m + n - 1) / n;
  return d == m - ceil_km_n + 1;
}

std::vector<Elem> as_vector(std::span<const Elem> v) { return {v.begin(), v.end()}; }

struct BlockCheck {
  bool blocks_mrd = true;
  std::optional<std::vector<Elem>> witness;
  std::vector<Mat> parts;  // F_q bases of the block components of U_C
};

BlockCheck check_blocks(const RankCode& c, const Blocks& b, const BigInt& subspace_budget,
                        const BigInt& codeword_budget) {
  const int n = static_cast<int>(c.n());
  const int k = static_cast<int>(c.k());
  const TowerPtr& tower = c.tower();
  if (b.n.size() != b.k.size() || b.n.empty()) {
    raise(Errc::BlockShapeMismatch, "block lengths and dimensions differ in count");
  }
  if (std::accumulate(b.n.begin(), b.n.end(), 0) != n ||
      std::accumulate(b.k.begin(), b.k.end(), 0) != k) {
    raise(Errc::BlockShapeMismatch, "block shape does not add up to the code parameters");
  }
  BlockCheck out;
  std::vector<std::vector<std::vector<Elem>>> words;  // nonzero codewords per block
  BigInt product = 1;
  int offset = 0;
  for (std::size_t i = 0; i < b.n.size(); ++i) {
    const int ni = b.n[i];
    const int ki = b.k[i];
    if (ki < 0 || ki > ni) raise(Errc::BlockShapeMismatch, "block dimension exceeds its length");
    Mat coords(tower, Level::qm, 0, n);
    for (int j = 0; j < ni; ++j) {
      std::vector<Elem> e(n, 0);
      e[offset + j] = 1;
      coords.append_row(e);
    }
    const Mat inside = intersect(c.generator(), coords);
    if (static_cast<int>(inside.rows()) != ki) {
      raise(Errc::BlockShapeMismatch, "code meets block " + std::to_string(i) + " in dimension " +
                                          std::to_string(inside.rows()) + ", expected " +
                                          std::to_string(ki));
    }
    const RankCode ci = RankCode::from_generator(inside.select_cols(offset, ni));
    if (ki > 0) {
      const int di = generalized_weights(ci, GenWeightMethod::codim, subspace_budget)[0];
      if (Rational(di) != singleton_bound(ni, ki, tower->m())) out.blocks_mrd = false;
    }
    // Block component of U_C: the F_q-span of the block's columns of the stored generator.
    out.parts.push_back(flatten_rows(transpose(c.generator().select_cols(offset, ni))));
    product *= codeword_count(*tower, ki) - 1;
    check_codeword_budget(product, codeword_budget, "full-block codeword enumeration");
    auto& list = words.emplace_back();
    for_each_codeword(ci, codeword_budget, [&](std::span<const Elem> w) {
      if (std::any_of(w.begin(), w.end(), [](Elem x) { return x != 0; })) list.push_back(as_vector(w));
    });
    offset += ni;
  }

  const WeightMeter meter(*tower);
  const int threshold = n - k;
  std::vector<std::size_t> idx(words.size(), 0);
  if (std::any_of(words.begin(), words.end(), [](const auto& l) { return l.empty(); })) return out;
  std::vector<Elem> word(n);
  for (;;) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto& w = words[i][idx[i]];
      std::copy(w.begin(), w.end(), word.begin() + pos);
      pos += w.size();
    }
    if (meter(word) <= threshold) {
      out.witness = word;
      break;
    }
    std::size_t i = words.size();
    while (i > 0) {
      --i;
      if (++idx[i] < words[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
  return out;
}

}  // namespace

CodeReport classify_code(const RankCode& c, const std::optional<Blocks>& blocks,
                         const BigInt& subspace_budget, const BigInt& codeword_budget) {
  CodeReport rep;
  const int n = static_cast<int>(c.n());
  const int k = static_cast<int>(c.k());
  const int m = c.tower()->m();
  rep.n = n;
  rep.k = k;
  rep.m = m;
  rep.nondegenerate = c.nondegenerate();
  rep.dual_nondegenerate = c.dual_nondegenerate();
  if (k > 0) {
    rep.d_r = generalized_weights(c, GenWeightMethod::codim, subspace_budget);
    rep.d = rep.d_r[0];
  }
  const RankCode dual = dual_code(c);
  if (n - k > 0) rep.dual_d = generalized_weights(dual, GenWeightMethod::codim, subspace_budget)[0];

  if (codeword_count(*c.tower(), c.k()) <= codeword_budget) {
    rep.A.assign(n + 1, 0);
    const WeightMeter meter(*c.tower());
    bool found = false;
    for_each_codeword(c, codeword_budget, [&](std::span<const Elem> w) {
      const int wt = meter(w);
      rep.A[wt] += 1;
      if (!found && k > 0 && wt == rep.d) {
        rep.witnesses["min_weight_codeword"] = as_vector(w);
        found = true;
      }
    });
  }

  const bool both = rep.nondegenerate && rep.dual_nondegenerate;
  const bool mrd = k > 0 && Rational(rep.d) == singleton_bound(n, k, m);
  const bool dual_mrd = n - k > 0 && Rational(rep.dual_d) == singleton_bound(n, n - k, m);
  bool near = k > 0 && rep.d == n - k;
  for (int r = 2; r <= k && near; ++r) near = rep.d_r[r - 1] == n - k + r;
  const bool quasi = k > 0 && is_quasi_mrd(n, k, m, rep.d);
  const bool dual_quasi = n - k > 0 && is_quasi_mrd(n, n - k, m, rep.dual_d);
  rep.verdicts["mrd"] = mrd;
  rep.verdicts["dual_mrd"] = dual_mrd;
  rep.verdicts["near_mrd"] = near;
  rep.verdicts["quasi_mrd"] = quasi;
  rep.verdicts["dually_quasi_mrd"] = quasi && dual_quasi;

  if (rep.nondegenerate && k >= 1 && n > k) {
    const auto& eps = c.system().profile(subspace_budget).eps;
    if ((k * m) % n == 0 && k * m / n - 1 >= 1 && k * m / n - 1 <= k - 1) {
      const int h = k * m / n - 1;
      rep.crosschecks["mrd_max_h_scattered"] = mrd == (eps[h] <= 0);
    } else if (n <= m) {
      rep.crosschecks["mrd_scattered_hyperplanes"] = mrd == (eps[k - 1] <= 0);
    }
    if (both && k >= 2) {
      bool evasive = eps[k - 1] == 1;
      for (int j = 1; j <= k - 2; ++j) evasive = evasive && eps[j] <= 0;
      rep.crosschecks["near_mrd_profile"] = near == evasive;
    }
    const int rho = n - m;
    if (both && rho >= 1 && rho * (k - 1) < m) {
      rep.crosschecks["quasi_mrd_defect"] = quasi == (eps[k - 1] == rho);
      const bool scattered = k - 2 <= 0 || eps[k - 2] <= 0;
      rep.crosschecks["dual_quasi_mrd_scattered"] = dual_quasi == scattered;
    }
    if (both && n - k > 0) {
      const auto seq = c.system().profile(subspace_budget).sequence;
      rep.crosschecks["dual_distance_profile"] = !seq.empty() && rep.dual_d == 1 + seq.front().t;
    }
  }

  if (blocks) {
    BlockCheck bc = check_blocks(c, *blocks, subspace_budget, codeword_budget);
    const bool nk = bc.blocks_mrd && !bc.witness;
    rep.verdicts["nk_mrd"] = nk;
    if (bc.witness) rep.witnesses["nk_mrd"] = *bc.witness;
    if (rep.nondegenerate) {
      const Decomposition dec(c.system(), bc.parts);
      const SystemReport sys = classify_system(c.system(), &dec, subspace_budget);
      rep.crosschecks["nk_mrd_k_scattered"] = nk == sys.k_scattered->verdict;
    }
  }
  return rep;
}

WeightDistribution macwilliams(const WeightDistribution& a, int N, int K, std::uint64_t q, int m) {
  if (N < 0 || K < 0 || K > N || static_cast<int>(a.size()) != N + 1) {
    raise(Errc::InconsistentInput, "distribution length must be N+1 with 0 <= K <= N");
  }
  if (a[0] != 1) raise(Errc::InconsistentInput, "A_0 must be 1");
  const BigInt z = ipow(BigInt(q), static_cast<unsigned>(m));
  // Scaled by z^K, the identity is unitriangular in B.
  std::vector<BigInt> scaled(N + 1, 0);
  for (int v = N; v >= 0; --v) {
    BigInt rhs = 0;
    for (int j = 0; j <= v; ++j) rhs += a[j] * gaussian_binomial(N - j, v - j, q);
    rhs *= ipow(z, static_cast<unsigned>(N - v));
    const int i = N - v;
    for (int t = 0; t < i; ++t) rhs -= scaled[t] * gaussian_binomial(N - t, v, q);
    scaled[i] = rhs;
  }
  const BigInt zk = ipow(z, static_cast<unsigned>(K));
  WeightDistribution b(N + 1);
  for (int i = 0; i <= N; ++i) {
    if (scaled[i] % zk != 0 || scaled[i] < 0) {
      raise(Errc::InconsistentInput, "no valid dual distribution (B_" + std::to_string(i) + ")");
    }
    b[i] = scaled[i] / zk;
  }
  return b;
}

SymbolicDistribution macwilliams(const SymbolicDistribution& a, int N, int K) {
  if (N < 0 || K < 0 || K > N || static_cast<int>(a.size()) != N + 1) {
    raise(Errc::InconsistentInput, "distribution length must be N+1 with 0 <= K <= N");
  }
  const MultiPoly z = MultiPoly::variable(Var::z);
  std::vector<MultiPoly> scaled(N + 1);
  for (int v = N; v >= 0; --v) {
    MultiPoly rhs;
    for (int j = 0; j <= v; ++j) rhs += a[j] * gaussian_binomial_poly(N - j, v - j);
    rhs *= z.pow(static_cast<std::uint32_t>(N - v));
    const int i = N - v;
    for (int t = 0; t < i; ++t) rhs -= scaled[t] * gaussian_binomial_poly(N - t, v);
    scaled[i] = std::move(rhs);
  }
  SymbolicDistribution b;
  const auto zi = static_cast<std::size_t>(Var::z);
  for (int i = 0; i <= N; ++i) {
    MultiPoly bi;
    for (const auto& [e, c] : scaled[i].terms()) {
      if (e[zi] < static_cast<std::uint32_t>(K)) {
        raise(Errc::InconsistentInput, "B_" + std::to_string(i) + " is not divisible by z^K");
      }
      Exponents f = e;
      f[zi] -= K;
      bi += MultiPoly::monomial(f, c);
    }
    b.push_back(std::move(bi));
  }
  return b;
}

SymbolicDistribution mrd_wdist(int n, int k) {
  if (k < 1 || k >= n) raise(Errc::BadParams, "MRD distribution needs 1 <= k < n");
  const int d = n - k + 1;
  const MultiPoly z = MultiPoly::variable(Var::z);
  SymbolicDistribution a(n + 1);
  a[0] = 1;
  for (int l = 0; l < k; ++l) {
    MultiPoly sum;
    for (int t = 0; t <= l; ++t) {
      MultiPoly term = gaussian_binomial_poly(d + l, t) *
                       MultiPoly::variable(Var::q, static_cast<std::uint32_t>(t * (t - 1) / 2)) *
                       (z.pow(static_cast<std::uint32_t>(l + 1 - t)) - 1);
      if (t % 2) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    a[d + l] = gaussian_binomial_poly(n, d + l) * sum;
  }
  return a;
}

WeightDistribution instantiate(const SymbolicDistribution& a, std::uint64_t q, int m) {
  const BigInt qq(q);
  const Assignment at = assign({{Var::q, Rational(qq)}, {Var::z, Rational(ipow(qq, m))}});
  WeightDistribution out;
  for (const auto& p : a) {
    const Rational v = p.eval(at);
    if (boost::multiprecision::denominator(v) != 1) {
      raise(Errc::InconsistentInput, "non-integral instantiation");
    }
    out.push_back(boost::multiprecision::numerator(v));
  }
  return out;
}

SymbolicDistribution nkmrd_wdist(int n1, int n2, int k1, int k2) {
  if (k1 < 1 || k2 < 1 || k1 >= n1 || k2 >= n2) {
    raise(Errc::BadParams, "(n,k)-MRD distribution needs 1 <= k_i < n_i");
  }
  const int N = n1 + n2;
  const int K = k1 + k2;
  const auto a1 = mrd_wdist(n1, k1);
  const auto a2 = mrd_wdist(n2, k2);
  const auto b1 = mrd_wdist(n1, n1 - k1);
  const auto b2 = mrd_wdist(n2, n2 - k2);
  auto at = [](const SymbolicDistribution& x, int i) {
    return i < static_cast<int>(x.size()) ? x[i] : MultiPoly();
  };
  SymbolicDistribution a(N + 1);
  std::vector<MultiPoly> b(K + 1);
  a[0] = 1;
  b[0] = 1;
  for (int i = 1; i <= N - K; ++i) a[i] = at(a1, i) + at(a2, i);
  for (int j = 1; j <= K; ++j) b[j] = at(b1, j) + at(b2, j);
  const MultiPoly z = MultiPoly::variable(Var::z);
  for (int r = 1; r <= K; ++r) {
    MultiPoly from_dual;
    for (int i = 0; i <= K - r; ++i) from_dual += b[i] * gaussian_binomial_poly(N - i, N - K + r);
    MultiPoly value = z.pow(static_cast<std::uint32_t>(r)) * from_dual;
    for (int j = 0; j < N - K + r; ++j) value -= a[j] * gaussian_binomial_poly(N - j, K - r);
    a[N - K + r] = std::move(value);
  }
  return a;
}

MultiPoly at_degree(const MultiPoly& a, int m) {
  return a.subst(Var::z, MultiPoly::variable(Var::q, static_cast<std::uint32_t>(m)));
}

namespace {

// Univariate view of a polynomial in q, coefficients by degree.
std::vector<BigInt> univariate(const MultiPoly& p) {
  const auto qi = static_cast<std::size_t>(Var::q);
  std::vector<BigInt> c(p.degree(Var::q) + 1, 0);
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != qi && e[i] != 0) raise(Errc::BadParams, "polynomial must be in q alone");
    }
    c[e[qi]] += v;
  }
  return c;
}

int sign_at(const std::vector<BigInt>& c, std::uint64_t q) {
  BigInt v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * q + *it;
  return v.sign();
}

// Fujiwara's bound on the absolute values of the roots.
std::uint64_t root_bound(const std::vector<BigInt>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  if (d <= 0) return 1;
  const double lead = std::abs(c[d].convert_to<double>());
  double best = 0;
  for (int i = 0; i < d; ++i) {
    double ratio = std::abs(c[i].convert_to<double>()) / lead;
    if (i == 0) ratio /= 2;
    best = std::max(best, std::pow(ratio, 1.0 / (d - i)));
  }
  const double bound = std::ceil(2 * best) + 1;
  if (!(bound < 1e9)) raise(Errc::BadParams, "root bound too large for exhaustive sign checks");
  return static_cast<std::uint64_t>(bound);
}

bool is_prime_power(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    while (v % p == 0) v /= p;
    return v == 1;
  }
  return true;
}

// Prime powers up to the root bound of every polynomial; above it all signs are those of
// the leading coefficients.
struct SignTable {
  std::vector<std::uint64_t> points;
  std::vector<std::vector<int>> signs;  // signs[poly][point]; last point stands for "large q"
};

SignTable sign_table(const std::vector<std::vector<BigInt>>& polys) {
  std::uint64_t bound = 2;
  for (const auto& c : polys) bound = std::max(bound, root_bound(c));
  SignTable t;
  for (std::uint64_t v = 2; v <= bound; ++v) {
    if (is_prime_power(v)) t.points.push_back(v);
  }
  for (const auto& c : polys) {
    auto& row = t.signs.emplace_back();
    for (std::uint64_t v : t.points) row.push_back(sign_at(c, v));
    row.push_back(c.back().sign());
  }
  return t;
}

}  // namespace

SignSummary sign_summary(const MultiPoly& p_in_q) {
  SignSummary s;
  if (p_in_q.is_zero()) {
    s.identically_zero = true;
    s.nonnegative_everywhere = true;
    return s;
  }
  const SignTable t = sign_table({univariate(p_in_q)});
  const auto& row = t.signs[0];
  s.negative_everywhere = std::all_of(row.begin(), row.end(), [](int v) { return v < 0; });
  s.nonnegative_everywhere = std::all_of(row.begin(), row.end(), [](int v) { return v >= 0; });
  s.nonzero_everywhere = std::all_of(row.begin(), row.end(), [](int v) { return v != 0; });
  return s;
}

std::optional<Refutation> refute_at(const SymbolicDistribution& a, int N, int m) {
  const int max_rank = std::min(N, m);
  std::vector<std::vector<BigInt>> polys;
  for (const auto& p : a) polys.push_back(univariate(at_degree(p, m)));
  const SignTable t = sign_table(polys);
  const std::size_t points = t.points.size() + 1;
  auto violates = [&](std::size_t i, std::size_t pt) {
    const int s = t.signs[i][pt];
    return s < 0 || (static_cast<int>(i) > max_rank && s != 0);
  };
  // A single index refuting every q is reported directly; otherwise each q needs its own.
  for (std::size_t i = 0; i < polys.size(); ++i) {
    bool all = true;
    for (std::size_t pt = 0; pt < points && all; ++pt) all = violates(i, pt);
    if (!all) continue;
    const bool negative =
        std::all_of(t.signs[i].begin(), t.signs[i].end(), [](int s) { return s < 0; });
    return Refutation{static_cast<int>(i), negative ? "negative" : "beyond-max-rank"};
  }
  std::optional<int> first;
  for (std::size_t pt = 0; pt < points; ++pt) {
    bool any = false;
    for (std::size_t i = 0; i < polys.size() && !any; ++i) {
      if (violates(i, pt)) {
        any = true;
        if (!first) first = static_cast<int>(i);
      }
    }
    if (!any) return std::nullopt;
  }
  return Refutation{*first, "mixed"};
}

NkMrdFeasibility nkmrd_feasibility(int n1, int n2, int k1, int k2, int horizon) {
  const auto a = nkmrd_wdist(n1, n2, k1, k2);
  const int N = n1 + n2;
  NkMrdFeasibility out;
  for (int m = std::max(n1, n2); m <= horizon; ++m) {
    auto r = refute_at(a, N, m);
    if (!r) {
      out.min_m = m;
      break;
    }
    out.refuted.emplace_back(m, *r);
  }
  return out;
}

int min_feasible_m(int n1, int n2, int k1, int k2, int horizon) {
  const auto f = nkmrd_feasibility(n1, n2, k1, k2, horizon);
  if (!f.min_m) {
    raise(Errc::HorizonExceeded, "no m up to " + std::to_string(horizon) + " survives the checks");
  }
  return *f.min_m;
}

}  // namespace qdefect
