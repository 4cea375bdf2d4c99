#include "qdefect/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "qdefect/error.hpp"

namespace qdefect {

BigInt gaussian_binomial(int a, int b, std::uint64_t size) {
  if (a < 0 || b < 0 || b > a) {
    raise(Errc::BadRange, "gaussian binomial needs 0 <= b <= a");
  }
  if (size < 2) raise(Errc::BadRange, "field size must be at least 2");
  BigInt num = 1;
  BigInt den = 1;
  const BigInt s = size;
  for (int i = 0; i < b; ++i) {
    num *= ipow(s, static_cast<unsigned>(a - i)) - 1;
    den *= ipow(s, static_cast<unsigned>(b - i)) - 1;
  }
  return num / den;
}

SubspaceStream::SubspaceStream(TowerPtr tower, Level level, int ambient, int r,
                               const BigInt& budget)
    : tower_(tower), level_(level), ambient_(ambient), r_(r),
      order_(tower->order(level)), current_(tower, level, 0, std::max(ambient, 0)) {
  if (ambient < 0 || r < 0 || r > ambient) raise(Errc::BadRange, "subspace dimension out of range");
  count_ = gaussian_binomial(ambient, r, order_);
  if (count_ > budget) {
    throw BudgetError(count_, budget,
                      "enumeration of " + count_.str() + " subspaces exceeds budget " + budget.str());
  }
}

SubspaceStream SubspaceStream::with_pivots(TowerPtr tower, Level level, int ambient,
                                           std::vector<int> pivots) {
  const int r = static_cast<int>(pivots.size());
  const BigInt all = gaussian_binomial(ambient, r, tower->order(level));
  SubspaceStream s(std::move(tower), level, ambient, r, all);
  s.pivots_ = std::move(pivots);
  s.single_pivot_set_ = true;
  return s;
}

bool SubspaceStream::next_pivots() {
  if (single_pivot_set_) return false;
  int i = r_ - 1;
  while (i >= 0 && pivots_[i] == ambient_ - r_ + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  return true;
}

void SubspaceStream::reset_free() {
  free_.clear();
  std::vector<bool> piv(ambient_, false);
  for (int p : pivots_) piv[p] = true;
  for (int row = 0; row < r_; ++row) {
    for (int c = pivots_[row] + 1; c < ambient_; ++c) {
      if (!piv[c]) free_.emplace_back(row, c);
    }
  }
  values_.assign(free_.size(), 0);
}

void SubspaceStream::build() {
  Mat m(tower_, level_, r_, ambient_);
  for (int row = 0; row < r_; ++row) m(row, pivots_[row]) = 1;
  for (std::size_t i = 0; i < free_.size(); ++i) m(free_[i].first, free_[i].second) = values_[i];
  current_ = std::move(m);
}

bool SubspaceStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!single_pivot_set_) {
      pivots_.resize(r_);
      std::iota(pivots_.begin(), pivots_.end(), 0);
    }
    reset_free();
    build();
    ++index_;
    return true;
  }
  std::size_t i = values_.size();
  while (i > 0) {
    --i;
    if (++values_[i] < order_) {
      build();
      ++index_;
      return true;
    }
    values_[i] = 0;
  }
  if (!next_pivots()) {
    done_ = true;
    return false;
  }
  reset_free();
  build();
  ++index_;
  return true;
}

std::vector<std::vector<int>> pivot_sets(int ambient, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  while (true) {
    out.push_back(p);
    int i = r - 1;
    while (i >= 0 && p[i] == ambient - r + i) --i;
    if (i < 0) break;
    ++p[i];
    for (int j = i + 1; j < r; ++j) p[j] = p[j - 1] + 1;
  }
  return out;
}

SubspaceStream enum_subspaces(TowerPtr tower, Level level, int ambient, int r,
                              const BigInt& budget) {
  return SubspaceStream(std::move(tower), level, ambient, r, budget);
}

SubspaceOfStream::SubspaceOfStream(const Mat& t, int r, const BigInt& budget)
    : basis_(span_of(t)),
      inner_(t.tower(), t.level(), static_cast<int>(basis_.rows()), r, budget),
      current_(t.tower(), t.level(), 0, t.cols()) {}

bool SubspaceOfStream::next() {
  if (!inner_.next()) return false;
  current_ = span_of(multiply(inner_.current(), basis_));
  return true;
}

SubspaceOfStream enum_subspaces_of(const Mat& t, int r, const BigInt& budget) {
  return SubspaceOfStream(t, r, budget);
}

std::vector<Mat> all_subspaces(TowerPtr tower, Level level, int ambient, const BigInt& budget) {
  BigInt total = 0;
  const auto order = tower->order(level);
  for (int r = 0; r <= ambient; ++r) total += gaussian_binomial(ambient, r, order);
  if (total > budget) {
    throw BudgetError(total, budget,
                      "lattice of " + total.str() + " subspaces exceeds budget " + budget.str());
  }
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(total));
  for (int r = 0; r <= ambient; ++r) {
    SubspaceStream s(tower, level, ambient, r, budget);
    while (s.next()) out.push_back(s.current());
  }
  return out;
}

Mat random_subspace(TowerPtr tower, Level level, int ambient, int r, std::mt19937_64& rng) {
  if (r < 0 || r > ambient) raise(Errc::BadRange, "subspace dimension out of range");
  std::vector<int> cols(ambient);
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<int> piv(cols.begin(), cols.begin() + r);
  std::sort(piv.begin(), piv.end());
  const auto order = tower->order(level);
  std::uniform_int_distribution<Elem> pick(0, order - 1);
  Mat m(tower, level, r, ambient);
  std::vector<bool> is_piv(ambient, false);
  for (int p : piv) is_piv[p] = true;
  for (int row = 0; row < r; ++row) {
    m(row, piv[row]) = 1;
    for (int c = piv[row] + 1; c < ambient; ++c) {
      if (!is_piv[c]) m(row, c) = pick(rng);
    }
  }
  return m;
}

}  // namespace qdefect
