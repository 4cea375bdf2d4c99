#include "qdefect/matrices.hpp"

#include <algorithm>
#include <utility>

#include "qdefect/error.hpp"

namespace qdefect {

Mat::Mat(TowerPtr tower, Level level, std::size_t rows, std::size_t cols)
    : tower_(std::move(tower)), level_(level), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::from_rows(TowerPtr tower, Level level, std::size_t cols,
                   const std::vector<std::vector<Elem>>& rows) {
  Mat out(std::move(tower), level, 0, cols);
  for (const auto& r : rows) out.append_row(r);
  return out;
}

Mat Mat::identity(TowerPtr tower, Level level, std::size_t n) {
  Mat out(std::move(tower), level, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

void Mat::append_row(std::span<const Elem> r) {
  if (r.size() != cols_) raise(Errc::WidthMismatch, "row width differs from matrix width");
  const Field& F = field();
  for (Elem v : r) {
    if (!F.contains(v)) raise(Errc::OutOfRange, std::to_string(v) + " is not a field element");
  }
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::select_rows(std::size_t first, std::size_t count) const {
  Mat out(tower_, level_, count, cols_);
  std::copy_n(data_.begin() + first * cols_, count * cols_, out.data_.begin());
  return out;
}

Mat Mat::select_cols(std::size_t first, std::size_t count) const {
  Mat out(tower_, level_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  }
  return out;
}

Mat Mat::lifted() const {
  Mat out = *this;
  out.level_ = Level::qm;
  return out;
}

bool Mat::operator==(const Mat& o) const {
  return level_ == o.level_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
         same_tower(tower_, o.tower_);
}

bool Mat::operator<(const Mat& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return data_ < o.data_;
}

namespace {

void check_same(const Mat& a, const Mat& b) {
  if (a.level() != b.level()) raise(Errc::LevelMismatch, "matrices at different levels");
  if (!same_tower(a.tower(), b.tower())) raise(Errc::TowerMismatch, "matrices over different towers");
  if (a.cols() != b.cols()) raise(Errc::WidthMismatch, "ambient widths differ");
}

Echelon rref_f2(const Mat& m) {
  const std::size_t n = m.cols();
  std::vector<std::uint64_t> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t w = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c)) w |= std::uint64_t{1} << c;
    }
    rows.push_back(w);
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t sel = rank;
    while (sel < rows.size() && !(rows[sel] & bit)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    }
    pivots.push_back(c);
    ++rank;
  }
  Mat basis(m.tower(), m.level(), rank, n);
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < n; ++c) basis(r, c) = (rows[r] >> c) & 1;
  }
  return {std::move(basis), rank, std::move(pivots)};
}

}  // namespace

Echelon rref_generic(const Mat& m) {
  const Field& F = m.field();
  Mat a = m;
  const std::size_t R = a.rows();
  const std::size_t C = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t sel = rank;
    while (sel < R && a(sel, c) == 0) ++sel;
    if (sel == R) continue;
    if (sel != rank) {
      for (std::size_t j = 0; j < C; ++j) std::swap(a(sel, j), a(rank, j));
    }
    const Elem inv = F.inv(a(rank, c));
    for (std::size_t j = c; j < C; ++j) a(rank, j) = F.mul(a(rank, j), inv);
    for (std::size_t r = 0; r < R; ++r) {
      if (r == rank || a(r, c) == 0) continue;
      const Elem f = a(r, c);
      for (std::size_t j = c; j < C; ++j) {
        if (a(rank, j)) a(r, j) = F.sub(a(r, j), F.mul(f, a(rank, j)));
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return {a.select_rows(0, rank), rank, std::move(pivots)};
}

Echelon rref(const Mat& m) {
  if (m.field().order() == 2 && m.cols() <= 64) return rref_f2(m);
  return rref_generic(m);
}

Mat span_of(const Mat& m) { return rref(m).basis; }

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel(const Mat& m) {
  const Field& F = m.field();
  const auto e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Mat out(m.tower(), m.level(), 0, n);
  std::vector<Elem> v(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = F.neg(e.basis(r, f));
    out.append_row(v);
  }
  return span_of(out);
}

Mat orthogonal_complement(const Mat& s) { return kernel(s); }

Mat stack(const Mat& top, const Mat& bottom) {
  check_same(top, bottom);
  Mat out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

Mat sum(const Mat& a, const Mat& b) { return span_of(stack(a, b)); }

Mat intersect(const Mat& a, const Mat& b) {
  check_same(a, b);
  // Zassenhaus: rows [a | a] and [b | 0]; the rows of the echelon form whose
  // left half vanishes span the intersection in their right half.
  const std::size_t n = a.cols();
  Mat z(a.tower(), a.level(), 0, 2 * n);
  std::vector<Elem> row(2 * n);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), row.begin());
    std::copy(a.row(r).begin(), a.row(r).end(), row.begin() + n);
    z.append_row(row);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::copy(b.row(r).begin(), b.row(r).end(), row.begin());
    std::fill(row.begin() + n, row.end(), 0);
    z.append_row(row);
  }
  const auto e = rref_generic(z);
  Mat out(a.tower(), a.level(), 0, n);
  for (std::size_t r = 0; r < e.rank; ++r) {
    if (e.pivots[r] >= n) out.append_row(e.basis.row(r).subspan(n, n));
  }
  return span_of(out);
}

bool contains(const Mat& big, const Mat& small) {
  check_same(big, small);
  return rank(stack(big, small)) == rank(big);
}

bool equal_spaces(const Mat& a, const Mat& b) {
  check_same(a, b);
  return span_of(a) == span_of(b);
}

Mat multiply(const Mat& a, const Mat& b) {
  if (a.level() != b.level()) raise(Errc::LevelMismatch, "matrices at different levels");
  if (a.cols() != b.rows()) raise(Errc::WidthMismatch, "inner dimensions differ");
  const Field& F = a.field();
  Mat out(a.tower(), a.level(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(l, j)) out(i, j) = F.add(out(i, j), F.mul(x, b(l, j)));
      }
    }
  }
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.tower(), a.level(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Mat flatten_rows(const Mat& s) {
  if (s.level() != Level::qm) raise(Errc::LevelMismatch, "flatten needs an F_{q^m} matrix");
  const FieldTower& T = *s.tower();
  const int m = T.m();
  Mat out(s.tower(), Level::q, s.rows(), s.cols() * m);
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const auto c = T.coordinates(s(r, j));
      for (int i = 0; i < m; ++i) out(r, j * m + i) = c[i];
    }
  }
  return out;
}

Mat unflatten_rows(const Mat& b, std::size_t k) {
  if (b.level() != Level::q) raise(Errc::LevelMismatch, "unflatten needs an F_q matrix");
  const FieldTower& T = *b.tower();
  const std::size_t m = static_cast<std::size_t>(T.m());
  if (b.cols() != k * m) raise(Errc::WidthMismatch, "expanded width must be m*k");
  Mat out(b.tower(), Level::qm, b.rows(), k);
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t j = 0; j < k; ++j) out(r, j) = T.from_coordinates(b.row(r).subspan(j * m, m));
  }
  return out;
}

Mat expand_fq(const Mat& s, std::size_t k) {
  if (s.level() != Level::qm) raise(Errc::LevelMismatch, "expand_fq needs an F_{q^m} matrix");
  if (s.cols() != k) raise(Errc::WidthMismatch, "subspace width differs from k");
  const FieldTower& T = *s.tower();
  const Field& F = T.top();
  Mat rows(s.tower(), Level::qm, 0, k);
  std::vector<Elem> v(k);
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (int i = 0; i < T.m(); ++i) {
      const Elem g = T.gamma(i);
      for (std::size_t j = 0; j < k; ++j) v[j] = F.mul(g, s(r, j));
      rows.append_row(v);
    }
  }
  return span_of(flatten_rows(rows));
}

Mat qm_span(const Mat& s) {
  if (s.level() != Level::q) raise(Errc::LevelMismatch, "qm_span needs an F_q matrix");
  return span_of(s.lifted());
}

Mat fq_kernel(const Mat& mtx) {
  if (mtx.level() != Level::qm) raise(Errc::LevelMismatch, "fq_kernel needs an F_{q^m} matrix");
  const FieldTower& T = *mtx.tower();
  Mat eqs(mtx.tower(), Level::q, 0, mtx.cols());
  std::vector<Elem> row(mtx.cols());
  for (std::size_t r = 0; r < mtx.rows(); ++r) {
    for (int i = 0; i < T.m(); ++i) {
      for (std::size_t j = 0; j < mtx.cols(); ++j) row[j] = T.coordinate(mtx(r, j), i);
      eqs.append_row(row);
    }
  }
  return kernel(eqs);
}

Mat restrict_to_base(const Mat& s) {
  if (s.level() != Level::qm) raise(Errc::LevelMismatch, "restrict_to_base needs an F_{q^m} matrix");
  return fq_kernel(kernel(s));
}

RowReducer::RowReducer(const Field& field, std::size_t width) : field_(&field), width_(width) {}

bool RowReducer::insert(std::span<const Elem> row) {
  const Field& F = *field_;
  std::vector<Elem> v(row.begin(), row.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = v[pivots_[i]];
    if (!c) continue;
    const Elem* r = rows_.data() + i * width_;
    for (std::size_t j = 0; j < width_; ++j) {
      if (r[j]) v[j] = F.sub(v[j], F.mul(c, r[j]));
    }
  }
  std::size_t p = 0;
  while (p < width_ && v[p] == 0) ++p;
  if (p == width_) return false;
  const Elem inv = F.inv(v[p]);
  for (std::size_t j = p; j < width_; ++j) v[j] = F.mul(v[j], inv);
  rows_.insert(rows_.end(), v.begin(), v.end());
  pivots_.push_back(p);
  return true;
}

bool BitReducer::insert(std::uint64_t v) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v & masks_[i]) v ^= rows_[i];
  }
  if (!v) return false;
  rows_.push_back(v);
  masks_.push_back(v & (~v + 1));
  return true;
}

}  // namespace qdefect
