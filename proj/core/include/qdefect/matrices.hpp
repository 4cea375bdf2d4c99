#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qdefect/fields.hpp"

namespace qdefect {

// Dense row-major matrix over one level of a tower. Zero-row matrices are the
// canonical bases of zero spaces.
class Mat {
 public:
  Mat(TowerPtr tower, Level level, std::size_t rows, std::size_t cols);
  static Mat from_rows(TowerPtr tower, Level level, std::size_t cols,
                       const std::vector<std::vector<Elem>>& rows);
  static Mat identity(TowerPtr tower, Level level, std::size_t n);

  const TowerPtr& tower() const { return tower_; }
  Level level() const { return level_; }
  const Field& field() const { return tower_->field(level_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const { return data_; }

  void append_row(std::span<const Elem> r);
  Mat select_rows(std::size_t first, std::size_t count) const;
  Mat select_cols(std::size_t first, std::size_t count) const;
  // Same entries read at the F_{q^m} level (F_q sits inside as the integers < q).
  Mat lifted() const;

  bool operator==(const Mat& o) const;
  bool operator<(const Mat& o) const;

 private:
  TowerPtr tower_;
  Level level_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct Echelon {
  Mat basis;  // nonzero rows of the RREF
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Mat& m);
// Reference elimination without the packed GF(2) path.
Echelon rref_generic(const Mat& m);

Mat span_of(const Mat& m);
std::size_t rank(const Mat& m);
// Right kernel {x : M x^T = 0}; equals the orthogonal complement of rowspace(M).
Mat kernel(const Mat& m);
Mat orthogonal_complement(const Mat& s);

Mat sum(const Mat& a, const Mat& b);
Mat intersect(const Mat& a, const Mat& b);
bool contains(const Mat& big, const Mat& small);
bool equal_spaces(const Mat& a, const Mat& b);

Mat multiply(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat stack(const Mat& top, const Mat& bottom);

// F_q-expansion of an F_{q^m}-subspace of F_{q^m}^k: rows gamma_i * v, flattened
// so that coordinate j*m + i is the Gamma_i component of entry j.
Mat expand_fq(const Mat& s, std::size_t k);
// One F_q row (width mk) per F_{q^m} row, and back.
Mat flatten_rows(const Mat& s);
Mat unflatten_rows(const Mat& b, std::size_t k);
// F_{q^m}-span of an F_q-subspace of F_q^n (the * operation).
Mat qm_span(const Mat& s);
// {x in F_q^cols : M x^T = 0} for M at level q^m.
Mat fq_kernel(const Mat& m);
// S cap F_q^n for an F_{q^m}-subspace S.
Mat restrict_to_base(const Mat& s);

// Incremental echelon used by the enumeration hot loops.
class RowReducer {
 public:
  RowReducer(const Field& field, std::size_t width);
  bool insert(std::span<const Elem> row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  const Field* field_;
  std::size_t width_;
  std::vector<Elem> rows_;
  std::vector<std::size_t> pivots_;
};

// GF(2) rows of width <= 64 packed into words.
class BitReducer {
 public:
  bool insert(std::uint64_t v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace qdefect
