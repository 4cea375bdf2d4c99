#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qdefect/bigint.hpp"
#include "qdefect/matrices.hpp"

namespace qdefect {

inline const BigInt kDefaultSubspaceBudget{10'000'000};

// Number of b-dimensional subspaces of an a-dimensional space over a field of `size` elements.
BigInt gaussian_binomial(int a, int b, std::uint64_t size);

// Every r-dimensional subspace of the ambient space as its RREF basis, ordered
// lexicographically by pivot set, then by the free entries in reading order.
class SubspaceStream {
 public:
  SubspaceStream(TowerPtr tower, Level level, int ambient, int r,
                 const BigInt& budget = kDefaultSubspaceBudget);

  // Stream restricted to one pivot set; used to split an enumeration across workers.
  static SubspaceStream with_pivots(TowerPtr tower, Level level, int ambient,
                                    std::vector<int> pivots);

  // Advances to the next subspace; false once the stream is exhausted.
  bool next();
  const Mat& current() const { return current_; }
  // Position of current() in the stream, starting at 0.
  std::uint64_t index() const { return index_ - 1; }
  const BigInt& count() const { return count_; }

 private:
  bool next_pivots();
  void reset_free();
  void build();

  TowerPtr tower_;
  Level level_;
  int ambient_;
  int r_;
  std::uint32_t order_;
  BigInt count_;
  bool single_pivot_set_ = false;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t index_ = 0;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_;  // (row, col)
  std::vector<Elem> values_;
  Mat current_;
};

// Pivot sets of r-dimensional RREF bases in stream order.
std::vector<std::vector<int>> pivot_sets(int ambient, int r);

SubspaceStream enum_subspaces(TowerPtr tower, Level level, int ambient, int r,
                              const BigInt& budget = kDefaultSubspaceBudget);

// r-dimensional subspaces of rowspace(T), enumerated in T's coordinates.
class SubspaceOfStream {
 public:
  SubspaceOfStream(const Mat& t, int r, const BigInt& budget = kDefaultSubspaceBudget);

  bool next();
  const Mat& current() const { return current_; }
  const BigInt& count() const { return inner_.count(); }

 private:
  Mat basis_;
  SubspaceStream inner_;
  Mat current_;
};

SubspaceOfStream enum_subspaces_of(const Mat& t, int r, const BigInt& budget = kDefaultSubspaceBudget);

// All subspaces of the ambient space, dimension by dimension.
std::vector<Mat> all_subspaces(TowerPtr tower, Level level, int ambient,
                               const BigInt& budget = kDefaultSubspaceBudget);

// Pseudo-random RREF basis of an r-dimensional subspace; no distribution contract.
Mat random_subspace(TowerPtr tower, Level level, int ambient, int r, std::mt19937_64& rng);

}  // namespace qdefect
