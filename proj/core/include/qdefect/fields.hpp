#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qdefect {

// Elements are stored as their wire integers: base-(subfield order) digits over
// the power basis, least significant digit = constant coefficient.
using Elem = std::uint32_t;

enum class Level : std::uint8_t { q, qm };

inline constexpr std::uint64_t kDefaultFieldBudget = std::uint64_t{1} << 20;
inline constexpr std::uint32_t kTableLimit = std::uint32_t{1} << 16;

class Field {
 public:
  static std::shared_ptr<const Field> prime(std::uint32_t p);
  // F_s[x]/(modulus); `modulus` is monic with coefficients (constant first) in `sub`.
  static std::shared_ptr<const Field> extension(std::shared_ptr<const Field> sub,
                                                std::vector<Elem> modulus);

  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return p_; }
  // Degree over the immediate subfield (1 for a prime field).
  int degree() const { return degree_; }
  std::uint32_t sub_order() const { return sub_ ? sub_->order() : 1; }
  const Field* subfield() const { return sub_.get(); }
  const std::vector<Elem>& modulus() const { return modulus_; }
  bool uses_tables() const { return !exp_.empty(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;

  // Schoolbook multiplication modulo the defining polynomial; the table path
  // must agree with it.
  Elem mul_poly(Elem a, Elem b) const;

  // Coefficient of x^i over the immediate subfield.
  Elem digit(Elem a, int i) const;
  std::vector<Elem> digits(Elem a) const;
  Elem compose(std::span<const Elem> digits) const;

  bool contains(std::uint64_t v) const { return v < order_; }

 private:
  Field() = default;
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint32_t order_ = 0;
  int degree_ = 1;
  std::shared_ptr<const Field> sub_;
  std::vector<Elem> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);

// Irreducibility by trial division against every monic divisor of degree <= deg/2.
bool is_irreducible(const Field& base, std::span<const Elem> poly);

// Smallest monic irreducible of degree d over `base`, candidates ordered by the
// integer sum c_i * |base|^i (so x^3+x+1 precedes x^3+x^2+1 over F_2).
std::vector<Elem> smallest_irreducible(const Field& base, int degree);

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

class FieldTower {
 public:
  static TowerPtr make(std::uint32_t p, int e, int m, std::uint64_t budget = kDefaultFieldBudget);
  // Tower with prescribed defining polynomials (both checked for irreducibility).
  static TowerPtr make_with(std::uint32_t p, int e, int m, std::vector<Elem> poly_q,
                            std::vector<Elem> poly_qm, std::uint64_t budget = kDefaultFieldBudget);

  std::uint32_t p() const { return p_; }
  int e() const { return e_; }
  int m() const { return m_; }
  std::uint32_t q() const { return base_->order(); }
  std::uint32_t size() const { return top_->order(); }
  std::uint32_t order(Level lv) const { return lv == Level::q ? q() : size(); }

  const Field& base() const { return *base_; }
  const Field& top() const { return *top_; }
  const Field& field(Level lv) const { return lv == Level::q ? *base_ : *top_; }

  // Defining polynomials, constant term first. For e = 1 the F_q polynomial is x.
  const std::vector<Elem>& poly_q() const { return poly_q_; }
  const std::vector<Elem>& poly_qm() const { return top_->modulus(); }

  // a^{q^i} at either level.
  Elem frobenius(Level lv, Elem a, unsigned i) const;
  // Tr_{q^m/q}(a) = sum_{i<m} a^{q^i}; the result is an F_q element.
  Elem trace(Elem a) const;

  // Coordinates of a top-level element over Gamma = (1, x, ..., x^{m-1}).
  Elem coordinate(Elem a, int i) const { return top_->digit(a, i); }
  std::vector<Elem> coordinates(Elem a) const { return top_->digits(a); }
  Elem from_coordinates(std::span<const Elem> c) const { return top_->compose(c); }
  Elem gamma(int i) const;

  // `p=<p> e=<e> m=<m> polyq=<ints> polyqm=<ints>`
  std::string header() const;

  bool same_as(const FieldTower& other) const;

 private:
  FieldTower() = default;

  std::uint32_t p_ = 0;
  int e_ = 0;
  int m_ = 0;
  std::vector<Elem> poly_q_;
  std::shared_ptr<const Field> prime_;
  std::shared_ptr<const Field> base_;
  std::shared_ptr<const Field> top_;
};

bool same_tower(const TowerPtr& a, const TowerPtr& b);

class FieldElement {
 public:
  FieldElement(TowerPtr tower, Level level, Elem value);

  static FieldElement decode(TowerPtr tower, Level level, std::uint64_t v);
  std::uint64_t encode() const { return value_; }

  const TowerPtr& tower() const { return tower_; }
  Level level() const { return level_; }
  Elem value() const { return value_; }
  std::vector<Elem> coefficients() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow_q_i(unsigned i) const;
  FieldElement trace() const;

  bool is_zero() const { return value_ == 0; }
  bool operator==(const FieldElement& o) const;

 private:
  const Field& field() const { return tower_->field(level_); }
  void check_compatible(const FieldElement& o) const;

  TowerPtr tower_;
  Level level_;
  Elem value_;
};

}  // namespace qdefect
