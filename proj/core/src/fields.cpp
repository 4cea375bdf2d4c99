#include "qdefect/fields.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qdefect/error.hpp"

namespace qdefect {

namespace {

// Digitwise base-p arithmetic; valid at every level because the nested
// encodings flatten to plain base-p digit strings.
Elem add_base_p(Elem a, Elem b, std::uint32_t p) {
  if (p == 2) return a ^ b;
  Elem out = 0;
  Elem scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

Elem neg_base_p(Elem a, std::uint32_t p) {
  if (p == 2) return a;
  Elem out = 0;
  Elem scale = 1;
  while (a != 0) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over a field as coefficient vectors, constant first, no trailing zeros.
using Poly = std::vector<Elem>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(const Field& F, Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Elem lead_inv = F.inv(m.back());
  while (a.size() > dm) {
    const Elem c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::shared_ptr<const Field> Field::prime(std::uint32_t p) {
  if (!is_prime(p)) raise(Errc::NotPrime, std::to_string(p) + " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->order_ = p;
  f->degree_ = 1;
  return f;
}

std::shared_ptr<const Field> Field::extension(std::shared_ptr<const Field> sub,
                                              std::vector<Elem> modulus) {
  if (modulus.size() < 2 || modulus.back() != 1) {
    raise(Errc::BadParams, "defining polynomial must be monic of degree >= 1");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = sub->characteristic();
  f->degree_ = static_cast<int>(modulus.size()) - 1;
  std::uint64_t order = 1;
  for (int i = 0; i < f->degree_; ++i) {
    order *= sub->order();
    if (order > (std::uint64_t{1} << 31)) raise(Errc::BudgetExceeded, "field too large");
  }
  f->order_ = static_cast<std::uint32_t>(order);
  f->sub_ = std::move(sub);
  f->modulus_ = std::move(modulus);
  if (f->order_ <= kTableLimit && f->degree_ > 1) f->build_tables();
  return f;
}

void Field::build_tables() {
  const std::uint64_t n = order_ - 1;
  const auto factors = prime_factors(n);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_poly(r, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem g = 0;
  for (Elem cand = 1; cand < order_; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(cand, n / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  exp_.assign(2 * n, 0);
  log_.assign(order_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = x;
    exp_[i + n] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_poly(x, g);
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (!sub_) return static_cast<Elem>((a + b) % p_);
  return add_base_p(a, b, p_);
}

Elem Field::neg(Elem a) const {
  if (!sub_) return a == 0 ? 0 : p_ - a;
  return neg_base_p(a, p_);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!sub_) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_poly(a, b);
}

Elem Field::mul_poly(Elem a, Elem b) const {
  if (!sub_) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  const Field& S = *sub_;
  const auto da = digits(a);
  const auto db = digits(b);
  Poly prod(2 * degree_, 0);
  for (int i = 0; i < degree_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      prod[i + j] = S.add(prod[i + j], S.mul(da[i], db[j]));
    }
  }
  Poly r = poly_mod(S, std::move(prod), modulus_);
  r.resize(degree_, 0);
  return compose(r);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t n = order_ - 1;
    return exp_[(log_[a] * (e % n)) % n];
  }
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) raise(Errc::DivisionByZero, "inverse of zero");
  if (!exp_.empty()) {
    const std::uint32_t n = order_ - 1;
    return exp_[(n - log_[a]) % n];
  }
  return pow(a, order_ - 2);
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) raise(Errc::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem Field::digit(Elem a, int i) const {
  const std::uint32_t s = sub_order();
  if (!sub_) return i == 0 ? a : 0;
  for (int j = 0; j < i; ++j) a /= s;
  return a % s;
}

std::vector<Elem> Field::digits(Elem a) const {
  std::vector<Elem> out(degree_, 0);
  if (!sub_) {
    out[0] = a;
    return out;
  }
  const std::uint32_t s = sub_->order();
  for (int i = 0; i < degree_; ++i) {
    out[i] = a % s;
    a /= s;
  }
  return out;
}

Elem Field::compose(std::span<const Elem> d) const {
  if (!sub_) return d.empty() ? 0 : d[0];
  const std::uint32_t s = sub_->order();
  Elem out = 0;
  for (std::size_t i = d.size(); i-- > 0;) out = out * s + d[i];
  return out;
}

bool is_irreducible(const Field& base, std::span<const Elem> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 1) return true;
  const std::uint32_t s = base.order();
  for (int dg = 1; dg <= d / 2; ++dg) {
    std::uint64_t count = 1;
    for (int i = 0; i < dg; ++i) count *= s;
    Poly g(dg + 1, 0);
    g[dg] = 1;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t v = c;
      for (int i = 0; i < dg; ++i) {
        g[i] = static_cast<Elem>(v % s);
        v /= s;
      }
      if (poly_mod(base, f, g).empty()) return false;
    }
  }
  return true;
}

std::vector<Elem> smallest_irreducible(const Field& base, int degree) {
  const std::uint32_t s = base.order();
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= s;
  std::vector<Elem> f(degree + 1, 0);
  f[degree] = 1;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::uint64_t v = c;
    for (int i = 0; i < degree; ++i) {
      f[i] = static_cast<Elem>(v % s);
      v /= s;
    }
    if (is_irreducible(base, f)) return f;
  }
  raise(Errc::BadParams, "no irreducible polynomial found");
}

namespace {

void check_budget(std::uint32_t p, int e, int m, std::uint64_t budget) {
  if (e < 1 || m < 1) raise(Errc::BadParams, "e and m must be positive");
  if (!is_prime(p)) raise(Errc::NotPrime, std::to_string(p) + " is not prime");
  BigInt size = 1;
  for (int i = 0; i < e * m; ++i) size *= p;
  if (size > budget) {
    throw BudgetError(size, budget,
                      "q^m = " + size.str() + " exceeds field budget " + std::to_string(budget));
  }
}

}  // namespace

TowerPtr FieldTower::make(std::uint32_t p, int e, int m, std::uint64_t budget) {
  check_budget(p, e, m, budget);
  auto prime = Field::prime(p);
  std::vector<Elem> pq = e == 1 ? std::vector<Elem>{0, 1} : smallest_irreducible(*prime, e);
  auto base = e == 1 ? prime : Field::extension(prime, pq);
  auto pqm = smallest_irreducible(*base, m);
  return make_with(p, e, m, std::move(pq), std::move(pqm), budget);
}

TowerPtr FieldTower::make_with(std::uint32_t p, int e, int m, std::vector<Elem> poly_q,
                               std::vector<Elem> poly_qm, std::uint64_t budget) {
  check_budget(p, e, m, budget);
  auto t = std::shared_ptr<FieldTower>(new FieldTower());
  t->p_ = p;
  t->e_ = e;
  t->m_ = m;
  t->prime_ = Field::prime(p);
  if (static_cast<int>(poly_q.size()) != e + 1 || poly_q.back() != 1 ||
      std::any_of(poly_q.begin(), poly_q.end(), [&](Elem c) { return c >= p; })) {
    raise(Errc::BadParams, "polyq must be monic of degree e over F_p");
  }
  if (e == 1) {
    if (poly_q != std::vector<Elem>{0, 1}) raise(Errc::BadParams, "polyq must be x when e = 1");
    t->base_ = t->prime_;
  } else {
    if (!is_irreducible(*t->prime_, poly_q)) raise(Errc::BadParams, "polyq is reducible");
    t->base_ = Field::extension(t->prime_, poly_q);
  }
  t->poly_q_ = std::move(poly_q);
  if (static_cast<int>(poly_qm.size()) != m + 1 || poly_qm.back() != 1 ||
      std::any_of(poly_qm.begin(), poly_qm.end(),
                  [&](Elem c) { return c >= t->base_->order(); })) {
    raise(Errc::BadParams, "polyqm must be monic of degree m over F_q");
  }
  if (!is_irreducible(*t->base_, poly_qm)) raise(Errc::BadParams, "polyqm is reducible");
  t->top_ = Field::extension(t->base_, std::move(poly_qm));
  return t;
}

Elem FieldTower::frobenius(Level lv, Elem a, unsigned i) const {
  const Field& F = field(lv);
  for (unsigned j = 0; j < i; ++j) a = F.pow(a, q());
  return a;
}

Elem FieldTower::trace(Elem a) const {
  Elem acc = 0;
  Elem x = a;
  for (int i = 0; i < m_; ++i) {
    acc = top_->add(acc, x);
    x = top_->pow(x, q());
  }
  return acc;
}

Elem FieldTower::gamma(int i) const {
  std::vector<Elem> c(m_, 0);
  c[i] = 1;
  return top_->compose(c);
}

namespace {

std::string join_ints(const std::vector<Elem>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::string FieldTower::header() const {
  std::ostringstream os;
  os << "p=" << p_ << " e=" << e_ << " m=" << m_ << " polyq=" << join_ints(poly_q_)
     << " polyqm=" << join_ints(poly_qm());
  return os.str();
}

bool FieldTower::same_as(const FieldTower& o) const {
  return p_ == o.p_ && e_ == o.e_ && m_ == o.m_ && poly_q_ == o.poly_q_ &&
         poly_qm() == o.poly_qm();
}

bool same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

FieldElement::FieldElement(TowerPtr tower, Level level, Elem value)
    : tower_(std::move(tower)), level_(level), value_(value) {
  if (!tower_->field(level_).contains(value_)) {
    raise(Errc::OutOfRange, std::to_string(value_) + " is not a field element");
  }
}

FieldElement FieldElement::decode(TowerPtr tower, Level level, std::uint64_t v) {
  if (v >= tower->order(level)) raise(Errc::OutOfRange, std::to_string(v) + " out of range");
  return FieldElement(std::move(tower), level, static_cast<Elem>(v));
}

std::vector<Elem> FieldElement::coefficients() const {
  if (level_ == Level::qm) return tower_->coordinates(value_);
  const Field& b = tower_->base();
  if (b.subfield() == nullptr) return {value_};
  return b.digits(value_);
}

void FieldElement::check_compatible(const FieldElement& o) const {
  if (level_ != o.level_ || !same_tower(tower_, o.tower_)) {
    raise(Errc::TowerMismatch, "operands live in different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_compatible(o);
  return {tower_, level_, field().add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_compatible(o);
  return {tower_, level_, field().sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_compatible(o);
  return {tower_, level_, field().mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_compatible(o);
  return {tower_, level_, field().div(value_, o.value_)};
}

FieldElement FieldElement::inverse() const { return {tower_, level_, field().inv(value_)}; }

FieldElement FieldElement::pow_q_i(unsigned i) const {
  return {tower_, level_, tower_->frobenius(level_, value_, i)};
}

FieldElement FieldElement::trace() const {
  if (level_ != Level::qm) raise(Errc::TowerMismatch, "trace needs a top-level element");
  return {tower_, Level::q, tower_->trace(value_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  return level_ == o.level_ && value_ == o.value_ && same_tower(tower_, o.tower_);
}

}  // namespace qdefect
