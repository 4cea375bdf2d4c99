#include "qdefect/polyarith.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "qdefect/error.hpp"

namespace qdefect {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {"q",  "z",  "X1", "X2", "X3",
                                                             "X4", "X",  "Y",  "y"};

std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

Rational rpow(const Rational& b, std::uint32_t e) {
  Rational r = 1;
  Rational x = b;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(long long c) : MultiPoly(BigInt(c)) {}

MultiPoly::MultiPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(Var v, std::uint32_t power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = power;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const BigInt& c) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t MultiPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  MultiPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly r(1);
  MultiPoly x = *this;
  while (e) {
    if (e & 1) r *= x;
    e >>= 1;
    if (e) x *= x;
  }
  return r;
}

Rational MultiPoly::eval(const Assignment& at) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = Rational(c);
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (!e[i]) continue;
      if (!at[i]) {
        raise(Errc::BadParams, std::string("variable ") + std::string(kNames[i]) + " is unassigned");
      }
      t *= rpow(*at[i], e[i]);
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::partial_eval(Var v, const BigInt& value) const {
  const auto idx = static_cast<std::size_t>(v);
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx] = 0;
    out.add_term(f, c * ipow(value, e[idx]));
  }
  return out;
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& replacement) const {
  const auto idx = static_cast<std::size_t>(v);
  std::vector<MultiPoly> powers{MultiPoly(1)};
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[idx]) powers.push_back(powers.back() * replacement);
    Exponents f = e;
    f[idx] = 0;
    out += monomial(f, c) * powers[e[idx]];
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) raise(Errc::BadParams, "division by the zero polynomial");
  const auto& [ld_e, ld_c] = *d.terms_.begin();
  MultiPoly rem = *this;
  MultiPoly quot;
  while (!rem.is_zero()) {
    const auto [lr_e, lr_c] = *rem.terms_.begin();
    Exponents e;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (lr_e[i] < ld_e[i]) return std::nullopt;
      e[i] = lr_e[i] - ld_e[i];
    }
    if (lr_c % ld_c != 0) return std::nullopt;
    const MultiPoly t = monomial(e, lr_c / ld_c);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

std::string MultiPoly::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (neg) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    std::string mono;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += kNames[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.str() << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

MultiPoly gaussian_binomial_poly(int a, int b) {
  if (a < 0 || b < 0 || b > a) raise(Errc::BadRange, "gaussian binomial needs 0 <= b <= a");
  const MultiPoly q = MultiPoly::variable(Var::q);
  MultiPoly num(1);
  MultiPoly den(1);
  for (int i = 0; i < b; ++i) {
    num *= q.pow(static_cast<std::uint32_t>(a - i)) - MultiPoly(1);
    den *= q.pow(static_cast<std::uint32_t>(b - i)) - MultiPoly(1);
  }
  auto quot = num.divide_exact(den);
  if (!quot) raise(Errc::InconsistentInput, "q-binomial division left a remainder");
  return *quot;
}

Assignment assign(std::initializer_list<std::pair<Var, Rational>> values) {
  Assignment a;
  for (const auto& [v, r] : values) a[static_cast<std::size_t>(v)] = r;
  return a;
}

}  // namespace qdefect
