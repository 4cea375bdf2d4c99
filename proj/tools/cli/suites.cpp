#include "cli/suites.hpp"

#include <random>
#include <stdexcept>

#include "qdefect/constructions.hpp"
#include "qdefect/error.hpp"

namespace qdefect::cli {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}

  void operator()(bool ok, const json& detail) {
    ++r_.checks;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = detail;
  }

 private:
  SuiteResult& r_;
};

json code_id(const CorpusCode& c) {
  return {{"shape", c.shape}, {"generator", mat(c.code.generator())}};
}

void fields_suite(Checker& check, const SuiteConfig&) {
  const std::vector<std::array<int, 3>> towers = {{2, 1, 3}, {2, 1, 4}, {3, 1, 2}, {2, 2, 2}, {3, 2, 2}};
  for (const auto& [p, e, m] : towers) {
    const TowerPtr t = FieldTower::make(p, e, m);
    const Field& F = t->top();
    const json id = {{"tower", t->header()}};
    for (Elem a = 0; a < F.order(); ++a) {
      for (Elem b = 0; b < F.order(); ++b) {
        check(F.mul(a, b) == F.mul_poly(a, b), {{"check", "table vs schoolbook"}, {"a", a}, {"b", b}, {"at", id}});
      }
      if (a) check(F.mul(a, F.inv(a)) == 1, {{"check", "inverse"}, {"a", a}, {"at", id}});
      check(t->frobenius(Level::qm, a, m) == a, {{"check", "frobenius^m"}, {"a", a}, {"at", id}});
      check(t->trace(a) < t->q(), {{"check", "trace in F_q"}, {"a", a}, {"at", id}});
    }
  }
}

void lattice_suite(Checker& check, const SuiteConfig& cfg) {
  for (int size : {2, 3, 4}) {
    const TowerPtr t = size == 4 ? FieldTower::make(2, 2, 1) : FieldTower::make(size, 1, 1);
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; b <= a; ++b) {
        auto s = enum_subspaces(t, Level::q, a, b, cfg.subspace_budget);
        BigInt count = 0;
        while (s.next()) count += 1;
        check(count == gaussian_binomial(a, b, size),
              {{"check", "subspace count"}, {"size", size}, {"a", a}, {"b", b}});
        const Rational v = gaussian_binomial_poly(a, b).eval(assign({{Var::q, Rational(size)}}));
        check(v == Rational(gaussian_binomial(a, b, size)),
              {{"check", "q-binomial polynomial"}, {"size", size}, {"a", a}, {"b", b}});
      }
    }
  }
}

void polyarith_suite(Checker& check, const SuiteConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> small(2, 9);
  for (int a = 0; a <= 7; ++a) {
    for (int b = 0; b <= a; ++b) {
      check(gaussian_binomial_poly(a, b) == gaussian_binomial_poly(a, a - b),
            {{"check", "q-binomial symmetry"}, {"a", a}, {"b", b}});
    }
  }
  const auto sample = mrd_wdist(5, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const int v = small(rng);
    const int m = small(rng);
    for (const auto& p : sample) {
      const MultiPoly s = at_degree(p, m);
      const Rational lhs = s.eval(assign({{Var::q, Rational(v)}}));
      const Rational rhs =
          p.eval(assign({{Var::q, Rational(v)}, {Var::z, Rational(ipow(BigInt(v), m))}}));
      check(lhs == rhs, {{"check", "eval after subst"}, {"v", v}, {"m", m}, {"poly", p.render()}});
    }
  }
}

void qsystem_suite(Checker& check, const SuiteConfig& cfg) {
  for (const auto& c : desk_corpus(cfg.seed, cfg.per_shape)) {
    const FqSystem& u = c.code.system();
    const DefectProfile& p = u.profile(cfg.subspace_budget);
    const int k = static_cast<int>(u.k());
    check(p.eps[k] == static_cast<int>(u.n()) - k, {{"check", "eps(k) = n-k"}, {"code", code_id(c)}});
    for (int r = 1; r < k; ++r) {
      const auto wd = weight_defect(u, p.witnesses[r]);
      check(wd.defect == p.eps[r], {{"check", "witness attains eps"}, {"r", r}, {"code", code_id(c)}});
    }
    int last = 0;
    for (const auto& s : p.sequence) {
      check(s.eps > last, {{"check", "sequence strictly increasing"}, {"code", code_id(c)}});
      last = s.eps;
    }
  }
}

void duality_suite(Checker& check, const SuiteConfig& cfg) {
  for (const auto& c : desk_corpus(cfg.seed, cfg.per_shape)) {
    const FqSystem& u = c.code.system();
    if (u.profile(cfg.subspace_budget).full_defect_below_k) continue;
    const auto rep = verify_sequence_duality(u, cfg.subspace_budget);
    check(rep.holds, {{"check", "sequence duality"}, {"code", code_id(c)}, {"mismatch", rep.mismatch}});
    check(rep.dual_dimension == u.n(), {{"check", "dim U^d = n"}, {"code", code_id(c)}});
    const FqSystem back = delsarte_dual(delsarte_dual(u));
    check(back.profile(cfg.subspace_budget).eps == u.profile(cfg.subspace_budget).eps,
          {{"check", "profile of (U^d)^d"}, {"code", code_id(c)}});
  }
}

void supports_suite(Checker& check, const SuiteConfig& cfg) {
  for (const auto& c : desk_corpus(cfg.seed, cfg.per_shape)) {
    const TowerPtr& t = c.code.tower();
    for_each_codeword(c.code, cfg.codeword_budget, [&](std::span<const Elem> w) {
      const auto e = rank_weight_support(t, w, SupportMethod::expansion);
      const auto tr = rank_weight_support(t, w, SupportMethod::trace);
      const auto pp = rank_weight_support(t, w, SupportMethod::perp);
      const bool ok = e.support == tr.support && e.support == pp.support &&
                      e.weight == rank_weight(*t, w);
      check(ok, {{"check", "support routes"}, {"code", code_id(c)},
                 {"codeword", std::vector<Elem>(w.begin(), w.end())}});
    });
  }
}

void macwilliams_suite(Checker& check, const SuiteConfig& cfg) {
  for (const auto& c : desk_corpus(cfg.seed, cfg.per_shape)) {
    const int n = static_cast<int>(c.code.n());
    const int k = static_cast<int>(c.code.k());
    const auto& t = *c.code.tower();
    const auto a = weight_distribution(c.code, cfg.codeword_budget);
    const auto b = weight_distribution(dual_code(c.code), cfg.codeword_budget);
    const auto bt = macwilliams(a, n, k, t.q(), t.m());
    check(bt == b, {{"check", "MacWilliams vs enumeration"}, {"code", code_id(c)}});
    check(macwilliams(bt, n, n - k, t.q(), t.m()) == a, {{"check", "round trip"}, {"code", code_id(c)}});
  }
}

void wei_suite(Checker& check, const SuiteConfig& cfg) {
  for (const auto& c : desk_corpus(cfg.seed, cfg.per_shape)) {
    const auto d1 = generalized_weights(c.code, GenWeightMethod::defect, cfg.subspace_budget);
    const auto d2 = generalized_weights(c.code, GenWeightMethod::codim, cfg.subspace_budget);
    const auto d3 = generalized_weights(c.code, GenWeightMethod::subcode, cfg.subspace_budget);
    check(d1 == d2 && d2 == d3,
          {{"check", "three methods"}, {"code", code_id(c)}, {"defect", d1}, {"codim", d2}, {"subcode", d3}});
    const auto dd = generalized_weights(dual_code(c.code), GenWeightMethod::codim, cfg.subspace_budget);
    check(wei_partition_holds(static_cast<int>(c.code.n()), d2, dd),
          {{"check", "Wei partition"}, {"code", code_id(c)}, {"d", d2}, {"dual", dd}});
    const auto dp = dual_generalized_weights_from_profile(c.code, cfg.subspace_budget);
    check(dp == dd, {{"check", "dual weights from profile"}, {"code", code_id(c)}, {"profile", dp}, {"direct", dd}});
  }
}

void nkmrd_suite(Checker& check, const SuiteConfig&) {
  // MRD closed form against enumeration of Gabidulin codes.
  for (int m : {3, 4}) {
    const TowerPtr t = FieldTower::make(2, 1, m);
    for (int n = 2; n <= m; ++n) {
      for (int k = 1; k < n; ++k) {
        const RankCode c = RankCode::from_generator(gabidulin_generator(t, k, n));
        check(weight_distribution(c) == instantiate(mrd_wdist(n, k), 2, m),
              {{"check", "MRD closed form"}, {"m", m}, {"n", n}, {"k", k}});
      }
    }
  }
  static const int kRows[][5] = {{3, 3, 1, 2, 6},  {4, 4, 1, 2, 8},  {4, 4, 1, 3, 8},
                                 {4, 4, 2, 2, 8},  {5, 5, 1, 2, 10}, {5, 5, 1, 3, 10},
                                 {5, 5, 1, 4, 10}, {5, 5, 2, 2, 10}, {5, 5, 2, 3, 10}};
  for (const auto& r : kRows) {
    const int got = min_feasible_m(r[0], r[1], r[2], r[3]);
    check(got == r[4], {{"check", "tabulated bound"}, {"row", std::vector<int>(r, r + 4)}, {"min_m", got}});
  }
}

void qmatroid_suite(Checker& check, const SuiteConfig& cfg) {
  const TowerPtr t = FieldTower::make(2, 1, 4);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      const QMatroid u = QMatroid::uniform(t, k, n);
      check(check_axioms(u, cfg.subspace_budget).ok(), {{"check", "uniform axioms"}, {"k", k}, {"n", n}});
      if (k >= 1) {
        const Mat g = gabidulin_generator(t, k, n);
        const QMatroid mg = QMatroid::from_matrix(g);
        check(check_axioms(mg, cfg.subspace_budget).ok(), {{"check", "matrix axioms"}, {"k", k}, {"n", n}});
        check(is_representation(g, u, cfg.subspace_budget).holds,
              {{"check", "MRD represents uniform"}, {"k", k}, {"n", n}});
      }
    }
  }
  const QMatroid sum = QMatroid::direct_sum(QMatroid::uniform(t, 1, 2), QMatroid::uniform(t, 1, 2));
  check(check_axioms(sum, cfg.subspace_budget).ok(), {{"check", "direct sum axioms"}});
  for (const auto& c : block_11_mrd_codes(t)) {
    check(is_representation(c.generator(), sum, cfg.subspace_budget).holds,
          {{"check", "block MRD represents U_{1,2}+U_{1,2}"}, {"generator", mat(c.generator())}});
    break;
  }
}

using SuiteFn = void (*)(Checker&, const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"fields", fields_suite},         {"lattice", lattice_suite},
      {"polyarith", polyarith_suite},   {"qsystem", qsystem_suite},
      {"duality", duality_suite},       {"supports", supports_suite},
      {"macwilliams", macwilliams_suite}, {"wei-duality", wei_suite},
      {"nkmrd", nkmrd_suite},           {"qmatroid", qmatroid_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult r;
    r.name = name;
    Checker check(r);
    fn(check, config);
    return r;
  }
  raise(Errc::BadParams, "unknown suite '" + name + "'");
}

}  // namespace qdefect::cli
