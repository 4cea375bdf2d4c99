#include "cli/report.hpp"

#include <limits>

namespace qdefect::cli {

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

json mat(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Elem x : m.row(r)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

json tower(const FieldTower& t) {
  return {{"p", t.p()}, {"e", t.e()}, {"m", t.m()}, {"q", t.q()},
          {"polyq", t.poly_q()}, {"polyqm", t.poly_qm()}};
}

json profile(const DefectProfile& p) {
  json seq = json::array();
  for (const auto& s : p.sequence) seq.push_back({{"t", s.t}, {"eps", s.eps}, {"witness", mat(s.witness)}});
  return {{"eps", p.eps},
          {"sequence", std::move(seq)},
          {"s", p.s()},
          {"full_defect_below_k", p.full_defect_below_k}};
}

json sequence(const std::vector<std::pair<int, int>>& s) {
  json out = json::array();
  for (const auto& [t, e] : s) out.push_back({t, e});
  return out;
}

json distribution(const WeightDistribution& a) {
  json out = json::array();
  for (const auto& v : a) out.push_back(big(v));
  return out;
}

json symbolic(const SymbolicDistribution& a) {
  json out = json::array();
  for (const auto& p : a) out.push_back(p.render());
  return out;
}

json code_report(const CodeReport& r, const FieldTower& t) {
  json witnesses = json::object();
  for (const auto& [name, w] : r.witnesses) witnesses[name] = w;
  json out = {{"params", {{"n", r.n}, {"k", r.k}, {"m", r.m}, {"q", t.q()}}},
              {"nondegenerate", r.nondegenerate},
              {"dual_nondegenerate", r.dual_nondegenerate},
              {"d", r.d},
              {"dual_d", r.dual_d},
              {"A", distribution(r.A)},
              {"d_r", r.d_r},
              {"verdicts", r.verdicts},
              {"crosschecks", r.crosschecks},
              {"witnesses", std::move(witnesses)}};
  return out;
}

json axiom_report(const AxiomReport& r) {
  json w = json::array();
  for (const auto& m : r.witness) w.push_back(mat(m));
  return {{"ok", r.ok()}, {"R1", r.r1}, {"R2", r.r2}, {"R3", r.r3},
          {"violated", r.violated}, {"witness", std::move(w)},
          {"subspaces", r.subspaces}, {"pairs", r.pairs}};
}

}  // namespace qdefect::cli
