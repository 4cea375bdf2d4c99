#pragma once

#include <json.hpp>

#include "qdefect/duality.hpp"
#include "qdefect/qmatroid.hpp"
#include "qdefect/rmcode.hpp"

namespace qdefect::cli {

using nlohmann::json;

// Exact integers: JSON numbers when they fit in 64 bits, decimal strings otherwise.
json big(const BigInt& v);
json mat(const Mat& m);
json tower(const FieldTower& t);
json profile(const DefectProfile& p);
json sequence(const std::vector<std::pair<int, int>>& s);
json distribution(const WeightDistribution& a);
json symbolic(const SymbolicDistribution& a);
json code_report(const CodeReport& r, const FieldTower& t);
json axiom_report(const AxiomReport& r);

}  // namespace qdefect::cli
