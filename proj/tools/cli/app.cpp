#include "cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "qdefect/error.hpp"
#include "qdefect/io.hpp"

namespace qdefect::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  bool json_out = false;
  bool csv = false;
  std::uint64_t subspace_budget = 10'000'000;
  std::uint64_t codeword_budget = std::uint64_t{1} << 24;
  std::uint64_t seed = 7;
  std::string output;

  // per-command
  std::string input;
  std::string method = "all";
  std::string blocks;
  std::string n_pair;
  std::string k_pair;
  bool min_m = false;
  int horizon = 64;
  bool check_axioms = false;
  bool rgf = false;
  std::string represent;
  std::string suite = "all";
  int per_shape = 4;
};

struct Outcome {
  json result = json::object();
  int status = 0;
  std::string csv;
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::pair<int, int> parse_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const int a = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const std::string rest = s.substr(comma + 1);
    const int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    raise(Errc::BadParams, std::string(what) + " must look like a,b; got '" + s + "'");
  }
}

Blocks parse_blocks(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) raise(Errc::BadParams, "--blocks must look like n1,n2:k1,k2");
  const auto [n1, n2] = parse_pair(s.substr(0, colon), "--blocks lengths");
  const auto [k1, k2] = parse_pair(s.substr(colon + 1), "--blocks dimensions");
  return Blocks{{n1, n2}, {k1, k2}};
}

Outcome defect_seq(const Options& o) {
  const FqSystem u = read_system_file(o.input);
  const SystemReport rep = classify_system(u, nullptr, BigInt(o.subspace_budget));
  Outcome out;
  out.result = {{"tower", tower(*u.tower())},
                {"k", u.k()},
                {"n", u.n()},
                {"profile", profile(rep.profile)},
                {"subgeometry", rep.is_subgeometry},
                {"max_scattered_h", rep.max_scattered_h},
                {"maximum_scattered_h", rep.maximum_scattered_h},
                {"one_defect", rep.is_1_defect}};
  out.result["club_index"] = rep.club_index ? json(*rep.club_index) : json(nullptr);
  std::ostringstream csv;
  csv << "t,eps\n";
  for (const auto& s : rep.profile.sequence) csv << s.t << ',' << s.eps << '\n';
  out.csv = csv.str();
  return out;
}

Outcome dual(const Options& o) {
  const FqSystem u = read_system_file(o.input);
  const QuotientModel model = model_from_system(u);
  const SequenceDualityReport rep = verify_sequence_duality(u, BigInt(o.subspace_budget));
  Outcome out;
  out.result = {{"tower", tower(*u.tower())},
                {"k", u.k()},
                {"n", u.n()},
                {"dual_k", model.dual().k()},
                {"dual_dimension", rep.dual_dimension},
                {"dual_degeneracy", model.dual_degeneracy()},
                {"dual_system", mat(model.dual().vectors())},
                {"expected", sequence(rep.expected)},
                {"computed", sequence(rep.computed)},
                {"holds", rep.holds},
                {"mismatch", rep.mismatch}};
  out.status = rep.holds ? 0 : 1;
  return out;
}

Outcome genweights(const Options& o) {
  const RankCode c = read_code_file(o.input);
  const BigInt budget(o.subspace_budget);
  std::vector<std::pair<std::string, GenWeightMethod>> methods;
  if (o.method == "all" || o.method == "defect") methods.emplace_back("defect", GenWeightMethod::defect);
  if (o.method == "all" || o.method == "codim") methods.emplace_back("codim", GenWeightMethod::codim);
  if (o.method == "all" || o.method == "subcode") methods.emplace_back("subcode", GenWeightMethod::subcode);
  if (methods.empty()) raise(Errc::BadParams, "unknown method '" + o.method + "'");

  Outcome out;
  json weights = json::object();
  json skipped = json::object();
  std::optional<std::vector<int>> reference;
  bool agree = true;
  for (const auto& [name, m] : methods) {
    try {
      const auto d = generalized_weights(c, m, budget);
      weights[name] = d;
      if (!reference) reference = d;
      agree = agree && *reference == d;
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateCode) throw;
      skipped[name] = e.what();
    }
  }
  out.result = {{"n", c.n()},
                {"k", c.k()},
                {"nondegenerate", c.nondegenerate()},
                {"dual_nondegenerate", c.dual_nondegenerate()},
                {"d_r", weights},
                {"skipped", skipped},
                {"agree", agree}};
  const RankCode d = dual_code(c);
  const auto dual_direct = generalized_weights(d, GenWeightMethod::codim, budget);
  out.result["dual_d_r"] = dual_direct;
  bool ok = agree;
  if (c.nondegenerate() && c.dual_nondegenerate() && reference) {
    const auto from_profile = dual_generalized_weights_from_profile(c, budget);
    const bool wei = wei_partition_holds(static_cast<int>(c.n()), *reference, dual_direct);
    out.result["dual_d_r_from_profile"] = from_profile;
    out.result["wei_partition"] = wei;
    ok = ok && wei && from_profile == dual_direct;
  }
  out.status = ok ? 0 : 1;
  std::ostringstream csv;
  csv << "method";
  for (std::size_t r = 1; r <= c.k(); ++r) csv << ",d_" << r;
  csv << '\n';
  for (const auto& [name, d] : weights.items()) {
    csv << name;
    for (const auto& v : d) csv << ',' << v.get<int>();
    csv << '\n';
  }
  out.csv = csv.str();
  return out;
}

Outcome wdist(const Options& o) {
  const RankCode c = read_code_file(o.input);
  const FieldTower& t = *c.tower();
  const auto a = weight_distribution(c, BigInt(o.codeword_budget));
  const int n = static_cast<int>(c.n());
  const auto b = macwilliams(a, n, static_cast<int>(c.k()), t.q(), t.m());
  Outcome out;
  out.result = {{"params", {{"n", n}, {"k", c.k()}, {"m", t.m()}, {"q", t.q()}}},
                {"A", distribution(a)},
                {"B", distribution(b)}};
  std::ostringstream csv;
  csv << "i,A_i,B_i\n";
  for (int i = 0; i <= n; ++i) csv << i << ',' << a[i] << ',' << b[i] << '\n';
  out.csv = csv.str();
  return out;
}

Outcome classify(const Options& o) {
  const RankCode c = read_code_file(o.input);
  std::optional<Blocks> blocks;
  if (!o.blocks.empty()) blocks = parse_blocks(o.blocks);
  const CodeReport rep =
      classify_code(c, blocks, BigInt(o.subspace_budget), BigInt(o.codeword_budget));
  Outcome out;
  out.result = code_report(rep, *c.tower());
  for (const auto& [name, agrees] : rep.crosschecks) {
    if (!agrees) out.status = 1;
  }
  return out;
}

Outcome nkmrd(const Options& o) {
  const auto [n1, n2] = parse_pair(o.n_pair, "lengths");
  const auto [k1, k2] = parse_pair(o.k_pair, "dimensions");
  const auto a = nkmrd_wdist(n1, n2, k1, k2);
  Outcome out;
  out.result = {{"n", {n1, n2}}, {"k", {k1, k2}}, {"N", n1 + n2}, {"K", k1 + k2}, {"A", symbolic(a)}};
  std::ostringstream csv;
  csv << "i,A_i\n";
  for (std::size_t i = 0; i < a.size(); ++i) csv << i << ",\"" << a[i].render() << "\"\n";
  if (o.min_m) {
    const auto f = nkmrd_feasibility(n1, n2, k1, k2, o.horizon);
    if (!f.min_m) {
      raise(Errc::HorizonExceeded, "no m up to " + std::to_string(o.horizon) + " survives the checks");
    }
    json refuted = json::array();
    for (const auto& [m, r] : f.refuted) refuted.push_back({{"m", m}, {"index", r.index}, {"kind", r.kind}});
    out.result["min_m"] = *f.min_m;
    out.result["horizon"] = o.horizon;
    out.result["refuted"] = std::move(refuted);
    csv << "min_m," << *f.min_m << '\n';
  }
  out.csv = csv.str();
  return out;
}

Outcome table1(const Options& o) {
  static const int kRows[][4] = {{3, 3, 1, 2}, {4, 4, 1, 2}, {4, 4, 1, 3}, {4, 4, 2, 2}, {5, 5, 1, 2},
                                 {5, 5, 1, 3}, {5, 5, 1, 4}, {5, 5, 2, 2}, {5, 5, 2, 3}};
  Outcome out;
  json rows = json::array();
  std::ostringstream csv;
  csv << "n1,n2,k1,k2,min_m\n";
  for (const auto& r : kRows) {
    const int m = min_feasible_m(r[0], r[1], r[2], r[3], o.horizon);
    rows.push_back({{"n1", r[0]}, {"n2", r[1]}, {"k1", r[2]}, {"k2", r[3]}, {"min_m", m}});
    csv << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ',' << m << '\n';
  }
  out.result = {{"rows", std::move(rows)}, {"horizon", o.horizon}};
  out.csv = csv.str();
  return out;
}

const char* kind_name(MatroidKind k) {
  switch (k) {
    case MatroidKind::matrix: return "matrix";
    case MatroidKind::uniform: return "uniform";
    case MatroidKind::direct_sum: return "direct_sum";
    case MatroidKind::table: return "table";
  }
  return "";
}

Outcome qmatroid(const Options& o) {
  const QMatroid m = read_matroid_file(o.input);
  const BigInt budget(o.subspace_budget);
  Outcome out;
  out.result = {{"kind", kind_name(m.kind())}, {"ground_dim", m.ground_dim()}, {"rank", m.full_rank()}};
  if (o.check_axioms) {
    const AxiomReport rep = check_axioms(m, budget);
    out.result["axioms"] = axiom_report(rep);
    if (!rep.ok()) out.status = 1;
  }
  if (o.rgf) out.result["rgf"] = rank_generating_function(m, budget).render();
  if (!o.represent.empty()) {
    const Mat g = read_matrix_file(o.represent);
    const RepresentationReport rep = is_representation(g, m, budget);
    json r = {{"holds", rep.holds}, {"subspaces", rep.subspaces}};
    if (rep.witness) {
      r["witness"] = mat(*rep.witness);
      r["rank_matrix"] = rep.rank_matrix;
      r["rank_matroid"] = rep.rank_matroid;
    }
    out.result["representation"] = std::move(r);
    if (!rep.holds) out.status = 1;
  }
  return out;
}

Outcome verify(const Options& o) {
  SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.per_shape = o.per_shape;
  cfg.subspace_budget = o.subspace_budget;
  cfg.codeword_budget = o.codeword_budget;
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), o.suite) == known.end()) {
      raise(Errc::BadParams, "unknown suite '" + o.suite + "'");
    }
    names = {o.suite};
  }
  Outcome out;
  json suites = json::array();
  std::ostringstream csv;
  csv << "suite,checks,failures\n";
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, cfg);
    suites.push_back({{"name", r.name},
                      {"checks", r.checks},
                      {"failures", r.failures},
                      {"first_failure", r.first_failure}});
    csv << r.name << ',' << r.checks << ',' << r.failures << '\n';
    if (r.failures) out.status = 1;
  }
  out.result = {{"suites", std::move(suites)}};
  out.csv = csv.str();
  return out;
}

json config_echo(const std::string& command, const Options& o) {
  json c = {{"command", command},
            {"subspace_budget", o.subspace_budget},
            {"codeword_budget", o.codeword_budget},
            {"seed", o.seed},
            {"format", o.csv ? "csv" : "json"}};
  if (!o.input.empty()) c["input"] = o.input;
  if (command == "genweights") c["method"] = o.method;
  if (command == "classify" && !o.blocks.empty()) c["blocks"] = o.blocks;
  if (command == "nkmrd") {
    c["n"] = o.n_pair;
    c["k"] = o.k_pair;
    c["min_m"] = o.min_m;
  }
  if (command == "nkmrd" || command == "table1") c["horizon"] = o.horizon;
  if (command == "qmatroid") {
    c["check_axioms"] = o.check_axioms;
    c["rgf"] = o.rgf;
    if (!o.represent.empty()) c["represent"] = o.represent;
  }
  if (command == "verify") {
    c["suite"] = o.suite;
    c["per_shape"] = o.per_shape;
  }
  return c;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) raise(Errc::BadParams, "cannot write " + o.output);
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Defect sequences, Delsarte duality and rank-metric code tools", "qdefect"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", o.json_out, "JSON report (default)");
  fmt->add_flag("--csv", o.csv, "CSV for tabular results");
  fmt->require_option(0, 1);
  app.add_option("--subspace-budget", o.subspace_budget, "Maximum number of subspaces enumerated");
  app.add_option("--codeword-budget", o.codeword_budget, "Maximum number of codewords enumerated");
  app.add_option("--seed", o.seed, "Seed for corpus generation");
  app.add_option("-o,--output", o.output, "Write the report to a file");

  auto* c_seq = app.add_subcommand("defect-seq", "Defect profile and sequence of maximum defects");
  c_seq->add_option("system", o.input, "System file")->required()->check(CLI::ExistingFile);
  auto* c_dual = app.add_subcommand("dual", "Delsarte dual and the sequence duality check");
  c_dual->add_option("system", o.input, "System file")->required()->check(CLI::ExistingFile);
  auto* c_gw = app.add_subcommand("genweights", "Generalized rank weights");
  c_gw->add_option("code", o.input, "Code file")->required()->check(CLI::ExistingFile);
  c_gw->add_option("--method", o.method, "defect, codim, subcode or all")
      ->check(CLI::IsMember({"all", "defect", "codim", "subcode"}));
  auto* c_wd = app.add_subcommand("wdist", "Weight distribution and its MacWilliams transform");
  c_wd->add_option("code", o.input, "Code file")->required()->check(CLI::ExistingFile);
  auto* c_cl = app.add_subcommand("classify", "MRD / near-MRD / quasi-MRD / (n,k)-MRD verdicts");
  c_cl->add_option("code", o.input, "Code file")->required()->check(CLI::ExistingFile);
  c_cl->add_option("--blocks", o.blocks, "Block shape n1,n2:k1,k2");
  auto* c_nk = app.add_subcommand("nkmrd", "Symbolic weight distribution of ((n1,n2),(k1,k2))-MRD codes");
  c_nk->add_option("n", o.n_pair, "n1,n2")->required();
  c_nk->add_option("k", o.k_pair, "k1,k2")->required();
  c_nk->add_flag("--min-m", o.min_m, "Smallest m surviving the feasibility checks");
  c_nk->add_option("--horizon", o.horizon, "Largest m examined");
  auto* c_t1 = app.add_subcommand("table1", "Lower bounds on m for the tabulated block shapes");
  c_t1->add_option("--horizon", o.horizon, "Largest m examined");
  auto* c_qm = app.add_subcommand("qmatroid", "q-matroid axioms, rank generating function, representations");
  c_qm->add_option("matroid", o.input, "Matroid file")->required()->check(CLI::ExistingFile);
  c_qm->add_flag("--check-axioms", o.check_axioms, "Check (R1)-(R3) exhaustively");
  c_qm->add_flag("--rgf", o.rgf, "Rank generating function");
  c_qm->add_option("--represent", o.represent, "Matrix file to test as a representation")
      ->check(CLI::ExistingFile);
  auto* c_v = app.add_subcommand("verify", "Run invariant suites");
  c_v->add_option("--suite", o.suite, "Suite name or all");
  c_v->add_option("--per-shape", o.per_shape, "Corpus codes per shape")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json report = {{"tool", "qdefect"},
                 {"version", kVersion},
                 {"command", command},
                 {"config", config_echo(command, o)},
                 {"timestamp", timestamp()}};
  try {
    Outcome r;
    if (command == "defect-seq") r = defect_seq(o);
    else if (command == "dual") r = dual(o);
    else if (command == "genweights") r = genweights(o);
    else if (command == "wdist") r = wdist(o);
    else if (command == "classify") r = classify(o);
    else if (command == "nkmrd") r = nkmrd(o);
    else if (command == "table1") r = table1(o);
    else if (command == "qmatroid") r = qmatroid(o);
    else r = verify(o);

    if (o.csv) {
      if (r.csv.empty()) raise(Errc::BadParams, "'" + command + "' has no tabular output");
      emit(o, r.csv, out);
      return r.status;
    }
    report["status"] = r.status == 0 ? "ok" : "refuted";
    report["result"] = std::move(r.result);
    emit(o, report.dump(2) + "\n", out);
    return r.status;
  } catch (const Error& e) {
    json error = {{"reason", std::string(e.reason())}, {"message", e.what()}};
    if (const auto* b = dynamic_cast<const BudgetError*>(&e)) {
      error["required"] = b->required().str();
      error["budget"] = b->budget().str();
    }
    report["status"] = "error";
    report["error"] = std::move(error);
    err << "qdefect: " << e.reason() << ": " << e.what() << '\n';
    if (!o.csv) out << report.dump(2) << '\n';
    return 2;
  }
}

}  // namespace qdefect::cli
