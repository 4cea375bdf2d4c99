#include "qdefect/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "qdefect/error.hpp"

namespace qdefect {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line with comments stripped; false at end of input.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      out = line.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  std::string expect() {
    std::string line;
    if (!next(line)) fail("unexpected end of input");
    return line;
  }

  [[noreturn]] void fail(const std::string& what) const {
    raise(Errc::ParseError, "line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::uint64_t parse_uint(const std::string& s, const LineReader* where = nullptr) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    if (where) where->fail("expected a non-negative integer, got '" + s + "'");
    raise(Errc::ParseError, "expected a non-negative integer, got '" + s + "'");
  }
  return v;
}

std::vector<Elem> parse_list(const std::string& s) {
  std::vector<Elem> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<Elem>(parse_uint(item)));
  return out;
}

std::map<std::string, std::string> parse_pairs(const std::string& line, const LineReader* where) {
  std::map<std::string, std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      if (where) where->fail("expected key=value, got '" + tok + "'");
      raise(Errc::ParseError, "expected key=value, got '" + tok + "'");
    }
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

std::vector<Elem> parse_row(const std::string& line, std::size_t cols, const LineReader& r) {
  std::istringstream ss(line);
  std::vector<Elem> row;
  std::string tok;
  while (ss >> tok) row.push_back(static_cast<Elem>(parse_uint(tok, &r)));
  if (row.size() != cols) {
    r.fail("expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
  }
  return row;
}

TowerPtr read_header(LineReader& r) {
  try {
    return parse_tower_header(r.expect());
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    r.fail(std::string("bad tower header: ") + e.what());
  }
}

struct MatrixBlock {
  Mat mat;
  std::optional<std::size_t> k;
};

MatrixBlock read_block(LineReader& r, const TowerPtr& tower) {
  const auto kv = parse_pairs(r.expect(), &r);
  auto get = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) r.fail(std::string("missing ") + key + "=");
    return it->second;
  };
  const auto rows = parse_uint(get("rows"), &r);
  const auto cols = parse_uint(get("cols"), &r);
  const std::string& lv = get("level");
  if (lv != "q" && lv != "qm") r.fail("level must be q or qm");
  const Level level = lv == "q" ? Level::q : Level::qm;
  Mat m(tower, level, 0, cols);
  for (std::uint64_t i = 0; i < rows; ++i) {
    const auto row = parse_row(r.expect(), cols, r);
    try {
      m.append_row(row);
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  MatrixBlock out{std::move(m), std::nullopt};
  if (auto it = kv.find("k"); it != kv.end()) out.k = parse_uint(it->second, &r);
  return out;
}

QMatroid read_spec(LineReader& r, const TowerPtr& tower) {
  const auto kv = parse_pairs(r.expect(), &r);
  auto it = kv.find("matroid");
  if (it == kv.end()) r.fail("expected matroid=<kind>");
  auto num = [&](const char* key) -> int {
    auto f = kv.find(key);
    if (f == kv.end()) r.fail(std::string("missing ") + key + "=");
    return static_cast<int>(parse_uint(f->second, &r));
  };
  const std::string& kind = it->second;
  if (kind == "uniform") return QMatroid::uniform(tower, num("k"), num("n"));
  if (kind == "matrix") return QMatroid::from_matrix(read_block(r, tower).mat);
  if (kind == "direct_sum") {
    QMatroid a = read_spec(r, tower);
    QMatroid b = read_spec(r, tower);
    return QMatroid::direct_sum(a, b);
  }
  if (kind == "table") {
    const int n = num("n");
    const int entries = num("entries");
    std::vector<std::pair<Mat, int>> table;
    for (int e = 0; e < entries; ++e) {
      const std::string line = r.expect();
      const auto bar = line.find('|');
      if (bar == std::string::npos) r.fail("table entry needs '<rank> | rows'");
      std::string head = line.substr(0, bar);
      head.erase(head.find_last_not_of(" \t") + 1);
      const int rank_value = static_cast<int>(parse_uint(head, &r));
      Mat v(tower, Level::q, 0, n);
      std::stringstream rest(line.substr(bar + 1));
      std::string row;
      while (std::getline(rest, row, ';')) {
        if (row.find_first_not_of(" \t") == std::string::npos) continue;
        v.append_row(parse_row(row, n, r));
      }
      table.emplace_back(std::move(v), rank_value);
    }
    return QMatroid::from_table(tower, n, table);
  }
  r.fail("unknown matroid kind '" + kind + "'");
}

template <class T, class Fn>
T read_file(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) raise(Errc::ParseError, "cannot open " + path.string());
  return fn(in);
}

std::string matrix_block(const Mat& m, const std::string& extra = {}) {
  std::ostringstream os;
  os << "rows=" << m.rows() << " cols=" << m.cols() << " level=" << (m.level() == Level::q ? "q" : "qm")
     << extra << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

void write_spec(std::ostringstream& os, const QMatroid& m) {
  switch (m.kind()) {
    case MatroidKind::uniform:
      os << "matroid=uniform k=" << m.uniform_rank() << " n=" << m.ground_dim() << '\n';
      break;
    case MatroidKind::matrix:
      os << "matroid=matrix\n" << matrix_block(m.generator());
      break;
    case MatroidKind::direct_sum: {
      os << "matroid=direct_sum\n";
      auto [a, b] = m.summands();
      write_spec(os, *a);
      write_spec(os, *b);
      break;
    }
    case MatroidKind::table: {
      const auto t = m.table();
      os << "matroid=table n=" << m.ground_dim() << " entries=" << t.size() << '\n';
      for (const auto& [v, rank_value] : t) {
        os << rank_value << " |";
        for (std::size_t r = 0; r < v.rows(); ++r) {
          os << (r ? " ;" : "");
          for (std::size_t c = 0; c < v.cols(); ++c) os << ' ' << v(r, c);
        }
        os << '\n';
      }
      break;
    }
  }
}

}  // namespace

TowerPtr parse_tower_header(const std::string& line) {
  const auto kv = parse_pairs(line, nullptr);
  for (const char* key : {"p", "e", "m"}) {
    if (!kv.count(key)) raise(Errc::ParseError, std::string("tower header lacks ") + key + "=");
  }
  const auto p = static_cast<std::uint32_t>(parse_uint(kv.at("p")));
  const int e = static_cast<int>(parse_uint(kv.at("e")));
  const int m = static_cast<int>(parse_uint(kv.at("m")));
  const bool has_q = kv.count("polyq") > 0;
  const bool has_qm = kv.count("polyqm") > 0;
  if (!has_q && !has_qm) return FieldTower::make(p, e, m);
  const TowerPtr defaults = FieldTower::make(p, e, m);
  return FieldTower::make_with(p, e, m, has_q ? parse_list(kv.at("polyq")) : defaults->poly_q(),
                               has_qm ? parse_list(kv.at("polyqm")) : defaults->poly_qm());
}

Mat read_matrix(std::istream& in) {
  LineReader r(in);
  const TowerPtr tower = read_header(r);
  return read_block(r, tower).mat;
}

FqSystem read_system(std::istream& in) {
  LineReader r(in);
  const TowerPtr tower = read_header(r);
  MatrixBlock b = read_block(r, tower);
  if (b.mat.level() == Level::qm) {
    if (b.k && *b.k != b.mat.cols()) r.fail("k= disagrees with the number of columns");
    return FqSystem::from_vectors(b.mat);
  }
  if (!b.k) r.fail("a system over F_q needs k=");
  return FqSystem(tower, *b.k, b.mat);
}

RankCode read_code(std::istream& in) {
  const Mat g = read_matrix(in);
  if (g.level() != Level::qm) raise(Errc::ParseError, "a generator must have level=qm");
  return RankCode::from_generator(g);
}

QMatroid read_matroid(std::istream& in) {
  LineReader r(in);
  const TowerPtr tower = read_header(r);
  return read_spec(r, tower);
}

Mat read_matrix_file(const std::filesystem::path& path) {
  return read_file<Mat>(path, [](std::istream& in) { return read_matrix(in); });
}

FqSystem read_system_file(const std::filesystem::path& path) {
  return read_file<FqSystem>(path, [](std::istream& in) { return read_system(in); });
}

RankCode read_code_file(const std::filesystem::path& path) {
  return read_file<RankCode>(path, [](std::istream& in) { return read_code(in); });
}

QMatroid read_matroid_file(const std::filesystem::path& path) {
  return read_file<QMatroid>(path, [](std::istream& in) { return read_matroid(in); });
}

std::string write_matrix(const Mat& m) { return m.tower()->header() + '\n' + matrix_block(m); }

std::string write_system(const FqSystem& u) {
  return u.tower()->header() + '\n' + matrix_block(u.vectors());
}

std::string write_code(const RankCode& c) { return write_matrix(c.generator()); }

std::string write_matroid(const QMatroid& m) {
  std::ostringstream os;
  os << m.tower()->header() << '\n';
  write_spec(os, m);
  return os.str();
}

}  // namespace qdefect
