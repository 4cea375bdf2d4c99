#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "qdefect/qmatroid.hpp"
#include "qdefect/rmcode.hpp"

namespace qdefect {

// Text formats. Every file starts with a tower header
//   p=<p> e=<e> m=<m> [polyq=<c0,c1,..>] [polyqm=<c0,c1,..>]
// followed by blocks. A matrix block is
//   rows=<r> cols=<c> level=q|qm [k=<k>]
// and r lines of c encoded integers. `#` starts a comment; blank lines are ignored.
//
// system: one matrix block. level=qm rows are vectors of F_{q^m}^k (k = cols) whose F_q-span
// is U; level=q rows are expanded coordinates and need k=<k>.
// code: one level=qm matrix block holding a generator.
// matroid: a spec, recursively
//   matroid=uniform k=<k> n=<n>
//   matroid=matrix          (then a matrix block)
//   matroid=direct_sum      (then two specs)
//   matroid=table n=<n> entries=<count>   (then <count> lines `<rank> | row ; row ...`)

TowerPtr parse_tower_header(const std::string& line);

Mat read_matrix(std::istream& in);
FqSystem read_system(std::istream& in);
RankCode read_code(std::istream& in);
QMatroid read_matroid(std::istream& in);

Mat read_matrix_file(const std::filesystem::path& path);
FqSystem read_system_file(const std::filesystem::path& path);
RankCode read_code_file(const std::filesystem::path& path);
QMatroid read_matroid_file(const std::filesystem::path& path);

std::string write_matrix(const Mat& m);
std::string write_system(const FqSystem& u);
std::string write_code(const RankCode& c);
std::string write_matroid(const QMatroid& m);

}  // namespace qdefect
