#pragma once

#include <ostream>

namespace qdefect::cli {

// Exit status: 0 success, 1 refuted property, 2 usage, budget or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qdefect::cli
