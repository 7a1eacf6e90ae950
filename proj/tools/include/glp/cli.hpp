#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glp::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when the answer is a rejection or not-found, 2 on bad input.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glp::cli
