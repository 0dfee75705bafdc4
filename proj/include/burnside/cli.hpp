#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace burnside::cli {

// Runs one command. Exit codes: 0 success / all checks pass, 1 a check
// failed (report emitted), 2 malformed input (single-line error object).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace burnside::cli
