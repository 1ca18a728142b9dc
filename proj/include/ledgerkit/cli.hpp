#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ledgerkit::cli {

// Dispatch one command line (program name excluded). Exit codes: 0 success,
// 1 a checked property is violated (closure failure, invalid walk, residual
// over tolerance, strict-unit breach), 2 usage, file, or parse errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ledgerkit::cli
