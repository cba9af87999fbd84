#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcc {

// Exit codes: 0 success, 1 malformed input or usage, 2 validation failure,
// 3 degenerate Reeb data, 4 verification-suite failures, 5 internal error.
// Results go to out, diagnostics to err.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcc
