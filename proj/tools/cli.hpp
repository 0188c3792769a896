#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxlab::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on usage errors and 2 when
/// the input violates a mathematical precondition.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxlab::cli
