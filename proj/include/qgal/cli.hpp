#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgal {

/// Runs the command-line interface on `args` (program name excluded).
/// Normal output goes to `out`, diagnostics to `err`.  Returns the process
/// exit code: 0 on success, 1 when a verification suite reports failures,
/// 2 on usage or input errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qgal
