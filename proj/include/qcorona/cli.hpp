#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcorona::cli {

/// Runs `qcorona <cmd> ...`; args[0] is the program name. Returns the process
/// exit code: 0 success, 1 obstruction or failed verification, 2 usage or
/// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcorona::cli
