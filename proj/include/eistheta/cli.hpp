#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eistheta
{

/// Runs `theta dump|verify|coset|oracle [flags]` with args excluding the
/// program name. Returns the process exit code: 0 success, 1 an asserted
/// check failed, 2 usage or contract error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace eistheta
