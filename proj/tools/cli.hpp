#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indtree::cli {

/// Exit codes: 0 success or claim verified, 1 claim falsified, 2 usage or I/O error.
enum ExitCode : int
{
    ok = 0,
    falsified = 1,
    usage_error = 2,
};

/// args excludes the program name.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace indtree::cli
