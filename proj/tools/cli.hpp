#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexont::cli {

// Full command dispatch, streams injected for tests. `args` excludes the
// program name. Returns the process exit code: 0 success, 1 domain error,
// 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace lexont::cli
