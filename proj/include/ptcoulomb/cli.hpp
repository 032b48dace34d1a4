#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptc {

inline constexpr const char* kSchemaVersion = "1.0";

// Exit codes: 0 success, 1 failed verification or non-convergence,
// 2 argument error. Data goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptc
