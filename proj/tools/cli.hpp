// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with captured streams.
//
// Exit codes: 0 ok, 2 input or feasibility error, 3 resource limit,
// 1 internal error.
#ifndef P3AP_TOOLS_CLI_HPP_
#define P3AP_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace p3ap::cli {

inline constexpr std::uint64_t kDefaultSeed = 1;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p3ap::cli

#endif  // P3AP_TOOLS_CLI_HPP_
