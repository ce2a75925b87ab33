// Text and JSON formats for instances, densities, solutions, solve reports
// and block partitions. All files are 1-based. Lines starting with '#' are
// comments and are skipped by every parser; JSON input may carry them too.
//
// Instance text:   "n p", then p blocks of n lines with n integers each
//                  (blank lines between blocks are optional).
// Density text:    a line "density", then the instance layout.
// Solution text:   p lines of n integers, the rectangle rows.
// JSON mirrors:    {"n", "p", "layers"} (plus "density": true) and
//                  {"n", "p", "rows"}.
#ifndef P3AP_IO_HPP_
#define P3AP_IO_HPP_

#include <string>
#include <string_view>

#include "p3ap/core.hpp"
#include "p3ap/monge.hpp"
#include "p3ap/solvers.hpp"
#include "p3ap/structure.hpp"

namespace p3ap {

enum class Format { kText, kJson };

// "text" or "json"; anything else is an InputError.
Format parse_format(std::string_view name);

// Parsers detect JSON by a leading '{' and throw InputError with the
// offending line on malformed input.
CostArray parse_instance(std::string_view input);
DensityArray parse_density(std::string_view input);
LatinRectangle parse_solution(std::string_view input);

// `header` is emitted verbatim as '#' comment lines, one per '\n'-separated
// line, ahead of the body.
std::string format_instance(const CostArray& c, Format format,
                            std::string_view header = {});
std::string format_density(const DensityArray& d, Format format,
                           std::string_view header = {});
std::string format_solution(const LatinRectangle& sol, Format format,
                            std::string_view header = {});

// JSON: {"optimum", "solution_rows", "solver", "states_explored",
// "unique_in_band", "wall_ms"} plus "optimum_count" when counted.
std::string format_report(const SolveReport& report, Format format);

// JSON: [{"from", "to", "integers", "normalized"}], 1-based.
std::string format_blocks(const BlockPartition& blocks, Format format);

// Whole file into a string; InputError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace p3ap

#endif  // P3AP_IO_HPP_
