// Exact solvers: an exhaustive Latin-rectangle search that serves as the
// reference oracle, and the banded dynamic program for layered Monge arrays.
#ifndef P3AP_SOLVERS_HPP_
#define P3AP_SOLVERS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "p3ap/core.hpp"

namespace p3ap {

enum class SolverKind { kBruteForce, kDp };

std::string_view solver_name(SolverKind kind);

struct SolveStats {
  std::uint64_t states_explored = 0;  // search nodes / DP candidates
  std::uint64_t rows_expanded = 0;    // DP states expanded into a new row
  std::vector<std::size_t> states_per_step;  // DP only
  double wall_ms = 0.0;
};

struct SolveReport {
  Cost optimum = 0;
  LatinRectangle solution;
  SolverKind solver = SolverKind::kBruteForce;
  // Number of optimal solutions in the searched space, when requested. The
  // DP counts only band-limited solutions. Saturates at UINT64_MAX.
  std::optional<std::uint64_t> optimum_count;
  // Enumerated optima (lexicographically sorted, possibly truncated).
  std::vector<LatinRectangle> optima;
  SolveStats stats;

  // Only meaningful for the DP with all-optima mode on.
  std::optional<bool> unique_in_band() const;
};

struct BruteForceOptions {
  bool all_optima = false;
  bool force = false;  // lift the size limit
  bool lower_bound_pruning = false;
  int max_n = 8;
  int max_p = 3;
  std::size_t max_optima_kept = 100000;
};

// Exact optimum over all p x n Latin rectangles by row-by-row backtracking.
// Throws ResourceLimitError("oracle size limit ...") above max_n / max_p
// unless `force` is set.
SolveReport solve_bruteforce(const CostArray& c,
                             const BruteForceOptions& options = {});

struct DpOptions {
  bool all_optima_in_band = false;
  // Run without the layered-Monge precondition. Optimality is then only
  // guaranteed among band-limited solutions.
  bool skip_monge_check = false;
  int threads = 1;  // > 1 selects the OpenMP step kernel
  std::size_t max_optima_kept = 1000;
};

// Largest layer count the DP signature encoding supports.
inline constexpr int kDpMaxLayers = 8;

// Banded dynamic program: rows of the partial Latin square are filled top to
// bottom, row i only within columns |i - j| <= 2p - 2, and states are merged
// by the layer contents of the 4p - 4 columns that can still change.
SolveReport solve_dp(const CostArray& c, const DpOptions& options = {});

struct AutoOptions {
  DpOptions dp;
  BruteForceOptions brute;
};

// DP for layered Monge input, brute force otherwise. Throws
// ResourceLimitError("no applicable exact solver ...") when neither applies.
SolveReport solve_auto(const CostArray& c, const AutoOptions& options = {});

}  // namespace p3ap

#endif  // P3AP_SOLVERS_HPP_
