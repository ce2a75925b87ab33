#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

#include "p3ap/monge.hpp"
#include "p3ap/solvers.hpp"

namespace p3ap {

namespace {

// Fills the rectangle row by row (layer k), column by column, trying values
// in increasing order. The first optimum found in this order is reported.
class Backtracker {
 public:
  Backtracker(const CostArray& c, const BruteForceOptions& options)
      : c_(c), n_(c.n()), p_(c.p()), options_(options),
        entries_(static_cast<std::size_t>(n_) * p_, 0),
        row_used_(n_, false),
        column_used_(static_cast<std::size_t>(n_) * n_, false) {
    if (options.lower_bound_pruning) build_bounds();
  }

  SolveReport run() {
    descend(0, 0, 0);
    SolveReport report;
    report.solver = SolverKind::kBruteForce;
    report.optimum = best_;
    report.solution = LatinRectangle(n_, p_, best_entries_);
    report.stats.states_explored = nodes_;
    if (options_.all_optima) {
      report.optimum_count = optimum_count_;
      report.optima = std::move(optima_);
      std::sort(report.optima.begin(), report.optima.end());
    }
    return report;
  }

 private:
  // remaining_[k * (n + 1) + j]: lower bound on the cost of cells (k, j..n-1)
  // and all later rows.
  void build_bounds() {
    remaining_.assign(static_cast<std::size_t>(p_) * (n_ + 1) + 1, 0);
    Cost later = 0;
    for (int k = p_ - 1; k >= 0; --k) {
      Cost suffix = later;
      remaining_[static_cast<std::size_t>(k) * (n_ + 1) + n_] = suffix;
      for (int j = n_ - 1; j >= 0; --j) {
        Cost best = std::numeric_limits<Cost>::max();
        for (int i = 0; i < n_; ++i) best = std::min(best, c_(i, j, k));
        suffix += best;
        remaining_[static_cast<std::size_t>(k) * (n_ + 1) + j] = suffix;
      }
      later = suffix;
    }
  }

  bool pruned(int k, int j, Cost partial) const {
    // Costs may be negative, so a partial sum alone bounds nothing.
    if (!found_ || !options_.lower_bound_pruning) return false;
    const Cost bound =
        partial + remaining_[static_cast<std::size_t>(k) * (n_ + 1) + j];
    return options_.all_optima ? bound > best_ : bound >= best_;
  }

  void descend(int k, int j, Cost partial) {
    ++nodes_;
    if (k == p_) {
      record(partial);
      return;
    }
    if (j == n_) {
      std::fill(row_used_.begin(), row_used_.end(), false);
      descend(k + 1, 0, partial);
      // Restore the row's used-value set for the caller's backtracking.
      for (int col = 0; col < n_; ++col)
        row_used_[entries_[static_cast<std::size_t>(k) * n_ + col]] = true;
      return;
    }
    if (pruned(k, j, partial)) return;
    for (int i = 0; i < n_; ++i) {
      if (row_used_[i] || column_used_[static_cast<std::size_t>(j) * n_ + i])
        continue;
      row_used_[i] = true;
      column_used_[static_cast<std::size_t>(j) * n_ + i] = true;
      entries_[static_cast<std::size_t>(k) * n_ + j] = i;
      descend(k, j + 1, partial + c_(i, j, k));
      row_used_[i] = false;
      column_used_[static_cast<std::size_t>(j) * n_ + i] = false;
    }
  }

  void record(Cost total) {
    if (!found_ || total < best_) {
      found_ = true;
      best_ = total;
      best_entries_ = entries_;
      optimum_count_ = 1;
      optima_.clear();
      if (options_.all_optima) optima_.emplace_back(n_, p_, entries_);
    } else if (total == best_ && options_.all_optima) {
      ++optimum_count_;
      if (optima_.size() < options_.max_optima_kept)
        optima_.emplace_back(n_, p_, entries_);
    }
  }

  const CostArray& c_;
  const int n_;
  const int p_;
  const BruteForceOptions& options_;

  std::vector<int> entries_;
  std::vector<bool> row_used_;
  std::vector<bool> column_used_;  // [j * n + i]
  std::vector<Cost> remaining_;

  bool found_ = false;
  Cost best_ = 0;
  std::vector<int> best_entries_;
  std::uint64_t optimum_count_ = 0;
  std::vector<LatinRectangle> optima_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string_view solver_name(SolverKind kind) {
  return kind == SolverKind::kDp ? "dp" : "brute";
}

SolveReport solve_bruteforce(const CostArray& c,
                             const BruteForceOptions& options) {
  if (!options.force && (c.n() > options.max_n || c.p() > options.max_p)) {
    throw ResourceLimitError(
        "oracle size limit: brute force handles n <= " +
        std::to_string(options.max_n) + " and p <= " +
        std::to_string(options.max_p) + " unless forced (got n=" +
        std::to_string(c.n()) + ", p=" + std::to_string(c.p()) + ")");
  }
  const auto start = std::chrono::steady_clock::now();
  SolveReport report = Backtracker(c, options).run();
  report.stats.wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return report;
}

SolveReport solve_auto(const CostArray& c, const AutoOptions& options) {
  if (is_layered_monge(c) && c.p() <= kDpMaxLayers) {
    DpOptions dp = options.dp;
    dp.skip_monge_check = true;  // just verified
    return solve_dp(c, dp);
  }
  try {
    return solve_bruteforce(c, options.brute);
  } catch (const ResourceLimitError& e) {
    throw ResourceLimitError(std::string("no applicable exact solver: ") +
                             "instance is not layered Monge and " + e.what());
  }
}

}  // namespace p3ap
