#include <algorithm>
#include <chrono>
#include <string>

#include "p3ap/dp_kernel.hpp"
#include "p3ap/monge.hpp"
#include "p3ap/solvers.hpp"

namespace p3ap {

namespace {

using dp::State;

// Writes the row-`row` placement into the rectangle being rebuilt.
void apply_placement(const dp::Window& w, const dp::Placement& placement,
                     int row, std::vector<int>& entries) {
  for (int k = 0; k < w.p(); ++k) {
    const int col = w.column(row, placement[k]);
    entries[static_cast<std::size_t>(k) * w.n() + col] = row;
  }
}

class OptimaCollector {
 public:
  OptimaCollector(const dp::Window& w,
                  const std::vector<std::vector<State>>& history,
                  std::size_t limit)
      : w_(w), history_(history), limit_(limit),
        entries_(static_cast<std::size_t>(w.n()) * w.p(), 0) {}

  std::vector<LatinRectangle> run(std::size_t final_index) {
    walk(w_.n(), final_index);
    return std::move(out_);
  }

 private:
  // history_[step] holds states after `step` rows.
  void walk(int step, std::size_t index) {
    if (out_.size() >= limit_) return;
    if (step == 0) {
      out_.emplace_back(w_.n(), w_.p(), entries_);
      return;
    }
    const State& s = history_[step][index];
    for (const dp::Edge& e : s.ties) {
      apply_placement(w_, e.placement, step - 1, entries_);
      walk(step - 1, e.key.pred);
    }
  }

  const dp::Window& w_;
  const std::vector<std::vector<State>>& history_;
  std::size_t limit_;
  std::vector<int> entries_;
  std::vector<LatinRectangle> out_;
};

}  // namespace

std::optional<bool> SolveReport::unique_in_band() const {
  if (solver != SolverKind::kDp || !optimum_count) return std::nullopt;
  return *optimum_count == 1;
}

SolveReport solve_dp(const CostArray& c, const DpOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = c.n();
  const int p = c.p();
  if (p > kDpMaxLayers) {
    throw ResourceLimitError("DP supports at most " +
                             std::to_string(kDpMaxLayers) + " layers");
  }
  if (!options.skip_monge_check && !is_layered_monge(c)) {
    throw InputError(
        "DP requires a layered Monge cost array (override available, "
        "optimality then holds only among band-limited solutions)");
  }

  const dp::Window window(n, p);
  const bool track = options.all_optima_in_band;
  SolveReport report;
  report.solver = SolverKind::kDp;

  std::vector<std::vector<State>> history;
  history.reserve(n + 1);
  State start_state;
  start_state.signature = window.initial();
  history.push_back({start_state});

  for (int row = 0; row < n; ++row) {
    auto step = options.threads > 1
                    ? dp::expand_row_parallel(window, c, history.back(), row,
                                              track, options.threads)
                    : dp::expand_row_serial(window, c, history.back(), row,
                                            track);
    if (step.states.empty()) {
      throw InternalError("DP ran out of states at row " +
                          std::to_string(row + 1));
    }
    report.stats.rows_expanded += history.back().size();
    report.stats.states_explored += step.candidates;
    report.stats.states_per_step.push_back(step.states.size());
    history.push_back(std::move(step.states));
  }

  const auto& last = history.back();
  std::size_t final_index = last.size();
  for (std::size_t i = 0; i < last.size(); ++i) {
    if (window.complete(last[i].signature)) {
      final_index = i;
      break;
    }
  }
  if (final_index == last.size())
    throw InternalError("DP found no complete band-limited solution");

  // Follow the retained producers back to row 0.
  std::vector<int> entries(static_cast<std::size_t>(n) * p, 0);
  std::size_t index = final_index;
  for (int step = n; step > 0; --step) {
    const State& s = history[step][index];
    apply_placement(window, s.placement, step - 1, entries);
    index = s.key.pred;
  }

  report.optimum = last[final_index].cost;
  report.solution = LatinRectangle(n, p, std::move(entries));
  if (track) {
    report.optimum_count = last[final_index].ways;
    report.optima = OptimaCollector(window, history, options.max_optima_kept)
                        .run(final_index);
    std::sort(report.optima.begin(), report.optima.end());
  }
  report.stats.wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return report;
}

}  // namespace p3ap
