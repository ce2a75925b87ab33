// Times the serial DP kernel against the OpenMP kernel on layered Monge
// instances and prints one table row per (n, p, threads).
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "p3ap/instances.hpp"
#include "p3ap/solvers.hpp"

using namespace p3ap;

namespace {

double median_ms(const CostArray& c, const DpOptions& o, int reps, SolveReport& last) {
  std::vector<double> ms;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    last = solve_dp(c, o);
    ms.push_back(std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count());
  }
  std::sort(ms.begin(), ms.end());
  return ms[ms.size() / 2];
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 5;
  int max_threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::uint64_t seed = 1;
  CLI::App app{"Serial versus OpenMP DP kernel timings"};
  app.add_option("--reps", reps, "timed runs per row (median reported)")->capture_default_str();
  app.add_option("--max-threads", max_threads, "largest thread count")->capture_default_str();
  app.add_option("--seed", seed, "instance seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  if (reps < 1 || max_threads < 1) {
    std::fprintf(stderr, "--reps and --max-threads must be positive\n");
    return 2;
  }

  std::vector<int> thread_counts{1};
  for (int t = 2; t <= max_threads; t *= 2) thread_counts.push_back(t);
  if (thread_counts.back() != max_threads) thread_counts.push_back(max_threads);

  std::printf("hardware threads: %u\n", std::thread::hardware_concurrency());
  std::printf("%6s %3s %8s %12s %12s %8s %10s\n", "n", "p", "threads", "serial_ms",
              "parallel_ms", "speedup", "same");
  const std::vector<std::pair<int, int>> sizes{{1000, 2}, {4000, 2}, {12, 3}, {20, 3}};
  for (const auto& [n, p] : sizes) {
    const CostArray c = gen_random_layered_monge(n, p, seed);
    DpOptions serial;
    serial.skip_monge_check = true;  // time the DP, not the input scan
    SolveReport base;
    const double t_serial = median_ms(c, serial, reps, base);
    for (int threads : thread_counts) {
      if (threads == 1) {
        std::printf("%6d %3d %8d %12.2f %12s %8s %10s\n", n, p, 1, t_serial, "-", "-", "-");
        continue;
      }
      DpOptions parallel = serial;
      parallel.threads = threads;
      SolveReport r;
      const double t_par = median_ms(c, parallel, reps, r);
      const bool same = r.optimum == base.optimum && r.solution == base.solution &&
                        r.stats.states_per_step == base.stats.states_per_step;
      std::printf("%6d %3d %8d %12.2f %12.2f %8.2f %10s\n", n, p, threads, t_serial, t_par,
                  t_serial / t_par, same ? "yes" : "NO");
    }
  }
  return 0;
}
