// Instance generators: seeded random Monge families, the hardness
// embeddings of 0-1 instances into layered Monge arrays, and the
// single-block counterexample for three layers.
#ifndef P3AP_INSTANCES_HPP_
#define P3AP_INSTANCES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "p3ap/core.hpp"
#include "p3ap/monge.hpp"

namespace p3ap {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]. Uses only the engine's raw output so that
// sequences are identical across standard libraries.
Cost uniform_int(Rng& rng, Cost lo, Cost hi);

struct MongeGenParams {
  Cost density_max = 9;   // densities drawn from [0, density_max]
  Cost constant_max = 20; // row/column terms drawn from [-constant_max, constant_max]
};

// Negated 2-d prefix sums of a random density plus row and column terms.
IntMatrix random_monge_matrix(int n, Rng& rng, const MongeGenParams& params = {});

// Independent random Monge layers. Throws InputError when p > n.
CostArray gen_random_layered_monge(int n, int p, std::uint64_t seed,
                                   const MongeGenParams& params = {});

// Distribution array of a random density plus u_i + v_j + w_k; passes
// is_monge_array.
CostArray gen_random_monge_array(int n, int p, std::uint64_t seed,
                                 const MongeGenParams& params = {});

// Entries drawn uniformly from [0, max_value]; max_value = 1 gives 0-1 arrays.
CostArray gen_uniform_random(int n, int p, std::uint64_t seed,
                             Cost max_value = 1);

// Random feasible p x n rectangle (row-wise randomized backtracking).
LatinRectangle random_latin_rectangle(int n, int p, Rng& rng);

struct Embedding {
  CostArray costs;
  Cost offset = 0;  // cost(costs, s) = cost(c01, s) + offset for every s
};

// Adds m_{ij} = -(i+j)^2 (or 4n^2 - (i+j)^2 with `nonnegative`) to every
// layer of a 0-1 array with p = n.
Embedding gen_p3ap_embedding(const CostArray& c01, bool nonnegative = false);

// Off-diagonal blocks of the doubled matrix M' = [[M, Y], [Y^t, 0]].
enum class BorderBlock {
  // y_{ij} = 4n^2 + 2n - (n+i)^2 - i: positive, at least n, and keeps M' +
  // any 0-1 perturbation of the M block Monge.
  kMongeRepaired,
  // y_{ij} = i * n as literally stated; M' is then not Monge.
  kLiteral,
};

struct LayerEmbedding {
  CostArray costs;  // 2n x 2n x n
  int p = 0;        // = n
};

// Embeds an n x n x n 0-1 array into a 2n x 2n x n p-layer instance.
LayerEmbedding gen_pp3ap_embedding(
    const CostArray& c01, BorderBlock border = BorderBlock::kMongeRepaired);

// Drops every triple of a 2n-side solution that involves an index > n.
AssignmentTriples drop_outer_triples(const LatinRectangle& sol, int n);

struct CounterexampleParams {
  Cost a = 10;
  // Use the level vector itself as the second-layer density instead of its
  // steps. The claimed optimum is then not optimal under either rectangle
  // convention; kept for comparison.
  bool literal_levels = false;
};

// Density of the 10 x 10 x 3 single-block instance, widened by
// `extra_middle_blocks` additional two-column segments.
DensityArray counterexample_density(const CounterexampleParams& params,
                                    int extra_middle_blocks = 0);

CostArray gen_counterexample(const CounterexampleParams& params = {});
CostArray gen_counterexample_extended(int extra_middle_blocks,
                                      const CounterexampleParams& params = {});

// The claimed unique optimum of gen_counterexample, rows
// (3,4,1,2,6,5,8,10,7,9), (2,1,4,5,3,7,6,9,10,8), (1,...,10), read with
// entry(k, i) = j. In the canonical encoding it is the row-wise inverse.
LatinRectangle counterexample_claimed_optimum();

// Row-wise inverse: swaps the entry(k, j) = i and entry(k, i) = j readings.
LatinRectangle invert_rows(const LatinRectangle& sol);

}  // namespace p3ap

#endif  // P3AP_INSTANCES_HPP_
