#include "p3ap/instances.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace p3ap {

namespace {

Cost checked_mul(Cost a, Cost b) {
  Cost out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw InputError(
        "counterexample density overflows 64-bit costs; reduce a or use "
        "wider arithmetic");
  }
  return out;
}

Cost checked_pow(Cost base, Cost exponent) {
  Cost out = 1;
  for (Cost e = 0; e < exponent; ++e) out = checked_mul(out, base);
  return out;
}

void check_np(int n, int p) {
  if (n < 1) throw InputError("n must be positive");
  if (p < 1 || p > n) throw InputError("p must lie in 1..n");
}

void check_zero_one(const CostArray& c) {
  for (Cost v : c.entries())
    if (v != 0 && v != 1) throw InputError("embedding input must be a 0-1 array");
}

Cost square(Cost x) { return x * x; }

// Fills one row of a Latin rectangle: assigns a value to every column,
// avoiding values already used in that column.
bool fill_row(int n, int col, std::vector<int>& row, std::vector<bool>& row_used,
              const std::vector<std::vector<bool>>& column_used, Rng& rng) {
  if (col == n) return true;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[uniform_int(rng, 0, i)]);
  for (int v : order) {
    if (row_used[v] || column_used[col][v]) continue;
    row_used[v] = true;
    row[col] = v;
    if (fill_row(n, col + 1, row, row_used, column_used, rng)) return true;
    row_used[v] = false;
  }
  return false;
}

}  // namespace

Cost uniform_int(Rng& rng, Cost lo, Cost hi) {
  if (hi < lo) throw InputError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<Cost>(rng());  // full 64-bit range
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<Cost>(draw % span);
}

IntMatrix random_monge_matrix(int n, Rng& rng, const MongeGenParams& params) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uniform_int(rng, 0, params.density_max);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) += (i > 0 ? m(i - 1, j) : 0) + (j > 0 ? m(i, j - 1) : 0) -
                 (i > 0 && j > 0 ? m(i - 1, j - 1) : 0);
  std::vector<Cost> row_term(n), col_term(n);
  for (Cost& u : row_term) u = uniform_int(rng, -params.constant_max, params.constant_max);
  for (Cost& v : col_term) v = uniform_int(rng, -params.constant_max, params.constant_max);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = -m(i, j) + row_term[i] + col_term[j];
  return m;
}

CostArray gen_random_layered_monge(int n, int p, std::uint64_t seed,
                                   const MongeGenParams& params) {
  check_np(n, p);
  Rng rng(seed);
  std::vector<IntMatrix> layers;
  for (int k = 0; k < p; ++k) layers.push_back(random_monge_matrix(n, rng, params));
  return CostArray::from_function(
      n, p, [&](int i, int j, int k) { return layers[k](i, j); });
}

CostArray gen_random_monge_array(int n, int p, std::uint64_t seed,
                                 const MongeGenParams& params) {
  check_np(n, p);
  Rng rng(seed);
  const CostArray density = CostArray::from_function(
      n, p, [&](int, int, int) { return uniform_int(rng, 0, params.density_max); });
  const CostArray base = build_distribution_array(DensityArray(density));
  const auto draw = [&](int count) {
    std::vector<Cost> v(count);
    for (Cost& x : v) x = uniform_int(rng, -params.constant_max, params.constant_max);
    return v;
  };
  const auto u = draw(n), v = draw(n), w = draw(p);
  return CostArray::from_function(n, p, [&](int i, int j, int k) {
    return base(i, j, k) + u[i] + v[j] + w[k];
  });
}

CostArray gen_uniform_random(int n, int p, std::uint64_t seed, Cost max_value) {
  check_np(n, p);
  Rng rng(seed);
  return CostArray::from_function(
      n, p, [&](int, int, int) { return uniform_int(rng, 0, max_value); });
}

LatinRectangle random_latin_rectangle(int n, int p, Rng& rng) {
  check_np(n, p);
  std::vector<std::vector<bool>> column_used(n, std::vector<bool>(n, false));
  std::vector<int> entries;
  for (int k = 0; k < p; ++k) {
    std::vector<int> row(n);
    std::vector<bool> row_used(n, false);
    // Every Latin rectangle with fewer than n rows extends by one row.
    if (!fill_row(n, 0, row, row_used, column_used, rng))
      throw InternalError("Latin rectangle row could not be completed");
    for (int j = 0; j < n; ++j) column_used[j][row[j]] = true;
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return LatinRectangle(n, p, std::move(entries));
}

Embedding gen_p3ap_embedding(const CostArray& c01, bool nonnegative) {
  const int n = c01.n();
  if (c01.p() != n) throw InputError("P3AP embedding needs p = n");
  check_zero_one(c01);
  const auto m = [&](int i, int j) {
    const Cost base = nonnegative ? 4 * square(n) : 0;
    return base - square(i + j + 2);  // 1-based (i + j)^2
  };
  Embedding out{CostArray::from_function(
                    n, n, [&](int i, int j, int k) { return m(i, j) + c01(i, j, k); }),
                0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.offset += m(i, j);
  return out;
}

LayerEmbedding gen_pp3ap_embedding(const CostArray& c01, BorderBlock border) {
  const int n = c01.n();
  if (c01.p() != n) throw InputError("p-P3AP embedding needs an n x n x n array");
  check_zero_one(c01);
  // 1-based row index within Y.
  const auto y = [&](int i1) -> Cost {
    if (border == BorderBlock::kLiteral) return static_cast<Cost>(i1) * n;
    return 4 * square(n) + 2 * n - square(n + i1) - i1;
  };
  const auto m_prime = [&](int i, int j) -> Cost {
    if (i < n && j < n) return -square(i + j + 2);
    if (i < n) return y(i + 1);       // Y
    if (j < n) return y(j + 1);       // Y^t
    return 0;                         // Z
  };
  return {CostArray::from_function(2 * n, n,
                                   [&](int i, int j, int k) {
                                     const Cost extra =
                                         (i < n && j < n) ? c01(i, j, k) : 0;
                                     return m_prime(i, j) + extra;
                                   }),
          n};
}

AssignmentTriples drop_outer_triples(const LatinRectangle& sol, int n) {
  AssignmentTriples out{n, sol.p(), {}};
  for (const Triple& t : to_triples(sol).triples)
    if (t.i < n && t.j < n) out.triples.push_back(t);
  return out;
}

DensityArray counterexample_density(const CounterexampleParams& params,
                                    int extra_middle_blocks) {
  const Cost a = params.a;
  if (a < 10) throw InputError("counterexample scale a must be at least 10");
  if (extra_middle_blocks < 0)
    throw InputError("extra middle block count must be nonnegative");

  // Column levels of the second layer, a^level: two columns at 1, three at
  // a, two at a^2, three at a^3. Each extra block is a further two-column
  // segment placed before the final three columns, one level up.
  std::vector<int> level = {0, 0, 1, 1, 1, 2, 2};
  for (int b = 0; b < extra_middle_blocks; ++b) level.insert(level.end(), 2, 3 + b);
  const int top = 3 + extra_middle_blocks;
  level.insert(level.end(), 3, top);
  const int n = static_cast<int>(level.size());

  const Cost flood = checked_pow(a, a);
  std::vector<Cost> entries(static_cast<std::size_t>(n) * n * 3);
  const auto at = [&](int i1, int j1, int k1) -> Cost& {
    return entries[(static_cast<std::size_t>(k1 - 1) * n + (i1 - 1)) * n + (j1 - 1)];
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      at(i, j, 1) = (i == n - 3 && j == n - 3) ? 100 : 1;
      const Cost here = checked_pow(a, level[j - 1]);
      if (params.literal_levels) {
        at(i, j, 2) = here;
      } else {
        // Steps of the levels, so that every row of the density sums up to
        // the level vector along j.
        at(i, j, 2) = j == 1 ? here : here - checked_pow(a, level[j - 2]);
      }
      at(i, j, 3) = flood;
    }
  }
  at(4, 5, 2) = checked_mul(10, a);
  at(n - 1, n, 2) = checked_mul(10, checked_pow(a, top));
  return DensityArray(CostArray(n, 3, std::move(entries)));
}

CostArray gen_counterexample(const CounterexampleParams& params) {
  return build_distribution_array(counterexample_density(params, 0));
}

CostArray gen_counterexample_extended(int extra_middle_blocks,
                                      const CounterexampleParams& params) {
  return build_distribution_array(
      counterexample_density(params, extra_middle_blocks));
}

LatinRectangle invert_rows(const LatinRectangle& sol) {
  std::vector<int> entries(static_cast<std::size_t>(sol.n()) * sol.p(), -1);
  for (int k = 0; k < sol.p(); ++k) {
    for (int j = 0; j < sol.n(); ++j) {
      int& slot = entries[static_cast<std::size_t>(k) * sol.n() + sol(k, j)];
      if (slot >= 0) throw InputError("row " + std::to_string(k + 1) + " is not a permutation");
      slot = j;
    }
  }
  return LatinRectangle(sol.n(), sol.p(), std::move(entries));
}

LatinRectangle counterexample_claimed_optimum() {
  return invert_rows(
      LatinRectangle::from_one_based({{3, 4, 1, 2, 6, 5, 8, 10, 7, 9},
                                      {2, 1, 4, 5, 3, 7, 6, 9, 10, 8},
                                      {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}));
}

}  // namespace p3ap
