#include "doctest.h"
#include "oracles.hpp"
#include "p3ap/instances.hpp"
#include "p3ap/monge.hpp"
#include "p3ap/solvers.hpp"

using namespace p3ap;

namespace {

IntMatrix minus_square_sum(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = -(i + j + 2) * (i + j + 2);
  return m;
}

CostArray stack(const std::vector<IntMatrix>& layers) {
  return CostArray::from_function(layers[0].rows(), static_cast<int>(layers.size()),
                                  [&](int i, int j, int k) { return layers[k](i, j); });
}

// Quadruple-oracle version of the full Monge array test.
bool monge_array_oracle(const CostArray& c) {
  const int n = c.n(), p = c.p();
  for (int k = 0; k < p; ++k)
    if (!oracle::monge_all_quadruples(c.layer(k))) return false;
  for (int fixed = 0; fixed < n; ++fixed) {
    IntMatrix jk(n, p), ik(n, p);
    for (int x = 0; x < n; ++x)
      for (int k = 0; k < p; ++k) {
        jk(x, k) = c(fixed, x, k);
        ik(x, k) = c(x, fixed, k);
      }
    if (!oracle::monge_all_quadruples(jk) || !oracle::monge_all_quadruples(ik)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Monge matrix examples") {
  CHECK(is_monge_matrix(IntMatrix(3, 3)));
  CHECK(is_monge_matrix(minus_square_sum(4)));
  CHECK_FALSE(is_monge_matrix(IntMatrix::from_rows({{1, 0}, {0, 1}})));
  CHECK_THROWS_AS(is_monge_matrix(IntMatrix(2, 3)), InputError);
  CHECK(is_monge_matrix(IntMatrix(1, 1)));
}

TEST_CASE("adjacent criterion agrees with every quadruple") {
  Rng rng(21);
  int monge = 0;
  for (int t = 0; t < 3000; ++t) {
    const int rows = 1 + static_cast<int>(uniform_int(rng, 0, 4));
    const int cols = 1 + static_cast<int>(uniform_int(rng, 0, 4));
    IntMatrix m(rows, cols);
    // Negated prefix sums of a random density are Monge; half of the
    // matrices then get one cell perturbed.
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m(i, j) = -uniform_int(rng, 0, 2) + (i ? m(i - 1, j) : 0) + (j ? m(i, j - 1) : 0) -
                  (i && j ? m(i - 1, j - 1) : 0);
    if (t % 2) m(uniform_int(rng, 0, rows - 1), uniform_int(rng, 0, cols - 1)) += uniform_int(rng, -3, 3);
    const bool expected = oracle::monge_all_quadruples(m);
    monge += expected;
    CHECK(is_monge_rectangular(m) == expected);
    if (rows == cols) CHECK(is_monge_matrix(m) == expected);
  }
  CHECK(monge > 300);
  CHECK(monge < 2900);
}

TEST_CASE("layered Monge examples") {
  CHECK(is_layered_monge(stack({minus_square_sum(4), minus_square_sum(4), minus_square_sum(4)})));
  CHECK(is_layered_monge(CostArray(3, 2)));
  CHECK_FALSE(is_layered_monge(
      stack({IntMatrix(2, 2), IntMatrix::from_rows({{1, 0}, {0, 1}})})));
}

TEST_CASE("layered Monge does not imply Monge array") {
  // Search 2 x 2 x 2 arrays over {-1, 0, 1} for a witness.
  int witnesses = 0;
  for (int code = 0; code < 6561; ++code) {
    std::vector<Cost> e(8);
    for (int x = 0, rest = code; x < 8; ++x, rest /= 3) e[x] = rest % 3 - 1;
    const CostArray c(2, 2, e);
    const bool full = is_monge_array(c);
    CHECK(full == monge_array_oracle(c));
    if (full) CHECK(is_layered_monge(c));
    if (is_layered_monge(c) && !full) ++witnesses;
  }
  CHECK(witnesses > 0);
  CHECK(is_monge_array(CostArray(3, 2)));
}

TEST_CASE("distribution arrays") {
  const CostArray ones = build_distribution_array(
      DensityArray(CostArray::from_function(2, 2, [](int, int, int) { return 1; })));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(ones(i, j, k) == -(i + 1) * (j + 1) * (k + 1));
  CHECK(ones(1, 1, 1) == -8);

  CHECK(gen_counterexample()(0, 0, 0) == -1);

  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(uniform_int(rng, 0, 5));
    const int p = 1 + static_cast<int>(uniform_int(rng, 0, n - 1));
    const DensityArray d(CostArray::from_function(
        n, p, [&](int, int, int) { return uniform_int(rng, 0, 20); }));
    const CostArray c = build_distribution_array(d);
    CHECK(is_monge_array(c));
    CHECK(monge_array_oracle(c));
    // Spot check one prefix sum directly.
    const int i = n - 1, j = n / 2, k = p - 1;
    Cost s = 0;
    for (int a = 0; a <= i; ++a)
      for (int b = 0; b <= j; ++b)
        for (int l = 0; l <= k; ++l) s += d(a, b, l);
    CHECK(c(i, j, k) == -s);
  }
}

TEST_CASE("density validation and overflow") {
  CHECK_THROWS_AS(DensityArray(CostArray(1, 1, {-1})), InputError);
  const Cost big = std::numeric_limits<Cost>::max() / 2;
  CHECK_THROWS_WITH_AS(build_distribution_array(DensityArray(CostArray(2, 1, {big, big, big, big}))),
                       doctest::Contains("64-bit"), InputError);
}

TEST_CASE("decomposable shift constants") {
  const CostArray c = gen_uniform_random(3, 2, 5, 9);
  const auto same = apply_decomposable_shift(c, DecompositionTerms::zero(3, 2));
  CHECK(same.costs == c);
  CHECK(same.constant == 0);

  DecompositionTerms t = DecompositionTerms::zero(2, 2);
  t.a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  const CostArray base = gen_uniform_random(2, 2, 6, 9);
  const auto shifted = apply_decomposable_shift(base, t);
  CHECK(shifted.constant == 10);
  for (const auto& rows : {std::vector<std::vector<int>>{{1, 2}, {2, 1}},
                           std::vector<std::vector<int>>{{2, 1}, {1, 2}}}) {
    const auto s = LatinRectangle::from_one_based(rows);
    CHECK(cost(shifted.costs, s) - cost(base, s) == 10);
  }

  DecompositionTerms u = DecompositionTerms::zero(3, 2);
  u.b = IntMatrix(3, 2, 1);
  CHECK(apply_decomposable_shift(c, u).constant == 6);

  DecompositionTerms bad = DecompositionTerms::zero(3, 2);
  bad.a(0, 1) = 1;
  CHECK_THROWS_WITH_AS(apply_decomposable_shift(c, bad), doctest::Contains("p = n"),
                       InputError);
  CHECK_THROWS_AS(apply_decomposable_shift(c, DecompositionTerms::zero(2, 2)), InputError);
}

TEST_CASE("shift moves every feasible solution by the same amount") {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(uniform_int(rng, 0, 3));
    const int p = t % 2 ? n : 1 + static_cast<int>(uniform_int(rng, 0, n - 2));
    const CostArray c = gen_uniform_random(n, p, 300 + t, 30);
    DecompositionTerms terms = DecompositionTerms::zero(n, p);
    const auto fill = [&](IntMatrix& m) {
      for (int r = 0; r < m.rows(); ++r)
        for (int q = 0; q < m.cols(); ++q) m(r, q) = uniform_int(rng, -9, 9);
    };
    if (p == n) fill(terms.a);
    fill(terms.b);
    fill(terms.d);
    const auto s = apply_decomposable_shift(c, terms);
    for (int r = 0; r < 5; ++r) {
      const LatinRectangle sol = random_latin_rectangle(n, p, rng);
      CHECK(cost(s.costs, sol) - cost(c, sol) == s.constant);
    }
  }
}

TEST_CASE("triply graded transform") {
  const CostArray flat = CostArray::from_function(3, 2, [](int, int, int) { return 7; });
  CHECK(make_triply_graded(flat) == flat);
  CHECK(is_triply_graded(flat));

  const CostArray c01 = gen_uniform_random(3, 2, 31, 1);
  const Cost spread = c01.max_entry() - c01.min_entry();
  CHECK(is_triply_graded(make_triply_graded(c01)));
  CHECK(is_triply_graded(make_triply_graded(c01, spread + 1), true));
  CHECK_THROWS_AS(make_triply_graded(c01, spread - 1), InputError);
}

TEST_CASE("triply graded transform keeps the optimal set") {
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 3;
    const int p = 1 + t % n;
    const CostArray c = gen_uniform_random(n, p, 400 + t, 6);
    BruteForceOptions o;
    o.all_optima = true;
    o.force = true;  // p = 4 lies above the default limit
    const auto before = solve_bruteforce(c, o);
    const auto after = solve_bruteforce(make_triply_graded(c), o);
    CHECK(before.optima == after.optima);
    CHECK(*before.optimum_count == *after.optimum_count);
  }
}
