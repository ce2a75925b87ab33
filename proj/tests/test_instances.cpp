#include "doctest.h"
#include "oracles.hpp"
#include "p3ap/instances.hpp"
#include "p3ap/monge.hpp"
#include "p3ap/solvers.hpp"
#include "p3ap/structure.hpp"

using namespace p3ap;

TEST_CASE("random layered Monge generator") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const int p = 1 + static_cast<int>(seed % n);
    const CostArray c = gen_random_layered_monge(n, p, seed);
    CHECK(is_layered_monge(c));
    for (int k = 0; k < p; ++k) CHECK(oracle::monge_all_quadruples(c.layer(k)));
    CHECK(c == gen_random_layered_monge(n, p, seed));
  }
  CHECK(gen_random_layered_monge(6, 3, 1) != gen_random_layered_monge(6, 3, 2));
  CHECK(gen_random_layered_monge(4, 2, 3, MongeGenParams{0, 0}) == CostArray(4, 2));
  CHECK_THROWS_AS(gen_random_layered_monge(3, 4, 1), InputError);
  CHECK_THROWS_AS(gen_random_monge_array(3, 0, 1), InputError);
}

TEST_CASE("random Monge array and uniform generators") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    CHECK(is_monge_array(gen_random_monge_array(5, 1 + seed % 5, seed)));
    const CostArray u = gen_uniform_random(4, 3, seed, 5);
    CHECK(u.min_entry() >= 0);
    CHECK(u.max_entry() <= 5);
  }
  CHECK(gen_uniform_random(3, 2, 9, 0) == CostArray(3, 2));
}

TEST_CASE("uniform integers stay in range and hit both ends") {
  Rng rng(5);
  bool lo = false, hi = false;
  for (int t = 0; t < 1000; ++t) {
    const Cost v = uniform_int(rng, -2, 2);
    CHECK(v >= -2);
    CHECK(v <= 2);
    lo |= v == -2;
    hi |= v == 2;
  }
  CHECK(lo);
  CHECK(hi);
  CHECK_THROWS_AS(uniform_int(rng, 1, 0), InputError);
}

TEST_CASE("random Latin rectangles are feasible") {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 9;
    CHECK(random_latin_rectangle(n, 1 + t % n, rng).check().feasible);
  }
}

TEST_CASE("P3AP embedding of the zero array, n = 2") {
  const Embedding e = gen_p3ap_embedding(CostArray(2, 2));
  CHECK(e.offset == -38);
  CHECK(is_layered_monge(e.costs));
  CHECK(solve_bruteforce(e.costs).optimum == -38);
}

TEST_CASE("P3AP embedding shifts every solution by the offset") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CostArray c01 = gen_uniform_random(3, 3, seed, 1);
    for (bool nonneg : {false, true}) {
      const Embedding e = gen_p3ap_embedding(c01, nonneg);
      CHECK(is_layered_monge(e.costs));
      CHECK(solve_bruteforce(e.costs).optimum == solve_bruteforce(c01).optimum + e.offset);
      for (const auto& s : oracle::all_rectangles(3, 3))
        CHECK(cost(e.costs, s) == cost(c01, s) + e.offset);
    }
  }
}

TEST_CASE("nonnegative embedding range") {
  const int n = 4;
  const CostArray c01 = gen_uniform_random(n, n, 3, 1);
  const Embedding e = gen_p3ap_embedding(c01, true);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Cost f = e.costs(i, j, k) - c01(i, j, k);
        CHECK(f >= 0);
        CHECK(f < 4 * n * n);
      }
}

TEST_CASE("embedding input checks") {
  CHECK_THROWS_AS(gen_p3ap_embedding(CostArray(3, 2)), InputError);
  CHECK_THROWS_AS(gen_p3ap_embedding(CostArray(2, 2, {2, 0, 0, 0, 0, 0, 0, 0})), InputError);
  CHECK_THROWS_AS(gen_pp3ap_embedding(CostArray(3, 2)), InputError);
  CHECK_THROWS_AS(gen_pp3ap_embedding(CostArray(2, 2, {0, 0, 0, 0, 0, 0, 0, 5})), InputError);
}

TEST_CASE("layer embedding is layered Monge only with the repaired border") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const CostArray c01 = gen_uniform_random(n, n, seed, 1);
      const LayerEmbedding e = gen_pp3ap_embedding(c01);
      CHECK(e.p == n);
      CHECK(e.costs.n() == 2 * n);
      CHECK(is_layered_monge(e.costs));
    }
    if (n >= 2) CHECK_FALSE(is_layered_monge(gen_pp3ap_embedding(CostArray(n, n), BorderBlock::kLiteral).costs));
  }
}

TEST_CASE("layer embedding optimum restricts to a P3AP optimum, n = 2") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const CostArray c01 = gen_uniform_random(2, 2, seed, 1);
    const auto embedded = solve_bruteforce(gen_pp3ap_embedding(c01).costs);
    const AssignmentTriples inner = drop_outer_triples(embedded.solution, 2);
    REQUIRE(inner.check().feasible);
    CHECK(cost(c01, inner) == solve_bruteforce(c01).optimum);
  }
}

TEST_CASE("layer embedding of the zero array avoids the border, n = 3") {
  const LatinRectangle opt = solve_bruteforce(gen_pp3ap_embedding(CostArray(3, 3)).costs).solution;
  for (const Triple& t : to_triples(opt).triples) CHECK((t.i < 3) == (t.j < 3));
}

TEST_CASE("counterexample density") {
  const DensityArray d = counterexample_density({});
  CHECK(d.n() == 10);
  CHECK(d.p() == 3);
  Cost total = 0;
  int ones = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      total += d(i, j, 0);
      ones += d(i, j, 0) == 1;
    }
  CHECK(total == 199);
  CHECK(ones == 99);
  CHECK(d(6, 6, 0) == 100);
  CHECK(d(3, 4, 1) == 100);
  CHECK(d(8, 9, 1) == 10000);
  CHECK(d(0, 0, 2) == 10000000000);
  // Away from the special cells each density row adds up to the levels.
  const std::vector<Cost> levels{1, 1, 10, 10, 10, 100, 100, 1000, 1000, 1000};
  Cost run = 0;
  for (int j = 0; j < 10; ++j) {
    run += d(0, j, 1);
    CHECK(run == levels[j]);
  }
  const DensityArray literal = counterexample_density({10, true});
  for (int j = 0; j < 10; ++j) CHECK(literal(0, j, 1) == levels[j]);
}

TEST_CASE("counterexample arrays") {
  const CostArray c = gen_counterexample();
  CHECK(is_monge_array(c));
  CHECK(c == gen_counterexample_extended(0));
  CHECK(gen_counterexample_extended(1).n() == 12);
  CHECK(gen_counterexample_extended(2).n() == 14);
  CHECK(is_monge_array(gen_counterexample_extended(2)));
  CHECK_THROWS_AS(gen_counterexample({9}), InputError);
  CHECK_THROWS_AS(gen_counterexample_extended(-1), InputError);
  CHECK_THROWS_WITH_AS(gen_counterexample({20}), doctest::Contains("reduce a"), InputError);
}

TEST_CASE("claimed optimum under both conventions") {
  const LatinRectangle canonical = counterexample_claimed_optimum();
  CHECK(canonical.check().feasible);
  CHECK(invert_rows(invert_rows(canonical)) == canonical);
  CHECK(canonical.rows_one_based()[0] == std::vector<int>{3, 4, 1, 2, 6, 5, 9, 7, 10, 8});
  CHECK_THROWS_AS(invert_rows(LatinRectangle::from_one_based({{1, 1}})), InputError);
}

TEST_CASE("counterexample optimum is the claimed rectangle") {
  DpOptions o;
  o.all_optima_in_band = true;
  const auto r = solve_dp(gen_counterexample(), o);
  CHECK(r.solution == counterexample_claimed_optimum());
  CHECK(r.unique_in_band() == true);
  CHECK(block_decompose(r.solution).size() == 1);
}

TEST_CASE("literal level density does not reproduce the claimed optimum") {
  const CostArray c = gen_counterexample({10, true});
  const auto r = solve_dp(c);
  const LatinRectangle claimed = counterexample_claimed_optimum();
  CHECK(cost(c, claimed) > r.optimum);
  CHECK(cost(c, invert_rows(claimed)) > r.optimum);
  CHECK(block_decompose(r.solution).size() == 2);
}
