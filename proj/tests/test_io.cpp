#include "doctest.h"
#include "json.hpp"
#include "p3ap/instances.hpp"
#include "p3ap/io.hpp"

using namespace p3ap;

TEST_CASE("instance text round trip") {
  const CostArray c = gen_random_layered_monge(4, 3, 8);
  const std::string text = format_instance(c, Format::kText, "made by a test\nsecond line");
  CHECK(text.rfind("# made by a test\n# second line\n4 3\n\n", 0) == 0);
  CHECK(parse_instance(text) == c);
  CHECK(parse_instance(format_instance(c, Format::kJson, "header")) == c);
}

TEST_CASE("instance text layout is tolerant of comments and spacing") {
  const std::string text =
      "# comment\n2 1\n  # indented comment\n1   -2\r\n\n\t3 4\n";
  const CostArray c = parse_instance(text);
  CHECK(c == CostArray(2, 1, {1, -2, 3, 4}));
}

TEST_CASE("instance parse errors") {
  CHECK_THROWS_WITH_AS(parse_instance("2 1\n1 2\n3\n"), doctest::Contains("line 3"), InputError);
  CHECK_THROWS_AS(parse_instance("2 1\n1 2\n"), InputError);
  CHECK_THROWS_AS(parse_instance("2 1\n1 2\n3 4\n5 6\n"), InputError);
  CHECK_THROWS_WITH_AS(parse_instance("2 1\n1 x\n3 4\n"), doctest::Contains("not an integer"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_instance("1 1\n99999999999999999999\n"),
                       doctest::Contains("64-bit"), InputError);
  CHECK_THROWS_AS(parse_instance("1 2\n0\n0\n"), InputError);
  CHECK_THROWS_AS(parse_instance("0 0\n"), InputError);
  CHECK_THROWS_AS(parse_instance(""), InputError);
  CHECK_THROWS_AS(parse_instance("2\n"), InputError);
  CHECK_THROWS_AS(parse_instance("{\"n\": 2, \"p\": 1, \"layers\": [[[1, 2], [3]]]}"), InputError);
  CHECK_THROWS_AS(parse_instance("{\"n\": 2, \"p\": 1}"), InputError);
  CHECK_THROWS_AS(parse_instance("{not json"), InputError);
}

TEST_CASE("density marker") {
  const DensityArray d(gen_uniform_random(3, 2, 4, 9));
  for (Format f : {Format::kText, Format::kJson}) {
    const std::string s = format_density(d, f);
    CHECK(parse_density(s) == d);
    CHECK_THROWS_AS(parse_instance(s), InputError);
  }
  CHECK(format_density(d, Format::kText).rfind("density\n3 2\n", 0) == 0);
  CHECK_THROWS_AS(parse_density(format_instance(d.values(), Format::kText)), InputError);
  CHECK_THROWS_AS(parse_density("density\n1 1\n-1\n"), InputError);
}

TEST_CASE("solution round trip") {
  const auto sol = LatinRectangle::from_one_based({{2, 1, 3, 4}, {4, 3, 1, 2}, {1, 4, 2, 3}});
  CHECK(format_solution(sol, Format::kText) == "2 1 3 4\n4 3 1 2\n1 4 2 3\n");
  CHECK(parse_solution(format_solution(sol, Format::kText, "x")) == sol);
  const std::string json = format_solution(sol, Format::kJson);
  CHECK(json == "{\"n\":4,\"p\":3,\"rows\":[[2,1,3,4],[4,3,1,2],[1,4,2,3]]}\n");
  CHECK(parse_solution(json) == sol);
}

TEST_CASE("solution parse errors") {
  CHECK_THROWS_WITH_AS(parse_solution("1 2\n2 3\n"), doctest::Contains("outside 1..2"), InputError);
  CHECK_THROWS_AS(parse_solution("1 2\n2\n"), InputError);
  CHECK_THROWS_AS(parse_solution("1\n1\n"), InputError);  // p > n
  CHECK_THROWS_AS(parse_solution("# only a comment\n"), InputError);
  CHECK_THROWS_AS(parse_solution("{\"n\": 3, \"rows\": [[1, 2]]}"), InputError);
  CHECK_THROWS_AS(parse_solution("{\"p\": 2, \"rows\": [[1, 2]]}"), InputError);
  // Infeasible but well-formed solutions parse; checking is separate.
  CHECK_FALSE(parse_solution("1 2\n1 2\n").check().feasible);
}

TEST_CASE("report serialization") {
  SolveReport r;
  r.optimum = -7;
  r.solution = LatinRectangle::from_one_based({{2, 1}});
  r.solver = SolverKind::kDp;
  r.optimum_count = 1;
  r.stats.states_explored = 12;
  r.stats.wall_ms = 1.5;
  const auto j = nlohmann::json::parse(format_report(r, Format::kJson));
  CHECK(j.at("optimum") == -7);
  CHECK(j.at("solution_rows") == nlohmann::json::parse("[[2,1]]"));
  CHECK(j.at("solver") == "dp");
  CHECK(j.at("states_explored") == 12);
  CHECK(j.at("unique_in_band") == true);
  CHECK(j.at("wall_ms") == 1.5);
  CHECK(j.at("optimum_count") == 1);

  const std::string text = format_report(r, Format::kText);
  CHECK(text.find("optimum -7\n") == 0);
  CHECK(text.find("unique_in_band yes\n") != std::string::npos);
  CHECK(text.find("solution\n2 1\n") != std::string::npos);

  r.solver = SolverKind::kBruteForce;
  r.optimum_count.reset();
  const auto b = nlohmann::json::parse(format_report(r, Format::kJson));
  CHECK(b.at("unique_in_band").is_null());
  CHECK_FALSE(b.contains("optimum_count"));
}

TEST_CASE("block serialization is 1-based") {
  const BlockPartition blocks{{0, 1, {0, 1}, true}, {2, 4, {2, 3, 5}, false}};
  CHECK(format_blocks(blocks, Format::kJson) ==
        "[{\"from\":1,\"to\":2,\"integers\":[1,2],\"normalized\":true},"
        "{\"from\":3,\"to\":5,\"integers\":[3,4,6],\"normalized\":false}]\n");
  CHECK(format_blocks(blocks, Format::kText) ==
        "block 1..2 integers 1 2 normalized\nblock 3..5 integers 3 4 6 not-normalized\n");
}

TEST_CASE("format names and files") {
  CHECK(parse_format("text") == Format::kText);
  CHECK(parse_format("json") == Format::kJson);
  CHECK_THROWS_AS(parse_format("xml"), InputError);
  CHECK_THROWS_AS(read_file("/nonexistent/p3ap/file"), InputError);
}
