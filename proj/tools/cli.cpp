#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "p3ap/instances.hpp"
#include "p3ap/io.hpp"
#include "p3ap/monge.hpp"
#include "p3ap/solvers.hpp"
#include "p3ap/structure.hpp"

namespace p3ap::cli {

namespace {

struct Config {
  std::string generator;
  std::string input;
  std::string solution;
  std::string output;
  std::string format = "text";
  std::string solver = "auto";
  std::string border = "repaired";
  std::uint64_t seed = kDefaultSeed;
  int n = 5;
  int p = 2;
  int threads = 1;
  int extra_blocks = 1;
  Cost a = 10;
  Cost max_value = 1;
  bool all_optima = false;
  bool force = false;
  bool nonneg = false;
  bool literal_levels = false;
};

// Writes to --output when given, else to `out`.
void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + cfg.output);
  file << text;
}

CostArray load_instance(const Config& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  return parse_instance(read_file(cfg.input));
}

LatinRectangle load_solution(const Config& cfg) {
  if (cfg.solution.empty()) throw InputError("--solution is required");
  return parse_solution(read_file(cfg.solution));
}

void require_same_shape(const CostArray& c, const LatinRectangle& sol) {
  if (c.n() != sol.n() || c.p() != sol.p()) {
    throw InputError("dimension mismatch: instance is n=" + std::to_string(c.n()) +
                     ", p=" + std::to_string(c.p()) + " but solution is n=" +
                     std::to_string(sol.n()) + ", p=" + std::to_string(sol.p()));
  }
}

// 0-1 source for the embeddings: --input if given, else seeded random.
CostArray zero_one_source(const Config& cfg, std::string& provenance) {
  if (!cfg.input.empty()) {
    provenance += " input=" + cfg.input;
    return parse_instance(read_file(cfg.input));
  }
  provenance += " n=" + std::to_string(cfg.n);
  return gen_uniform_random(cfg.n, cfg.n, cfg.seed, 1);
}

int cmd_gen(const Config& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  std::string prov = "p3ap gen " + cfg.generator + " seed=" + std::to_string(cfg.seed);
  const auto np = [&] {
    prov += " n=" + std::to_string(cfg.n) + " p=" + std::to_string(cfg.p);
  };
  std::optional<CostArray> c;
  if (cfg.generator == "random-monge") {
    np();
    c = gen_random_layered_monge(cfg.n, cfg.p, cfg.seed);
  } else if (cfg.generator == "monge-array") {
    np();
    c = gen_random_monge_array(cfg.n, cfg.p, cfg.seed);
  } else if (cfg.generator == "uniform") {
    np();
    prov += " max=" + std::to_string(cfg.max_value);
    c = gen_uniform_random(cfg.n, cfg.p, cfg.seed, cfg.max_value);
  } else if (cfg.generator == "embed-p3ap") {
    const CostArray src = zero_one_source(cfg, prov);
    const Embedding e = gen_p3ap_embedding(src, cfg.nonneg);
    prov += std::string(" nonneg=") + (cfg.nonneg ? "1" : "0") +
            " offset=" + std::to_string(e.offset);
    c = e.costs;
  } else if (cfg.generator == "embed-pp3ap") {
    const CostArray src = zero_one_source(cfg, prov);
    BorderBlock border = BorderBlock::kMongeRepaired;
    if (cfg.border == "literal") {
      border = BorderBlock::kLiteral;
    } else if (cfg.border != "repaired") {
      throw InputError("--border must be repaired or literal");
    }
    prov += " border=" + cfg.border;
    c = gen_pp3ap_embedding(src, border).costs;
  } else if (cfg.generator == "counterexample" || cfg.generator == "counterexample-ext") {
    CounterexampleParams params;
    params.a = cfg.a;
    params.literal_levels = cfg.literal_levels;
    prov += " a=" + std::to_string(cfg.a);
    if (cfg.literal_levels) prov += " literal-levels";
    if (cfg.generator == "counterexample") {
      c = gen_counterexample(params);
    } else {
      prov += " extra-blocks=" + std::to_string(cfg.extra_blocks);
      c = gen_counterexample_extended(cfg.extra_blocks, params);
    }
  } else if (cfg.generator == "distribution") {
    if (cfg.input.empty()) throw InputError("distribution needs --input with a density");
    prov += " input=" + cfg.input;
    c = build_distribution_array(parse_density(read_file(cfg.input)));
  } else {
    throw InputError("unknown generator: " + cfg.generator);
  }
  emit(cfg, out, format_instance(*c, format, prov));
  return 0;
}

int cmd_solve(const Config& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  const CostArray c = load_instance(cfg);
  if (cfg.threads < 1) throw InputError("--threads must be positive");

  DpOptions dp;
  dp.all_optima_in_band = cfg.all_optima;
  dp.threads = cfg.threads;
  BruteForceOptions brute;
  brute.all_optima = cfg.all_optima;
  brute.force = cfg.force;

  SolveReport report;
  if (cfg.solver == "dp") {
    report = solve_dp(c, dp);
  } else if (cfg.solver == "brute") {
    report = solve_bruteforce(c, brute);
  } else if (cfg.solver == "auto") {
    report = solve_auto(c, {dp, brute});
  } else {
    throw InputError("--solver must be auto, dp or brute");
  }
  emit(cfg, out, format_report(report, format));
  return 0;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  const CostArray c = load_instance(cfg);
  const LatinRectangle sol = load_solution(cfg);
  require_same_shape(c, sol);

  const FeasibilityReport report = sol.check();
  std::ostringstream text;
  nlohmann::ordered_json j{{"feasible", report.feasible}, {"bandwidth", bandwidth(sol)}};
  text << "feasible " << (report.feasible ? "yes" : "no") << '\n';
  if (report.feasible) {
    const Cost value = cost(c, sol);
    const BlockPartition blocks = block_decompose(sol);
    text << "cost " << value << '\n'
         << "bandwidth " << bandwidth(sol) << '\n'
         << format_blocks(blocks, Format::kText);
    j["cost"] = value;
    j["blocks"] = nlohmann::ordered_json::parse(format_blocks(blocks, Format::kJson));
  } else {
    text << "violation " << report.violation << '\n';
    j["violation"] = report.violation;
  }
  emit(cfg, out, format == Format::kJson ? j.dump() + "\n" : text.str());
  return report.feasible ? 0 : 2;
}

int cmd_normalize(const Config& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  const CostArray c = load_instance(cfg);
  const LatinRectangle sol = load_solution(cfg);
  require_same_shape(c, sol);

  const NormalizeResult result = band_normalize(to_partial_latin_square(sol), c);
  const LatinRectangle after = to_latin_rectangle(result.solution);
  std::ostringstream summary;
  summary << "before cost=" << cost(c, sol) << " bandwidth=" << bandwidth(sol) << '\n'
          << "after cost=" << cost(c, after) << " bandwidth=" << bandwidth(after)
          << " exchanges=" << result.exchanges;
  if (cfg.output.empty()) {
    out << format_solution(after, format, summary.str());
  } else {
    emit(cfg, out, format_solution(after, format, summary.str()));
    out << summary.str() << '\n';
  }
  return 0;
}

int cmd_blocks(const Config& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  emit(cfg, out, format_blocks(block_decompose(load_solution(cfg)), format));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact solvers for planar 3-dimensional assignment on Monge-like arrays"};
  app.require_subcommand(1);

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("generator", cfg.generator,
                  "random-monge, monge-array, uniform, embed-p3ap, embed-pp3ap, "
                  "counterexample, counterexample-ext, distribution")
      ->required();
  gen->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  gen->add_option("--n", cfg.n, "side length")->capture_default_str();
  gen->add_option("--p", cfg.p, "layer count")->capture_default_str();
  gen->add_option("--max", cfg.max_value, "largest entry for uniform")->capture_default_str();
  gen->add_option("--a", cfg.a, "counterexample scale")->capture_default_str();
  gen->add_option("--extra-blocks", cfg.extra_blocks, "extra counterexample segments")
      ->capture_default_str();
  gen->add_flag("--literal-levels", cfg.literal_levels,
                "counterexample density uses the level vector itself");
  gen->add_flag("--nonneg", cfg.nonneg, "nonnegative P3AP embedding");
  gen->add_option("--border", cfg.border, "embed-pp3ap border block: repaired or literal")
      ->capture_default_str();
  gen->add_option("--input,-i", cfg.input, "0-1 instance or density to transform");
  add_format(gen);

  CLI::App* solve = app.add_subcommand("solve", "solve an instance exactly");
  solve->add_option("--input,-i", cfg.input, "instance file")->required();
  solve->add_option("--solver", cfg.solver, "auto, dp or brute")->capture_default_str();
  solve->add_flag("--all-optima", cfg.all_optima, "count optimal solutions");
  solve->add_option("--threads", cfg.threads, "DP worker threads")->capture_default_str();
  solve->add_flag("--force", cfg.force, "lift the brute-force size limit");
  add_format(solve);

  CLI::App* check = app.add_subcommand("check", "verify a solution");
  check->add_option("--input,-i", cfg.input, "instance file")->required();
  check->add_option("--solution,-s", cfg.solution, "solution file")->required();
  add_format(check);

  CLI::App* normalize = app.add_subcommand("normalize", "pull a solution into the band");
  normalize->add_option("--input,-i", cfg.input, "layered Monge instance")->required();
  normalize->add_option("--solution,-s", cfg.solution, "solution file")->required();
  add_format(normalize);

  CLI::App* blocks = app.add_subcommand("blocks", "block partition of a solution");
  blocks->add_option("--solution,-s", cfg.solution, "solution file")->required();
  add_format(blocks);

  std::vector<const char*> argv{"p3ap"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (normalize->parsed()) return cmd_normalize(cfg, out);
    return cmd_blocks(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace p3ap::cli
