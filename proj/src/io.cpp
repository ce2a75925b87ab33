#include "p3ap/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace p3ap {

namespace {

using json = nlohmann::ordered_json;

struct Line {
  int number = 0;  // 1-based line in the input
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-empty, non-comment lines.
std::vector<Line> content_lines(std::string_view input) {
  std::vector<Line> out;
  int number = 0;
  while (!input.empty()) {
    ++number;
    const auto nl = input.find('\n');
    const std::string_view raw = input.substr(0, nl);
    input = nl == std::string_view::npos ? std::string_view{} : input.substr(nl + 1);
    const std::string_view t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    out.push_back({number, t});
  }
  return out;
}

[[noreturn]] void fail_at(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

std::vector<Cost> integers(const Line& line) {
  std::vector<Cost> out;
  std::string_view rest = line.text;
  while (!rest.empty()) {
    const auto end = rest.find_first_of(" \t");
    const std::string_view token = rest.substr(0, end);
    Cost v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc::result_out_of_range)
      fail_at(line, "integer out of 64-bit range: " + std::string(token));
    if (ec != std::errc() || ptr != token.data() + token.size())
      fail_at(line, "not an integer: " + std::string(token));
    out.push_back(v);
    rest = end == std::string_view::npos ? std::string_view{} : trim(rest.substr(end));
  }
  return out;
}

bool looks_like_json(const std::vector<Line>& lines) {
  return !lines.empty() && lines.front().text.front() == '{';
}

// JSON text with comment lines dropped, so that provenance headers survive.
json parse_json(const std::vector<Line>& lines) {
  std::string body;
  for (const Line& l : lines) {
    body += l.text;
    body += '\n';
  }
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

int checked_dimension(Cost v, const char* name) {
  if (v < 1 || v > 100000)
    throw InputError(std::string(name) + " must lie in 1..100000");
  return static_cast<int>(v);
}

CostArray instance_from_lines(const std::vector<Line>& lines, std::size_t first) {
  if (lines.size() <= first) throw InputError("missing \"n p\" line");
  const auto dims = integers(lines[first]);
  if (dims.size() != 2) fail_at(lines[first], "expected \"n p\"");
  const int n = checked_dimension(dims[0], "n");
  const int p = checked_dimension(dims[1], "p");
  if (p > n) fail_at(lines[first], "p must not exceed n");

  const std::size_t expected = static_cast<std::size_t>(n) * p;
  if (lines.size() - first - 1 != expected) {
    throw InputError("expected " + std::to_string(expected) + " rows of costs, found " +
                     std::to_string(lines.size() - first - 1));
  }
  std::vector<Cost> entries;
  entries.reserve(expected * n);
  for (std::size_t r = 0; r < expected; ++r) {
    const Line& line = lines[first + 1 + r];
    const auto row = integers(line);
    if (static_cast<int>(row.size()) != n)
      fail_at(line, "expected " + std::to_string(n) + " integers");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return CostArray(n, p, std::move(entries));
}

CostArray instance_from_json(const json& j) {
  try {
    const int n = checked_dimension(j.at("n").get<Cost>(), "n");
    const int p = checked_dimension(j.at("p").get<Cost>(), "p");
    if (p > n) throw InputError("p must not exceed n");
    const auto layers = j.at("layers").get<std::vector<std::vector<std::vector<Cost>>>>();
    if (static_cast<int>(layers.size()) != p)
      throw InputError("\"layers\" must hold p matrices");
    for (const auto& layer : layers) {
      if (static_cast<int>(layer.size()) != n)
        throw InputError("every layer must have n rows");
      for (const auto& row : layer)
        if (static_cast<int>(row.size()) != n)
          throw InputError("every layer row must have n entries");
    }
    return CostArray::from_layers(layers);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad instance JSON: ") + e.what());
  }
}

void write_header(std::ostringstream& out, std::string_view header) {
  while (!header.empty()) {
    const auto nl = header.find('\n');
    out << "# " << header.substr(0, nl) << '\n';
    header = nl == std::string_view::npos ? std::string_view{} : header.substr(nl + 1);
  }
}

json layers_json(const CostArray& c) {
  json layers = json::array();
  for (int k = 0; k < c.p(); ++k) {
    json layer = json::array();
    for (int i = 0; i < c.n(); ++i) {
      json row = json::array();
      for (int j = 0; j < c.n(); ++j) row.push_back(c(i, j, k));
      layer.push_back(std::move(row));
    }
    layers.push_back(std::move(layer));
  }
  return layers;
}

void write_layers_text(std::ostringstream& out, const CostArray& c) {
  out << c.n() << ' ' << c.p() << '\n';
  for (int k = 0; k < c.p(); ++k) {
    out << '\n';
    for (int i = 0; i < c.n(); ++i) {
      for (int j = 0; j < c.n(); ++j) out << (j ? " " : "") << c(i, j, k);
      out << '\n';
    }
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  throw InputError("unknown format: " + std::string(name));
}

CostArray parse_instance(std::string_view input) {
  const auto lines = content_lines(input);
  if (looks_like_json(lines)) {
    const json j = parse_json(lines);
    if (j.value("density", false)) throw InputError("expected a cost array, got a density");
    return instance_from_json(j);
  }
  if (!lines.empty() && lines.front().text == "density")
    throw InputError("expected a cost array, got a density");
  return instance_from_lines(lines, 0);
}

DensityArray parse_density(std::string_view input) {
  const auto lines = content_lines(input);
  if (looks_like_json(lines)) {
    const json j = parse_json(lines);
    if (!j.value("density", false)) throw InputError("missing \"density\": true");
    return DensityArray(instance_from_json(j));
  }
  if (lines.empty() || lines.front().text != "density")
    throw InputError("missing \"density\" marker line");
  return DensityArray(instance_from_lines(lines, 1));
}

LatinRectangle parse_solution(std::string_view input) {
  const auto lines = content_lines(input);
  std::vector<std::vector<Cost>> rows;
  if (looks_like_json(lines)) {
    const json j = parse_json(lines);
    try {
      rows = j.at("rows").get<std::vector<std::vector<Cost>>>();
      if (j.contains("p") && j.at("p").get<std::size_t>() != rows.size())
        throw InputError("\"p\" does not match the number of rows");
      if (j.contains("n") && !rows.empty() && j.at("n").get<std::size_t>() != rows[0].size())
        throw InputError("\"n\" does not match the row length");
    } catch (const json::exception& e) {
      throw InputError(std::string("bad solution JSON: ") + e.what());
    }
  } else {
    for (const Line& l : lines) rows.push_back(integers(l));
  }
  if (rows.empty()) throw InputError("empty solution");
  const std::size_t n = rows[0].size();
  if (n == 0) throw InputError("empty solution row");
  if (rows.size() > n) throw InputError("solution has more rows than columns");
  std::vector<std::vector<int>> shaped;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != n)
      throw InputError("solution row " + std::to_string(k + 1) + " has " +
                       std::to_string(rows[k].size()) + " entries, expected " +
                       std::to_string(n));
    std::vector<int> row;
    for (Cost v : rows[k]) {
      if (v < 1 || v > static_cast<Cost>(n))
        throw InputError("solution entry " + std::to_string(v) + " in row " +
                         std::to_string(k + 1) + " is outside 1.." + std::to_string(n));
      row.push_back(static_cast<int>(v));
    }
    shaped.push_back(std::move(row));
  }
  return LatinRectangle::from_one_based(shaped);
}

std::string format_instance(const CostArray& c, Format format, std::string_view header) {
  std::ostringstream out;
  write_header(out, header);
  if (format == Format::kJson) {
    out << json{{"n", c.n()}, {"p", c.p()}, {"layers", layers_json(c)}}.dump() << '\n';
  } else {
    write_layers_text(out, c);
  }
  return out.str();
}

std::string format_density(const DensityArray& d, Format format, std::string_view header) {
  std::ostringstream out;
  write_header(out, header);
  if (format == Format::kJson) {
    out << json{{"density", true}, {"n", d.n()}, {"p", d.p()}, {"layers", layers_json(d.values())}}
               .dump()
        << '\n';
  } else {
    out << "density\n";
    write_layers_text(out, d.values());
  }
  return out.str();
}

std::string format_solution(const LatinRectangle& sol, Format format, std::string_view header) {
  std::ostringstream out;
  write_header(out, header);
  const auto rows = sol.rows_one_based();
  if (format == Format::kJson) {
    out << json{{"n", sol.n()}, {"p", sol.p()}, {"rows", rows}}.dump() << '\n';
  } else {
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
  }
  return out.str();
}

std::string format_report(const SolveReport& report, Format format) {
  const auto unique = report.unique_in_band();
  if (format == Format::kJson) {
    json j{{"optimum", report.optimum},
           {"solution_rows", report.solution.rows_one_based()},
           {"solver", std::string(solver_name(report.solver))},
           {"states_explored", report.stats.states_explored},
           {"unique_in_band", unique ? json(*unique) : json(nullptr)},
           {"wall_ms", report.stats.wall_ms}};
    if (report.optimum_count) j["optimum_count"] = *report.optimum_count;
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << "optimum " << report.optimum << '\n'
      << "solver " << solver_name(report.solver) << '\n'
      << "states_explored " << report.stats.states_explored << '\n';
  if (report.optimum_count) out << "optimum_count " << *report.optimum_count << '\n';
  if (unique) out << "unique_in_band " << (*unique ? "yes" : "no") << '\n';
  out << "wall_ms " << std::fixed << std::setprecision(3) << report.stats.wall_ms << '\n'
      << "solution\n"
      << format_solution(report.solution, Format::kText);
  return out.str();
}

std::string format_blocks(const BlockPartition& blocks, Format format) {
  if (format == Format::kJson) {
    json list = json::array();
    for (const Block& b : blocks) {
      std::vector<int> values;
      for (int v : b.integers) values.push_back(v + 1);
      list.push_back({{"from", b.from + 1},
                      {"to", b.to + 1},
                      {"integers", values},
                      {"normalized", b.normalized}});
    }
    return list.dump() + "\n";
  }
  std::ostringstream out;
  for (const Block& b : blocks) {
    out << "block " << b.from + 1 << ".." << b.to + 1 << " integers";
    for (int v : b.integers) out << ' ' << v + 1;
    out << (b.normalized ? " normalized" : " not-normalized") << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace p3ap
