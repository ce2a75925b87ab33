#include "p3ap/core.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace p3ap {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

std::string dims(int n, int p) {
  return "n=" + std::to_string(n) + ", p=" + std::to_string(p);
}

void check_dims(const CostArray& c, int n, int p) {
  require(c.n() == n && c.p() == p,
          "dimension mismatch: instance has " + dims(c.n(), c.p()) +
              ", solution has " + dims(n, p));
}

void check_np(int n, int p) {
  require(n >= 1, "n must be positive");
  require(p >= 1 && p <= n, "p must lie in 1..n (" + dims(n, p) + ")");
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(int rows, int cols, Cost fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, fill) {
  require(rows >= 0 && cols >= 0, "negative matrix dimension");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Cost> values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
  require(rows >= 0 && cols >= 0, "negative matrix dimension");
  require(data_.size() == static_cast<std::size_t>(rows) * cols,
          "matrix value count does not match its dimensions");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Cost>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  std::vector<Cost> values;
  values.reserve(static_cast<std::size_t>(r) * c);
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == c, "ragged matrix rows");
    values.insert(values.end(), row.begin(), row.end());
  }
  return IntMatrix(r, c, std::move(values));
}

bool IntMatrix::all_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Cost v) { return v == 0; });
}

Cost IntMatrix::sum() const {
  return std::accumulate(data_.begin(), data_.end(), Cost{0});
}

// ---------------------------------------------------------------- CostArray

CostArray::CostArray(int n, int p)
    : CostArray(n, p,
                std::vector<Cost>(static_cast<std::size_t>(n) * n * p, 0)) {}

CostArray::CostArray(int n, int p, std::vector<Cost> entries)
    : n_(n), p_(p), entries_(std::move(entries)) {
  check_np(n, p);
  require(entries_.size() == static_cast<std::size_t>(n) * n * p,
          "cost array needs exactly n*n*p entries");
}

CostArray CostArray::from_function(
    int n, int p, const std::function<Cost(int, int, int)>& f) {
  check_np(n, p);
  std::vector<Cost> e(static_cast<std::size_t>(n) * n * p);
  for (int k = 0; k < p; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        e[(static_cast<std::size_t>(k) * n + i) * n + j] = f(i, j, k);
  return CostArray(n, p, std::move(e));
}

CostArray CostArray::from_layers(
    const std::vector<std::vector<std::vector<Cost>>>& layers) {
  const int p = static_cast<int>(layers.size());
  require(p >= 1, "cost array needs at least one layer");
  const int n = static_cast<int>(layers.front().size());
  std::vector<Cost> e;
  e.reserve(static_cast<std::size_t>(n) * n * p);
  for (const auto& layer : layers) {
    require(static_cast<int>(layer.size()) == n, "every layer needs n rows");
    for (const auto& row : layer) {
      require(static_cast<int>(row.size()) == n, "every row needs n entries");
      e.insert(e.end(), row.begin(), row.end());
    }
  }
  return CostArray(n, p, std::move(e));
}

IntMatrix CostArray::layer(int k) const {
  require(k >= 0 && k < p_, "layer out of range");
  const auto first = entries_.begin() + static_cast<std::ptrdiff_t>(k) * n_ * n_;
  return IntMatrix(n_, n_, std::vector<Cost>(first, first + n_ * n_));
}

Cost CostArray::min_entry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

Cost CostArray::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

// ----------------------------------------------------------- LatinRectangle

LatinRectangle::LatinRectangle(int n, int p, std::vector<int> entries)
    : n_(n), p_(p), entries_(std::move(entries)) {
  check_np(n, p);
  require(entries_.size() == static_cast<std::size_t>(n) * p,
          "Latin rectangle needs exactly p*n entries");
  for (int v : entries_)
    require(v >= 0 && v < n, "Latin rectangle entry outside 1..n");
}

LatinRectangle LatinRectangle::from_rows(
    const std::vector<std::vector<int>>& rows) {
  const int p = static_cast<int>(rows.size());
  require(p >= 1, "Latin rectangle needs at least one row");
  const int n = static_cast<int>(rows.front().size());
  std::vector<int> e;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == n, "ragged Latin rectangle rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  return LatinRectangle(n, p, std::move(e));
}

LatinRectangle LatinRectangle::from_one_based(
    const std::vector<std::vector<int>>& rows) {
  auto shifted = rows;
  for (auto& row : shifted)
    for (int& v : row) --v;
  return from_rows(shifted);
}

LatinRectangle LatinRectangle::cyclic(int n, int p) {
  std::vector<int> e(static_cast<std::size_t>(n) * p);
  for (int k = 0; k < p; ++k)
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(k) * n + j] = (j + k) % n;
  return LatinRectangle(n, p, std::move(e));
}

std::vector<std::vector<int>> LatinRectangle::rows() const {
  std::vector<std::vector<int>> out(p_, std::vector<int>(n_));
  for (int k = 0; k < p_; ++k)
    for (int j = 0; j < n_; ++j) out[k][j] = (*this)(k, j);
  return out;
}

std::vector<std::vector<int>> LatinRectangle::rows_one_based() const {
  auto out = rows();
  for (auto& row : out)
    for (int& v : row) ++v;
  return out;
}

LatinRectangle LatinRectangle::with_entry(int k, int j, int value) const {
  require(k >= 0 && k < p_ && j >= 0 && j < n_, "entry index out of range");
  auto e = entries_;
  e[static_cast<std::size_t>(k) * n_ + j] = value;
  return LatinRectangle(n_, p_, std::move(e));
}

FeasibilityReport LatinRectangle::check() const {
  std::vector<int> seen(n_);
  for (int k = 0; k < p_; ++k) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int j = 0; j < n_; ++j) {
      const int v = (*this)(k, j);
      if (seen[v] >= 0) {
        return {false, "row " + std::to_string(k + 1) + ": value " +
                           std::to_string(v + 1) + " repeated in columns " +
                           std::to_string(seen[v] + 1) + " and " +
                           std::to_string(j + 1)};
      }
      seen[v] = j;
    }
  }
  for (int j = 0; j < n_; ++j) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int k = 0; k < p_; ++k) {
      const int v = (*this)(k, j);
      if (seen[v] >= 0) {
        return {false, "column " + std::to_string(j + 1) + ": value " +
                           std::to_string(v + 1) + " repeated in rows " +
                           std::to_string(seen[v] + 1) + " and " +
                           std::to_string(k + 1)};
      }
      seen[v] = k;
    }
  }
  return {};
}

// ------------------------------------------------------- PartialLatinSquare

PartialLatinSquare::PartialLatinSquare(int n, int p)
    : PartialLatinSquare(n, p,
                         std::vector<int>(static_cast<std::size_t>(n) * n,
                                          kEmpty)) {}

PartialLatinSquare::PartialLatinSquare(int n, int p, std::vector<int> cells)
    : n_(n), p_(p), cells_(std::move(cells)) {
  check_np(n, p);
  require(cells_.size() == static_cast<std::size_t>(n) * n,
          "partial Latin square needs exactly n*n cells");
  for (int v : cells_)
    require(v == kEmpty || (v >= 0 && v < p),
            "partial Latin square label outside 1..p");
}

PartialLatinSquare PartialLatinSquare::from_one_based(
    int p, const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == n, "partial Latin square must be square");
    for (int v : row) cells.push_back(v == 0 ? kEmpty : v - 1);
  }
  return PartialLatinSquare(n, p, std::move(cells));
}

int PartialLatinSquare::filled_count() const {
  return static_cast<int>(
      std::count_if(cells_.begin(), cells_.end(),
                    [](int v) { return v != kEmpty; }));
}

PartialLatinSquare PartialLatinSquare::with_cell(int i, int j,
                                                 int layer) const {
  require(i >= 0 && i < n_ && j >= 0 && j < n_, "cell index out of range");
  auto c = cells_;
  c[static_cast<std::size_t>(i) * n_ + j] = layer;
  return PartialLatinSquare(n_, p_, std::move(c));
}

std::vector<std::vector<int>> PartialLatinSquare::rows_one_based() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (filled(i, j)) out[i][j] = (*this)(i, j) + 1;
  return out;
}

FeasibilityReport PartialLatinSquare::check(bool require_complete) const {
  std::vector<int> seen(p_);
  for (int i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int j = 0; j < n_; ++j) {
      if (!filled(i, j)) continue;
      const int k = (*this)(i, j);
      if (seen[k] >= 0) {
        return {false, "row " + std::to_string(i + 1) + ": layer " +
                           std::to_string(k + 1) + " repeated in columns " +
                           std::to_string(seen[k] + 1) + " and " +
                           std::to_string(j + 1)};
      }
      seen[k] = j;
    }
  }
  for (int j = 0; j < n_; ++j) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int i = 0; i < n_; ++i) {
      if (!filled(i, j)) continue;
      const int k = (*this)(i, j);
      if (seen[k] >= 0) {
        return {false, "column " + std::to_string(j + 1) + ": layer " +
                           std::to_string(k + 1) + " repeated in rows " +
                           std::to_string(seen[k] + 1) + " and " +
                           std::to_string(i + 1)};
      }
      seen[k] = i;
    }
  }
  if (require_complete) {
    std::vector<int> count(p_, 0);
    for (int v : cells_)
      if (v != kEmpty) ++count[v];
    for (int k = 0; k < p_; ++k) {
      if (count[k] != n_) {
        return {false, "incomplete solution: layer " + std::to_string(k + 1) +
                           " appears " + std::to_string(count[k]) +
                           " times, expected " + std::to_string(n_)};
      }
    }
  }
  return {};
}

// -------------------------------------------------------- AssignmentTriples

FeasibilityReport AssignmentTriples::check() const {
  if (static_cast<int>(triples.size()) != n * p) {
    return {false, "expected " + std::to_string(n * p) + " triples, got " +
                       std::to_string(triples.size())};
  }
  std::vector<char> ik(static_cast<std::size_t>(n) * p, 0);
  std::vector<char> jk(static_cast<std::size_t>(n) * p, 0);
  std::vector<char> ij(static_cast<std::size_t>(n) * n, 0);
  for (const auto& t : triples) {
    if (t.i < 0 || t.i >= n || t.j < 0 || t.j >= n || t.k < 0 || t.k >= p)
      return {false, "triple index out of range"};
    const auto at = [&](int a, int b) {
      return "(" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ")";
    };
    if (std::exchange(ik[static_cast<std::size_t>(t.i) * p + t.k], 1))
      return {false, "two triples share (i, k) = " + at(t.i, t.k)};
    if (std::exchange(jk[static_cast<std::size_t>(t.j) * p + t.k], 1))
      return {false, "two triples share (j, k) = " + at(t.j, t.k)};
    if (std::exchange(ij[static_cast<std::size_t>(t.i) * n + t.j], 1))
      return {false, "two triples share (i, j) = " + at(t.i, t.j)};
  }
  return {};
}

// --------------------------------------------------------------- functions

Cost raw_cost(const CostArray& c, const LatinRectangle& grid) {
  check_dims(c, grid.n(), grid.p());
  Cost total = 0;
  for (int k = 0; k < grid.p(); ++k)
    for (int j = 0; j < grid.n(); ++j) total += c(grid(k, j), j, k);
  return total;
}

Cost cost(const CostArray& c, const LatinRectangle& sol) {
  check_dims(c, sol.n(), sol.p());
  const auto report = sol.check();
  require(report.feasible, "infeasible solution: " + report.violation);
  return raw_cost(c, sol);
}

Cost cost(const CostArray& c, const PartialLatinSquare& sol) {
  check_dims(c, sol.n(), sol.p());
  const auto report = sol.check();
  require(report.feasible, "infeasible solution: " + report.violation);
  Cost total = 0;
  for (int i = 0; i < sol.n(); ++i)
    for (int j = 0; j < sol.n(); ++j)
      if (sol.filled(i, j)) total += c(i, j, sol(i, j));
  return total;
}

Cost cost(const CostArray& c, const AssignmentTriples& sol) {
  check_dims(c, sol.n, sol.p);
  const auto report = sol.check();
  require(report.feasible, "infeasible solution: " + report.violation);
  Cost total = 0;
  for (const auto& t : sol.triples) total += c(t.i, t.j, t.k);
  return total;
}

PartialLatinSquare to_partial_latin_square(const LatinRectangle& sol) {
  const auto report = sol.check();
  require(report.feasible, "infeasible solution: " + report.violation);
  std::vector<int> cells(static_cast<std::size_t>(sol.n()) * sol.n(),
                         PartialLatinSquare::kEmpty);
  for (int k = 0; k < sol.p(); ++k)
    for (int j = 0; j < sol.n(); ++j)
      cells[static_cast<std::size_t>(sol(k, j)) * sol.n() + j] = k;
  return PartialLatinSquare(sol.n(), sol.p(), std::move(cells));
}

LatinRectangle to_latin_rectangle(const PartialLatinSquare& sol) {
  const auto report = sol.check(/*require_complete=*/true);
  require(report.feasible, report.violation);
  std::vector<int> e(static_cast<std::size_t>(sol.p()) * sol.n());
  for (int i = 0; i < sol.n(); ++i)
    for (int j = 0; j < sol.n(); ++j)
      if (sol.filled(i, j)) e[static_cast<std::size_t>(sol(i, j)) * sol.n() + j] = i;
  return LatinRectangle(sol.n(), sol.p(), std::move(e));
}

AssignmentTriples to_triples(const LatinRectangle& sol) {
  const auto report = sol.check();
  require(report.feasible, "infeasible solution: " + report.violation);
  AssignmentTriples out{sol.n(), sol.p(), {}};
  for (int k = 0; k < sol.p(); ++k)
    for (int j = 0; j < sol.n(); ++j) out.triples.push_back({sol(k, j), j, k});
  std::sort(out.triples.begin(), out.triples.end());
  return out;
}

LatinRectangle to_latin_rectangle(const AssignmentTriples& sol) {
  const auto report = sol.check();
  require(report.feasible, "infeasible solution: " + report.violation);
  std::vector<int> e(static_cast<std::size_t>(sol.p) * sol.n);
  for (const auto& t : sol.triples) e[static_cast<std::size_t>(t.k) * sol.n + t.j] = t.i;
  return LatinRectangle(sol.n, sol.p, std::move(e));
}

FeasibilityReport is_feasible(const LatinRectangle& sol) { return sol.check(); }

FeasibilityReport is_feasible(const PartialLatinSquare& sol) {
  return sol.check(/*require_complete=*/true);
}

}  // namespace p3ap
