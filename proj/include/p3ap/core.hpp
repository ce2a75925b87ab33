// Instance and solution data model for the p-layer planar 3-dimensional
// assignment problem.
//
// Indexing convention: every accessor in this library is 0-based. Text and
// JSON files are 1-based; conversion happens only in io.hpp and in the
// explicit *_one_based helpers below.
//
// A feasible solution is a set of p pairwise disjoint permutations of
// {0..n-1}. It has three equivalent encodings:
//   - LatinRectangle:     p x n grid, entry(k, j) = i  <=>  x_{ijk} = 1
//   - PartialLatinSquare: n x n grid, cell(i, j) = k   <=>  x_{ijk} = 1
//   - AssignmentTriples:  the list of (i, j, k) with x_{ijk} = 1
#ifndef P3AP_CORE_HPP_
#define P3AP_CORE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3ap {

using Cost = std::int64_t;

// Malformed input, dimension mismatch, or an infeasible solution where a
// feasible one is required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is valid but exceeds a configured resource limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A condition that the underlying theory rules out was observed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, Cost fill = 0);
  IntMatrix(int rows, int cols, std::vector<Cost> values);
  static IntMatrix from_rows(const std::vector<std::vector<Cost>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Cost operator()(int r, int c) const { return data_[index(r, c)]; }
  Cost& operator()(int r, int c) { return data_[index(r, c)]; }

  bool all_zero() const;
  Cost sum() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cost> data_;
};

// n x n x p integer cost array c_{ijk}. Immutable once built.
class CostArray {
 public:
  CostArray() = default;
  // All-zero array.
  CostArray(int n, int p);
  // `entries` is layer-major: entries[(k * n + i) * n + j].
  CostArray(int n, int p, std::vector<Cost> entries);

  static CostArray from_function(
      int n, int p, const std::function<Cost(int i, int j, int k)>& f);
  // layers[k][i][j].
  static CostArray from_layers(
      const std::vector<std::vector<std::vector<Cost>>>& layers);

  int n() const { return n_; }
  int p() const { return p_; }

  Cost operator()(int i, int j, int k) const {
    return entries_[(static_cast<std::size_t>(k) * n_ + i) * n_ + j];
  }

  IntMatrix layer(int k) const;
  const std::vector<Cost>& entries() const { return entries_; }
  Cost min_entry() const;
  Cost max_entry() const;

  friend bool operator==(const CostArray&, const CostArray&) = default;

 private:
  int n_ = 0;
  int p_ = 0;
  std::vector<Cost> entries_;
};

// Result of a feasibility check. `violation` names the first violated
// constraint with 1-based indices, empty when feasible.
struct FeasibilityReport {
  bool feasible = true;
  std::string violation;

  explicit operator bool() const { return feasible; }
};

// p x n grid; entry(k, j) = i means layer k sends row i to column j.
// Construction validates shape and value range only; feasibility is a
// separate query so that swaps can produce and report infeasible grids.
class LatinRectangle {
 public:
  LatinRectangle() = default;
  LatinRectangle(int n, int p, std::vector<int> entries);
  static LatinRectangle from_rows(const std::vector<std::vector<int>>& rows);
  static LatinRectangle from_one_based(
      const std::vector<std::vector<int>>& rows);
  // Row k holds 0..n-1 rotated left by k.
  static LatinRectangle cyclic(int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  int operator()(int k, int j) const {
    return entries_[static_cast<std::size_t>(k) * n_ + j];
  }

  std::vector<std::vector<int>> rows() const;
  std::vector<std::vector<int>> rows_one_based() const;
  LatinRectangle with_entry(int k, int j, int value) const;

  FeasibilityReport check() const;

  friend bool operator==(const LatinRectangle&, const LatinRectangle&) =
      default;
  friend auto operator<=>(const LatinRectangle&, const LatinRectangle&) =
      default;

 private:
  int n_ = 0;
  int p_ = 0;
  std::vector<int> entries_;
};

// n x n grid of optional layer labels in 0..p-1.
class PartialLatinSquare {
 public:
  static constexpr int kEmpty = -1;

  PartialLatinSquare() = default;
  PartialLatinSquare(int n, int p);  // all cells empty
  PartialLatinSquare(int n, int p, std::vector<int> cells);
  // Rows of 1-based layer labels, 0 for an empty cell.
  static PartialLatinSquare from_one_based(
      int p, const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int p() const { return p_; }
  int operator()(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * n_ + j];
  }
  bool filled(int i, int j) const { return (*this)(i, j) != kEmpty; }
  int filled_count() const;

  PartialLatinSquare with_cell(int i, int j, int layer) const;
  std::vector<std::vector<int>> rows_one_based() const;

  // Checks row/column distinctness and, when `require_complete`, that each
  // layer appears exactly n times.
  FeasibilityReport check(bool require_complete = true) const;

  friend bool operator==(const PartialLatinSquare&,
                         const PartialLatinSquare&) = default;

 private:
  int n_ = 0;
  int p_ = 0;
  std::vector<int> cells_;
};

struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Sorted set of (i, j, k) with x_{ijk} = 1.
struct AssignmentTriples {
  int n = 0;
  int p = 0;
  std::vector<Triple> triples;

  FeasibilityReport check() const;
};

// Objective value of a feasible solution. Throws InputError on dimension
// mismatch or infeasibility.
Cost cost(const CostArray& c, const LatinRectangle& sol);
Cost cost(const CostArray& c, const PartialLatinSquare& sol);
Cost cost(const CostArray& c, const AssignmentTriples& sol);

// Objective sum of a grid of the right shape without any feasibility check.
Cost raw_cost(const CostArray& c, const LatinRectangle& grid);

PartialLatinSquare to_partial_latin_square(const LatinRectangle& sol);
LatinRectangle to_latin_rectangle(const PartialLatinSquare& sol);
AssignmentTriples to_triples(const LatinRectangle& sol);
LatinRectangle to_latin_rectangle(const AssignmentTriples& sol);

FeasibilityReport is_feasible(const LatinRectangle& sol);
FeasibilityReport is_feasible(const PartialLatinSquare& sol);

}  // namespace p3ap

#endif  // P3AP_CORE_HPP_
