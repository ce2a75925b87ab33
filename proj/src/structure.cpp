#include "p3ap/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "p3ap/monge.hpp"

namespace p3ap {

SwapResult swap_values(const LatinRectangle& sol, int r, int q, int layer,
                       const CostArray* costs) {
  if (r >= q) throw InputError("swap needs r < q");
  if (r < 0 || q >= sol.n()) throw InputError("swap value out of range");
  if (layer < 0 || layer >= sol.p()) throw InputError("swap layer out of range");

  int col_r = -1;
  int col_q = -1;
  for (int j = 0; j < sol.n(); ++j) {
    if (sol(layer, j) == r) col_r = j;
    if (sol(layer, j) == q) col_q = j;
  }
  if (col_r < 0 || col_q < 0)
    throw InputError("swap values must both occur in the row");

  SwapResult out{sol.with_entry(layer, col_r, q).with_entry(layer, col_q, r),
                 false, std::nullopt};
  out.feasible = out.rectangle.check().feasible;
  if (costs != nullptr) {
    if (costs->n() != sol.n() || costs->p() != sol.p())
      throw InputError("dimension mismatch between swap and cost array");
    const CostArray& c = *costs;
    out.delta_cost = c(q, col_r, layer) + c(r, col_q, layer) -
                     c(r, col_r, layer) - c(q, col_q, layer);
  }
  return out;
}

int bandwidth(const PartialLatinSquare& sol) {
  int widest = 0;
  for (int i = 0; i < sol.n(); ++i)
    for (int j = 0; j < sol.n(); ++j)
      if (sol.filled(i, j)) widest = std::max(widest, std::abs(i - j));
  return widest;
}

int bandwidth(const LatinRectangle& sol) {
  int widest = 0;
  for (int k = 0; k < sol.p(); ++k)
    for (int j = 0; j < sol.n(); ++j)
      widest = std::max(widest, std::abs(sol(k, j) - j));
  return widest;
}

NormalizeResult band_normalize(const PartialLatinSquare& sol,
                               const CostArray& costs) {
  const int n = sol.n();
  const int p = sol.p();
  if (costs.n() != n || costs.p() != p)
    throw InputError("dimension mismatch between solution and cost array");
  if (!is_layered_monge(costs))
    throw InputError("band normalization requires a layered Monge array");
  const auto report = sol.check();
  if (!report.feasible) throw InputError("infeasible solution: " + report.violation);

  std::vector<int> cell(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cell[static_cast<std::size_t>(i) * n + j] = sol(i, j);
  const auto at = [&](int i, int j) -> int& {
    return cell[static_cast<std::size_t>(i) * n + j];
  };
  const auto empty = [&](int i, int j) {
    return at(i, j) == PartialLatinSquare::kEmpty;
  };

  const long max_exchanges = 2L * n * n * p;
  int exchanges = 0;
  for (;;) {
    int offset = -1, pi = 0, pj = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!empty(i, j) && std::abs(i - j) > offset) {
          offset = std::abs(i - j);
          pi = i;
          pj = j;
        }
      }
    }
    if (offset <= band_limit(p)) break;
    if (exchanges >= max_exchanges)
      throw InternalError("band normalization did not terminate");

    const int k = at(pi, pj);
    // Partner (q, r) with the same layer in the quadrant facing the
    // diagonal; the pivot and partner move to the two cross cells.
    bool moved = false;
    if (pj > pi) {
      for (int q = pi + 1; q < n && !moved; ++q) {
        for (int r = 0; r < pj && !moved; ++r) {
          if (at(q, r) == k && empty(pi, r) && empty(q, pj)) {
            at(pi, pj) = at(q, r) = PartialLatinSquare::kEmpty;
            at(pi, r) = at(q, pj) = k;
            moved = true;
          }
        }
      }
    } else {
      for (int q = 0; q < pi && !moved; ++q) {
        for (int r = pj + 1; r < n && !moved; ++r) {
          if (at(q, r) == k && empty(q, pj) && empty(pi, r)) {
            at(pi, pj) = at(q, r) = PartialLatinSquare::kEmpty;
            at(q, pj) = at(pi, r) = k;
            moved = true;
          }
        }
      }
    }
    if (!moved) {
      throw InternalError("no exchange partner for pivot (" +
                          std::to_string(pi + 1) + ", " +
                          std::to_string(pj + 1) + ") at offset " +
                          std::to_string(offset));
    }
    ++exchanges;
  }
  return {PartialLatinSquare(n, p, std::move(cell)), exchanges};
}

LatinRectangle band_normalize(const LatinRectangle& sol,
                              const CostArray& costs) {
  return to_latin_rectangle(
      band_normalize(to_partial_latin_square(sol), costs).solution);
}

BlockPartition block_decompose(const LatinRectangle& sol) {
  const auto report = sol.check();
  if (!report.feasible) throw InputError("infeasible solution: " + report.violation);

  const int n = sol.n();
  BlockPartition blocks;
  std::vector<bool> seen(n, false);
  int distinct = 0;
  int from = 0;
  for (int col = 0; col < n; ++col) {
    for (int k = 0; k < sol.p(); ++k) {
      const int v = sol(k, col);
      if (!seen[v]) {
        seen[v] = true;
        ++distinct;
      }
    }
    if (distinct != col - from + 1) continue;

    Block b;
    b.from = from;
    b.to = col;
    for (int v = 0; v < n; ++v) {
      if (seen[v]) {
        b.integers.push_back(v);
        seen[v] = false;
      }
    }
    b.normalized = b.integers.front() == from && b.integers.back() == col;
    if (b.width() == 1 && sol.p() >= 2)
      throw InternalError("width-1 block in a rectangle with p >= 2");
    blocks.push_back(std::move(b));
    distinct = 0;
    from = col + 1;
  }
  return blocks;
}

bool has_crossing_property(const LatinRectangle& sol, const Block& block) {
  if (!block.normalized)
    throw InputError("crossing property is defined for normalized blocks");
  const int j = block.from;
  const int m = block.width();
  for (int t = 1; t < m; ++t) {
    bool high = false;
    bool low = false;
    for (int k = 0; k < sol.p(); ++k) {
      for (int col = j; col < j + t; ++col) high |= sol(k, col) > j + t - 1;
      for (int col = j + m - t; col < j + m; ++col) low |= sol(k, col) < j + m - t;
    }
    if (!high || !low) return false;
  }
  return true;
}

bool is_two_three_normalized(const BlockPartition& blocks) {
  return std::all_of(blocks.begin(), blocks.end(), [](const Block& b) {
    return b.normalized && (b.width() == 2 || b.width() == 3);
  });
}

}  // namespace p3ap
