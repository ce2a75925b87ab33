#include "p3ap/monge.hpp"

#include <functional>
#include <string>

namespace p3ap {

namespace {

using Wide = __int128;

// Adjacent 2x2 criterion on an accessor-defined rows x cols matrix.
bool adjacent_monge(int rows, int cols,
                    const std::function<Cost(int, int)>& at) {
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      const Wide lhs = Wide{at(r, c)} + at(r + 1, c + 1);
      const Wide rhs = Wide{at(r, c + 1)} + at(r + 1, c);
      if (lhs > rhs) return false;
    }
  }
  return true;
}

Cost checked_add(Cost a, Cost b) {
  Cost out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw InputError(
        "distribution array overflows 64-bit costs; reduce the density "
        "scale (for the counterexample: a smaller a) or use wider "
        "arithmetic");
  }
  return out;
}

}  // namespace

DensityArray::DensityArray(CostArray values) : values_(std::move(values)) {
  for (Cost v : values_.entries())
    if (v < 0) throw InputError("density entries must be nonnegative");
}

DecompositionTerms DecompositionTerms::zero(int n, int p) {
  return {IntMatrix(n, n), IntMatrix(n, p), IntMatrix(n, p)};
}

bool is_monge_rectangular(const IntMatrix& m) {
  return adjacent_monge(m.rows(), m.cols(),
                        [&](int r, int c) { return m(r, c); });
}

bool is_monge_matrix(const IntMatrix& m) {
  if (!m.square()) throw InputError("Monge matrix check needs a square matrix");
  return is_monge_rectangular(m);
}

bool is_layered_monge(const CostArray& c) {
  for (int k = 0; k < c.p(); ++k) {
    if (!adjacent_monge(c.n(), c.n(),
                        [&](int i, int j) { return c(i, j, k); }))
      return false;
  }
  return true;
}

bool is_monge_array(const CostArray& c) {
  if (!is_layered_monge(c)) return false;
  for (int j = 0; j < c.n(); ++j) {
    if (!adjacent_monge(c.n(), c.p(),
                        [&](int i, int k) { return c(i, j, k); }))
      return false;
  }
  for (int i = 0; i < c.n(); ++i) {
    if (!adjacent_monge(c.n(), c.p(),
                        [&](int j, int k) { return c(i, j, k); }))
      return false;
  }
  return true;
}

CostArray build_distribution_array(const DensityArray& density) {
  const int n = density.n();
  const int p = density.p();
  std::vector<Cost> s = density.values().entries();
  const auto at = [&](int i, int j, int k) -> Cost& {
    return s[(static_cast<std::size_t>(k) * n + i) * n + j];
  };
  // Cumulate along i, then j, then k.
  for (int k = 0; k < p; ++k)
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j) at(i, j, k) = checked_add(at(i, j, k), at(i - 1, j, k));
  for (int k = 0; k < p; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 1; j < n; ++j) at(i, j, k) = checked_add(at(i, j, k), at(i, j - 1, k));
  for (int k = 1; k < p; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at(i, j, k) = checked_add(at(i, j, k), at(i, j, k - 1));
  for (Cost& v : s) v = -v;
  return CostArray(n, p, std::move(s));
}

ShiftedInstance apply_decomposable_shift(const CostArray& c,
                                         const DecompositionTerms& terms) {
  const int n = c.n();
  const int p = c.p();
  const auto shape = [](const IntMatrix& m, int r, int cols) {
    return m.rows() == r && m.cols() == cols;
  };
  if (!shape(terms.a, n, n) || !shape(terms.b, n, p) || !shape(terms.d, n, p))
    throw InputError("decomposition terms need shapes n x n, n x p, n x p");
  if (p < n && !terms.a.all_zero())
    throw InputError("A-term valid only for p = n");

  CostArray shifted = CostArray::from_function(n, p, [&](int i, int j, int k) {
    return c(i, j, k) + terms.a(i, j) + terms.b(i, k) + terms.d(j, k);
  });
  // Each (i, j) is covered once when p = n; each (i, k) and (j, k) is
  // covered once for every p.
  const Cost constant = terms.a.sum() + terms.b.sum() + terms.d.sum();
  return {std::move(shifted), constant};
}

CostArray make_triply_graded(const CostArray& c, std::optional<Cost> m) {
  const Cost spread = c.max_entry() - c.min_entry();
  const Cost step = m.value_or(spread);
  if (step < spread) {
    throw InputError("grading step m = " + std::to_string(step) +
                     " is below the cost spread " + std::to_string(spread));
  }
  return CostArray::from_function(c.n(), c.p(), [&](int i, int j, int k) {
    return c(i, j, k) + static_cast<Cost>(i + j + k + 3) * step;
  });
}

bool is_triply_graded(const CostArray& c, bool strict) {
  const auto ok = [strict](Cost lo, Cost hi) {
    return strict ? lo < hi : lo <= hi;
  };
  for (int k = 0; k < c.p(); ++k) {
    for (int i = 0; i < c.n(); ++i) {
      for (int j = 0; j < c.n(); ++j) {
        if (i + 1 < c.n() && !ok(c(i, j, k), c(i + 1, j, k))) return false;
        if (j + 1 < c.n() && !ok(c(i, j, k), c(i, j + 1, k))) return false;
        if (k + 1 < c.p() && !ok(c(i, j, k), c(i, j, k + 1))) return false;
      }
    }
  }
  return true;
}

}  // namespace p3ap
