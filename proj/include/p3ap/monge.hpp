// Monge-structure predicates, distribution arrays and cost transformations
// that leave the set of optimal solutions unchanged.
#ifndef P3AP_MONGE_HPP_
#define P3AP_MONGE_HPP_

#include <optional>

#include "p3ap/core.hpp"

namespace p3ap {

// Nonnegative n x n x p density p_{ijk}.
class DensityArray {
 public:
  DensityArray() = default;
  // Throws InputError if any entry is negative.
  explicit DensityArray(CostArray values);

  int n() const { return values_.n(); }
  int p() const { return values_.p(); }
  Cost operator()(int i, int j, int k) const { return values_(i, j, k); }
  const CostArray& values() const { return values_; }

  friend bool operator==(const DensityArray&, const DensityArray&) = default;

 private:
  CostArray values_;
};

// Additive terms a_{ij} (n x n), b_{ik} (n x p), d_{jk} (n x p).
struct DecompositionTerms {
  IntMatrix a;
  IntMatrix b;
  IntMatrix d;

  static DecompositionTerms zero(int n, int p);
};

struct ShiftedInstance {
  CostArray costs;
  // Amount by which every feasible solution's objective moves.
  Cost constant = 0;
};

// m_{ij} + m_{kl} <= m_{il} + m_{kj} for all i < k, j < l. Uses the
// adjacent 2x2 criterion. Throws InputError for a non-square matrix.
bool is_monge_matrix(const IntMatrix& m);

// Same test for a rectangular matrix.
bool is_monge_rectangular(const IntMatrix& m);

// Every k-plane is a Monge matrix.
bool is_layered_monge(const CostArray& c);

// Every two-dimensional subarray obtained by fixing one index is Monge.
bool is_monge_array(const CostArray& c);

// c_{ijk} = -sum_{i'<=i, j'<=j, k'<=k} p_{i'j'k'}. Throws InputError when an
// intermediate sum leaves the 64-bit range.
CostArray build_distribution_array(const DensityArray& density);

// c'_{ijk} = c_{ijk} + a_{ij} + b_{ik} + d_{jk}. For p < n the a-term must be
// zero.
ShiftedInstance apply_decomposable_shift(const CostArray& c,
                                         const DecompositionTerms& terms);

// c~_{ijk} = c_{ijk} + (i + j + k) * m with 1-based i, j, k. `m` defaults to
// max - min of c; smaller values are rejected.
CostArray make_triply_graded(const CostArray& c,
                             std::optional<Cost> m = std::nullopt);

// Nondecreasing (or strictly increasing) along every line in all three
// directions.
bool is_triply_graded(const CostArray& c, bool strict = false);

}  // namespace p3ap

#endif  // P3AP_MONGE_HPP_
