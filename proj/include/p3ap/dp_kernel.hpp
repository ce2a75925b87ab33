// Row-expansion kernels of the banded dynamic program.
//
// After row r (0-based) has been filled, only columns r-2p+3 .. r+2p-2 can
// still receive entries, so a state is summarized by the layer sets of those
// 4p-4 columns (its Signature). Expanding row r+1 works on the extended
// window of 4p-3 columns r-2p+3 .. r+2p-1 (previous signature plus one new
// column on the right). The leftmost window column then leaves for good and
// must hold all p layers.
//
// Two kernels produce identical state lists: a plain serial reference and an
// OpenMP version that expands disjoint slices of the predecessor states and
// merges them in slice order.
#ifndef P3AP_DP_KERNEL_HPP_
#define P3AP_DP_KERNEL_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "p3ap/core.hpp"
#include "p3ap/solvers.hpp"

namespace p3ap::dp {

using ColumnMask = std::uint16_t;

// Width of the extended row window at the largest supported p.
inline constexpr int kMaxWindow = 4 * kDpMaxLayers - 3;

// Layer sets of the 4p-4 live columns, left to right. Columns outside 1..n
// are stored as full sets so that nothing is ever placed there.
struct Signature {
  std::array<ColumnMask, kMaxWindow - 1> columns{};
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept;
};

// Extended-window slot chosen for each layer in the current row.
using Placement = std::array<std::int8_t, kDpMaxLayers>;

// Position in the deterministic expansion order: predecessor index, then
// the rank of the placement (layers in increasing order, slots left to
// right).
struct OrderKey {
  std::uint32_t pred = 0;
  std::uint64_t ordinal = 0;
  friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
};

struct Edge {
  OrderKey key;
  Placement placement{};
};

struct State {
  Signature signature;
  Cost cost = 0;
  OrderKey key;          // producer of the retained (cheapest, first) path
  Placement placement{};
  std::uint64_t ways = 1;    // optimal paths into this state, saturating
  std::vector<Edge> ties;    // every optimal producer, when tracking ties
};

// Geometry shared by every step of one solve.
class Window {
 public:
  Window(int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  int reach() const { return 2 * p_ - 2; }
  int width() const { return 4 * p_ - 3; }  // extended window
  ColumnMask full() const { return static_cast<ColumnMask>((1u << p_) - 1); }

  // Column of extended-window slot `slot` while filling row `row`.
  int column(int row, int slot) const { return row - reach() + slot; }

  // Signature before row 0 is filled.
  Signature initial() const;
  // True when every live column holds all p layers.
  bool complete(const Signature& s) const;

 private:
  int n_;
  int p_;
};

struct StepResult {
  std::vector<State> states;  // sorted by key
  std::uint64_t candidates = 0;
};

// Expands every state of `prev` by all feasible placements of row `row`.
// `track_ties` keeps every optimal producer and path counts.
StepResult expand_row_serial(const Window& window, const CostArray& c,
                             const std::vector<State>& prev, int row,
                             bool track_ties);

StepResult expand_row_parallel(const Window& window, const CostArray& c,
                               const std::vector<State>& prev, int row,
                               bool track_ties, int threads);

}  // namespace p3ap::dp

#endif  // P3AP_DP_KERNEL_HPP_
