// Structural procedures on solutions: value swaps inside a Latin-rectangle
// row, bandwidth of the partial-Latin-square form, the exchange procedure
// that pulls every filled cell into the band |i - j| <= 2p - 2 without
// raising the cost on layered Monge arrays, and block decomposition.
#ifndef P3AP_STRUCTURE_HPP_
#define P3AP_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "p3ap/core.hpp"

namespace p3ap {

struct SwapResult {
  LatinRectangle rectangle;
  bool feasible = false;
  std::optional<Cost> delta_cost;  // set when a cost array is supplied
};

// Exchanges the positions of values r < q (0-based) within row `layer`.
// Throws InputError when r >= q or an index is out of range.
SwapResult swap_values(const LatinRectangle& sol, int r, int q, int layer,
                       const CostArray* costs = nullptr);

// max |i - j| over filled cells; 0 for an empty square.
int bandwidth(const PartialLatinSquare& sol);
int bandwidth(const LatinRectangle& sol);

// Largest offset |i - j| the band theorem allows for p layers.
inline int band_limit(int p) { return 2 * p - 2; }

struct NormalizeResult {
  PartialLatinSquare solution;
  int exchanges = 0;
};

// Repeatedly takes the filled cell of maximal offset (smallest row, then
// column) and trades it, together with a same-layer partner cell of the
// opposite quadrant, for the two cross cells. Requires a layered Monge cost
// array and a feasible solution; never raises the cost. Throws InternalError
// if no exchange partner exists beyond the band.
NormalizeResult band_normalize(const PartialLatinSquare& sol,
                               const CostArray& costs);
LatinRectangle band_normalize(const LatinRectangle& sol,
                              const CostArray& costs);

// Inclusive 0-based column interval with the set of values it contains.
struct Block {
  int from = 0;
  int to = 0;
  std::vector<int> integers;  // sorted, 0-based
  bool normalized = false;    // integers == {from, ..., to}

  int width() const { return to - from + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

using BlockPartition = std::vector<Block>;

// Minimal blocks by a greedy left-to-right scan. Requires a feasible
// rectangle.
BlockPartition block_decompose(const LatinRectangle& sol);

// For a normalized block on columns j..j+m-1 and every 1 <= t < m: the first
// t columns hold a value above j+t-1 and the last t columns hold a value
// below j+m-t.
bool has_crossing_property(const LatinRectangle& sol, const Block& block);

// All blocks normalized with width 2 or 3.
bool is_two_three_normalized(const BlockPartition& blocks);

}  // namespace p3ap

#endif  // P3AP_STRUCTURE_HPP_
