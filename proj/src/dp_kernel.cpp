#include "p3ap/dp_kernel.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

namespace p3ap::dp {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t sum = a + b;
  return sum < a ? std::numeric_limits<std::uint64_t>::max() : sum;
}

// Accumulates candidates into one state per signature.
class StateTable {
 public:
  explicit StateTable(bool track_ties) : track_ties_(track_ties) {}

  void offer(const Signature& sig, Cost cost, OrderKey key,
             const Placement& placement, std::uint64_t ways) {
    auto [it, inserted] = index_.try_emplace(sig, states_.size());
    if (inserted) {
      State s;
      s.signature = sig;
      s.cost = cost;
      s.key = key;
      s.placement = placement;
      s.ways = ways;
      if (track_ties_) s.ties.push_back({key, placement});
      states_.push_back(std::move(s));
      return;
    }
    State& s = states_[it->second];
    if (cost < s.cost || (cost == s.cost && key < s.key)) {
      const bool tie = cost == s.cost;
      s.cost = cost;
      s.key = key;
      s.placement = placement;
      if (!tie) {
        s.ways = ways;
        s.ties.clear();
      } else {
        s.ways = saturating_add(s.ways, ways);
      }
      if (track_ties_) s.ties.push_back({key, placement});
    } else if (cost == s.cost) {
      s.ways = saturating_add(s.ways, ways);
      if (track_ties_) s.ties.push_back({key, placement});
    }
  }

  // Folds another table in, as if its candidates had been offered here.
  void absorb(StateTable&& other) {
    for (State& o : other.states_) {
      auto [it, inserted] = index_.try_emplace(o.signature, states_.size());
      if (inserted) {
        states_.push_back(std::move(o));
        continue;
      }
      State& s = states_[it->second];
      if (o.cost < s.cost) {
        s = std::move(o);
      } else if (o.cost == s.cost) {
        if (o.key < s.key) {
          s.key = o.key;
          s.placement = o.placement;
        }
        s.ways = saturating_add(s.ways, o.ways);
        s.ties.insert(s.ties.end(), o.ties.begin(), o.ties.end());
      }
    }
  }

  std::vector<State> take_sorted() && {
    for (State& s : states_) {
      std::sort(s.ties.begin(), s.ties.end(),
                [](const Edge& a, const Edge& b) { return a.key < b.key; });
    }
    std::sort(states_.begin(), states_.end(),
              [](const State& a, const State& b) { return a.key < b.key; });
    return std::move(states_);
  }

 private:
  bool track_ties_;
  std::vector<State> states_;
  std::unordered_map<Signature, std::size_t, SignatureHash> index_;
};

// Enumerates the placements of row `row` on top of `state` and offers each
// resulting state to `table`. Returns the number of candidates produced.
std::uint64_t expand_state(const Window& w, const CostArray& c,
                           const State& state, std::uint32_t pred, int row,
                           StateTable& table) {
  const int p = w.p();
  const int width = w.width();
  const ColumnMask full = w.full();

  std::array<ColumnMask, kMaxWindow> ext{};
  for (int s = 0; s + 1 < width; ++s) ext[s] = state.signature.columns[s];
  ext[width - 1] = w.column(row, width - 1) < w.n() ? ColumnMask{0} : full;

  // The leftmost column leaves the window after this row and can take at
  // most one more layer from it.
  const ColumnMask missing = static_cast<ColumnMask>(full & ~ext[0]);
  if (std::popcount(missing) > 1) return 0;
  const int forced_layer = missing != 0 ? std::countr_zero(missing) : -1;

  Placement placement{};
  std::uint64_t ordinal = 0;
  std::uint32_t used_slots = 0;

  const auto emit = [&](Cost row_cost) {
    Signature next;
    for (int s = 1; s < width; ++s) {
      ColumnMask m = ext[s];
      for (int k = 0; k < p; ++k)
        if (placement[k] == s) m = static_cast<ColumnMask>(m | (1u << k));
      next.columns[s - 1] = m;
    }
    table.offer(next, state.cost + row_cost, OrderKey{pred, ordinal++},
                placement, state.ways);
  };

  const auto place = [&](auto&& self, int k, Cost row_cost) -> void {
    if (k == p) {
      emit(row_cost);
      return;
    }
    const ColumnMask bit = static_cast<ColumnMask>(1u << k);
    const int last = k == forced_layer ? 0 : width - 1;
    for (int s = 0; s <= last; ++s) {
      if ((used_slots >> s) & 1u) continue;
      if (ext[s] & bit) continue;
      placement[k] = static_cast<std::int8_t>(s);
      used_slots |= 1u << s;
      self(self, k + 1, row_cost + c(row, w.column(row, s), k));
      used_slots &= ~(1u << s);
    }
  };
  place(place, 0, 0);
  return ordinal;
}

}  // namespace

std::size_t SignatureHash::operator()(const Signature& s) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (ColumnMask m : s.columns) {
    h ^= m;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 32));
}

Window::Window(int n, int p) : n_(n), p_(p) {}

Signature Window::initial() const {
  // Before row 0 the live columns are -reach .. reach-1 (0-based), i.e. the
  // extended window of row 0 without its last slot.
  Signature s;
  for (int slot = 0; slot + 1 < width(); ++slot) {
    const int col = column(0, slot);
    s.columns[slot] = (col < 0 || col >= n_) ? full() : ColumnMask{0};
  }
  return s;
}

bool Window::complete(const Signature& s) const {
  for (int slot = 0; slot + 1 < width(); ++slot)
    if (s.columns[slot] != full()) return false;
  return true;
}

StepResult expand_row_serial(const Window& window, const CostArray& c,
                             const std::vector<State>& prev, int row,
                             bool track_ties) {
  StateTable table(track_ties);
  std::uint64_t candidates = 0;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    candidates += expand_state(window, c, prev[i], static_cast<std::uint32_t>(i),
                               row, table);
  }
  return {std::move(table).take_sorted(), candidates};
}

StepResult expand_row_parallel(const Window& window, const CostArray& c,
                               const std::vector<State>& prev, int row,
                               bool track_ties, int threads) {
  threads = std::max(1, threads);
  const std::size_t count = prev.size();
  std::vector<StateTable> tables(threads, StateTable(track_ties));
  std::uint64_t candidates = 0;

#pragma omp parallel num_threads(threads) reduction(+ : candidates)
  {
    const int t = omp_get_thread_num();
    const int team = omp_get_num_threads();
    const std::size_t begin = count * t / team;
    const std::size_t end = count * (t + 1) / team;
    for (std::size_t i = begin; i < end; ++i) {
      candidates += expand_state(window, c, prev[i],
                                 static_cast<std::uint32_t>(i), row, tables[t]);
    }
  }

  // Slices cover increasing predecessor ranges, so folding them in order
  // reproduces the serial first-encountered rule.
  StateTable merged = std::move(tables.front());
  for (std::size_t t = 1; t < tables.size(); ++t)
    merged.absorb(std::move(tables[t]));
  return {std::move(merged).take_sorted(), candidates};
}

}  // namespace p3ap::dp
