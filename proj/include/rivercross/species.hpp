#pragma once

// Generic k-species river crossing puzzles: each bank must satisfy a
// population predicate and each boat load a load predicate.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rivercross/digraph.hpp"
#include "rivercross/model.hpp"

namespace rivercross {

using Population = std::vector<int>;

struct SpeciesPuzzle {
  /// Bank predicate: population on one bank and whether the boat is there.
  using BankPredicate = std::function<bool(std::span<const int>, bool boat_present)>;
  /// Load predicate; only consulted for loads with 0 < sum <= capacity.
  using LoadPredicate = std::function<bool(std::span<const int>)>;

  std::vector<std::string> names;
  Population initial;
  int boat_capacity = 0;
  BankPredicate bank_ok;
  LoadPredicate load_ok;

  std::size_t species() const noexcept { return initial.size(); }
};

/// A population vector on the starting bank together with the boat side.
struct SpeciesState {
  Population amounts;
  bool boat_on_start = true;

  auto operator<=>(const SpeciesState&) const = default;
};

/// Iterates every vector 0 <= v <= bound componentwise, in lexicographic order.
template <typename Fn>
void for_each_in_box(const Population& bound, Fn&& fn) {
  Population v(bound.size(), 0);
  while (true) {
    fn(std::as_const(v));
    std::size_t i = v.size();
    while (i > 0 && v[i - 1] >= bound[i - 1]) v[--i] = 0;
    if (i == 0) return;
    ++v[i - 1];
  }
}

inline Population complement(const SpeciesPuzzle& sp, std::span<const int> amounts) {
  Population far(sp.species());
  for (std::size_t j = 0; j < far.size(); ++j) far[j] = sp.initial[j] - amounts[j];
  return far;
}

inline bool in_box(const SpeciesPuzzle& sp, std::span<const int> amounts) {
  if (amounts.size() != sp.species()) return false;
  for (std::size_t j = 0; j < amounts.size(); ++j)
    if (amounts[j] < 0 || amounts[j] > sp.initial[j]) return false;
  return true;
}

/// Starting-bank amounts are legal on both banks for the given boat side.
inline bool is_legal(const SpeciesPuzzle& sp, std::span<const int> amounts, bool boat_on_start) {
  if (!in_box(sp, amounts)) return false;
  const Population far = complement(sp, amounts);
  return sp.bank_ok(amounts, boat_on_start) && sp.bank_ok(far, !boat_on_start);
}

/// Loads with 0 < sum <= capacity accepted by the load predicate, in
/// lexicographic order.
inline std::vector<Population> legal_loads(const SpeciesPuzzle& sp) {
  Population bound(sp.species());
  for (std::size_t j = 0; j < bound.size(); ++j)
    bound[j] = std::min(sp.initial[j], sp.boat_capacity);
  std::vector<Population> loads;
  for_each_in_box(bound, [&](const Population& b) {
    const int total = std::accumulate(b.begin(), b.end(), 0);
    if (total > 0 && total <= sp.boat_capacity && sp.load_ok(b)) loads.push_back(b);
  });
  return loads;
}

class SpeciesIndex {
 public:
  SpeciesIndex() = default;
  explicit SpeciesIndex(std::vector<SpeciesState> states) : states_(std::move(states)) {
    for (Vertex v = 0; v < states_.size(); ++v) vertex_.emplace(states_[v], v);
  }
  std::size_t size() const noexcept { return states_.size(); }
  const SpeciesState& state(Vertex v) const { return states_.at(v); }
  std::optional<Vertex> vertex(const SpeciesState& s) const {
    auto it = vertex_.find(s);
    if (it == vertex_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<SpeciesState> states_;
  std::map<SpeciesState, Vertex> vertex_;
};

struct SpeciesGraph {
  Digraph graph;
  SpeciesIndex index;

  Vertex source() const { return 0; }
  Vertex sink() const { return graph.size() - 1; }
};

/// Same vertex ordering as mc_graph: initial state, the rest in lexicographic
/// order, then the goal (everyone across, boat on the far bank).
inline SpeciesGraph species_graph(const SpeciesPuzzle& sp) {
  if (!is_legal(sp, sp.initial, true)) throw std::invalid_argument("initial position is not legal");
  const SpeciesState start{sp.initial, true};
  const SpeciesState goal{Population(sp.species(), 0), false};

  std::vector<SpeciesState> order{start};
  for_each_in_box(sp.initial, [&](const Population& a) {
    for (bool side : {false, true}) {
      SpeciesState s{a, side};
      if (s != start && s != goal && is_legal(sp, a, side)) order.push_back(std::move(s));
    }
  });
  order.push_back(goal);

  const auto loads = legal_loads(sp);
  SpeciesGraph out{Digraph(order.size()), SpeciesIndex(std::move(order))};
  for (Vertex u = 0; u < out.index.size(); ++u) {
    const SpeciesState& s = out.index.state(u);
    for (const auto& load : loads) {
      SpeciesState next{s.amounts, !s.boat_on_start};
      for (std::size_t j = 0; j < load.size(); ++j)
        next.amounts[j] += s.boat_on_start ? -load[j] : load[j];
      if (auto v = out.index.vertex(next)) out.graph.add_edge(u, *v);
    }
  }
  return out;
}

/// The missionaries-and-cannibals puzzle in species form (missionaries are
/// species 0). The bank predicate ignores the boat side.
inline SpeciesPuzzle mc_species(const McParams& p) {
  const int d = p.margin;
  return SpeciesPuzzle{
      {"missionaries", "cannibals"},
      {p.missionaries, p.cannibals},
      p.boat_capacity,
      [d](std::span<const int> a, bool) { return group_is_safe(a[0], a[1], d); },
      [d](std::span<const int> b) { return group_is_safe(b[0], b[1], d); },
  };
}

/// Wolf, goat and cabbage. The farmer is species 0 and must row, so the boat
/// is always on the farmer's bank; a bank without the boat may not hold the
/// goat together with the wolf or the cabbage.
inline SpeciesPuzzle wolf_goat_cabbage() {
  return SpeciesPuzzle{
      {"farmer", "wolf", "goat", "cabbage"},
      {1, 1, 1, 1},
      2,
      [](std::span<const int> a, bool boat_present) {
        if (boat_present != (a[0] == 1)) return false;
        if (boat_present) return true;
        return !(a[2] > 0 && (a[1] > 0 || a[3] > 0));
      },
      [](std::span<const int> b) { return b[0] == 1; },
  };
}

}  // namespace rivercross
