#pragma once

// The missionaries-and-cannibals state graph and the search-based solver.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "rivercross/digraph.hpp"
#include "rivercross/model.hpp"

namespace rivercross {

/// Bijection between legal bank states and graph vertices. Vertex 0 is the
/// initial state, the last vertex is the goal, everything else follows
/// lexicographic (m, c, b) order.
class StateIndex {
 public:
  StateIndex() = default;
  explicit StateIndex(std::vector<BankState> states) : states_(std::move(states)) {
    for (Vertex v = 0; v < states_.size(); ++v) vertex_.emplace(states_[v], v);
  }

  std::size_t size() const noexcept { return states_.size(); }
  const BankState& state(Vertex v) const { return states_.at(v); }
  const std::vector<BankState>& states() const noexcept { return states_; }

  std::optional<Vertex> vertex(const BankState& s) const {
    auto it = vertex_.find(s);
    if (it == vertex_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<BankState> states_;
  std::map<BankState, Vertex> vertex_;
};

struct McGraph {
  Digraph graph;
  StateIndex index;

  Vertex source() const { return 0; }
  Vertex sink() const { return graph.size() - 1; }
};

/// Builds the state graph. Only the initial state needs to be legal, so
/// family members with no cannibals are accepted here.
inline McGraph mc_graph(const McParams& p) {
  const BankState start = initial_state(p);
  const BankState goal = goal_state();
  if (!is_legal_state(p, start)) throw InvalidParams(ParamError::IllegalInitialState);

  std::vector<BankState> middle;
  for (int m = 0; m <= p.missionaries; ++m)
    for (int c = 0; c <= p.cannibals; ++c)
      for (bool side : {false, true}) {
        const BankState s{m, c, side};
        if (s != start && s != goal && is_legal_state(p, s)) middle.push_back(s);
      }
  std::sort(middle.begin(), middle.end());

  std::vector<BankState> order;
  order.reserve(middle.size() + 2);
  order.push_back(start);
  order.insert(order.end(), middle.begin(), middle.end());
  order.push_back(goal);

  McGraph out{Digraph(order.size()), StateIndex(std::move(order))};
  for (Vertex u = 0; u < out.index.size(); ++u)
    for (const auto& [mv, next] : legal_moves(p, out.index.state(u)))
      out.graph.add_edge(u, *out.index.vertex(next));
  return out;
}

struct McSolutions {
  std::size_t crossings = 0;
  std::vector<SolutionPath> solutions;
};

/// All shortest solutions, sorted lexicographically by state sequence, or
/// nullopt when the goal is unreachable.
inline std::optional<McSolutions> solve_mc(const McParams& p) {
  require_valid(p);
  const McGraph g = mc_graph(p);
  auto paths = all_shortest_paths(g.graph, g.source(), g.sink());
  if (!paths) return std::nullopt;
  McSolutions out{paths->length, {}};
  out.solutions.reserve(paths->paths.size());
  for (const auto& vp : paths->paths) {
    SolutionPath sol;
    for (Vertex v : vp) sol.states.push_back(g.index.state(v));
    out.solutions.push_back(std::move(sol));
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

}  // namespace rivercross
