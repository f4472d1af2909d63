#pragma once

// Directed graphs stored as out-neighbor sets, with breadth-first distances,
// enumeration of every shortest path and a seedable random generator.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rivercross {

using Vertex = std::size_t;

/// Vertices are 0..n-1. Each out-neighbor list is kept sorted and free of
/// duplicates.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n) {}

  explicit Digraph(std::vector<std::vector<Vertex>> adjacency) : out_(std::move(adjacency)) {
    for (auto& nbrs : out_) {
      for (Vertex v : nbrs)
        if (v >= out_.size()) throw std::out_of_range("edge target outside vertex range");
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
  }

  std::size_t size() const noexcept { return out_.size(); }

  void add_edge(Vertex from, Vertex to) {
    check(from);
    check(to);
    auto& nbrs = out_[from];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), to);
    if (it == nbrs.end() || *it != to) nbrs.insert(it, to);
  }

  bool has_edge(Vertex from, Vertex to) const {
    check(from);
    const auto& nbrs = out_[from];
    return std::binary_search(nbrs.begin(), nbrs.end(), to);
  }

  std::span<const Vertex> out_neighbors(Vertex v) const {
    check(v);
    return out_[v];
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& nbrs : out_) n += nbrs.size();
    return n;
  }

  Digraph reversed() const {
    Digraph r(size());
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : out_[u]) r.out_[v].push_back(u);
    return r;  // each list is filled in ascending u order
  }

  bool operator==(const Digraph&) const = default;

 private:
  void check(Vertex v) const {
    if (v >= out_.size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  std::vector<std::vector<Vertex>> out_;
};

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Breadth-first edge counts from `source`; kUnreachable where unreachable.
inline std::vector<std::size_t> bfs_distances(const Digraph& g, Vertex source) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.out_neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

/// All edges have unit weight, so breadth-first search gives shortest distances.
inline std::optional<std::size_t> shortest_distance(const Digraph& g, Vertex s, Vertex t) {
  if (t >= g.size()) throw std::out_of_range("target vertex out of range");
  const auto dist = bfs_distances(g, s);
  if (dist[t] == kUnreachable) return std::nullopt;
  return dist[t];
}

using VertexPath = std::vector<Vertex>;

/// Every shortest path between two vertices, sorted lexicographically.
struct PathList {
  std::size_t length = 0;
  std::vector<VertexPath> paths;

  bool operator==(const PathList&) const = default;
};

/// Enumerates all shortest s->t paths. Distances to t are computed on the
/// reversed graph; the depth-first walk then only follows edges that bring it
/// one step closer to t, so it never explores a dead end. Neighbors are
/// visited in ascending order, which yields lexicographic output.
inline std::optional<PathList> all_shortest_paths(const Digraph& g, Vertex s, Vertex t) {
  if (s >= g.size() || t >= g.size()) throw std::out_of_range("vertex out of range");
  const auto to_target = bfs_distances(g.reversed(), t);
  if (to_target[s] == kUnreachable) return std::nullopt;

  PathList result;
  result.length = to_target[s];
  VertexPath current{s};
  // Explicit stack of (vertex, next neighbor slot) frames.
  std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
  while (!stack.empty()) {
    auto& [u, slot] = stack.back();
    if (u == t && to_target[u] == 0) {
      result.paths.push_back(current);
      stack.pop_back();
      current.pop_back();
      continue;
    }
    const auto nbrs = g.out_neighbors(u);
    bool descended = false;
    while (slot < nbrs.size()) {
      const Vertex v = nbrs[slot++];
      if (to_target[v] != kUnreachable && to_target[v] + 1 == to_target[u]) {
        current.push_back(v);
        stack.emplace_back(v, 0);
        descended = true;
        break;
      }
    }
    if (!descended) {
      stack.pop_back();
      current.pop_back();
    }
  }
  return result;
}

/// Random digraph on n vertices; each ordered pair (i, j), i != j, is an edge
/// with probability p. The generator is std::mt19937_64 seeded with `seed`;
/// each pair in row-major order consumes one 64-bit draw, whose top 53 bits
/// form a uniform double in [0, 1). The output is identical on every platform.
inline Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_digraph needs at least 2 vertices");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace rivercross
