#pragma once

// Walk counting with exact adjacency-matrix powers, and path recovery from the
// symbolic (edge-labelled) adjacency matrix.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rivercross/bigint.hpp"
#include "rivercross/digraph.hpp"

namespace rivercross {

/// Dense n x n matrix of exact non-negative integers.
class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  /// The 0/1 adjacency matrix of g.
  static BigMatrix adjacency(const Digraph& g) {
    BigMatrix a(g.size());
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v : g.out_neighbors(u)) a(u, v) = 1;
    return a;
  }

  static BigMatrix identity(std::size_t n) {
    BigMatrix id(n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    return id;
  }

  std::size_t size() const noexcept { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  bool operator==(const BigMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> cells_;
};

/// P * A where A is the adjacency matrix of g; uses the sparsity of A.
inline BigMatrix times_adjacency(const BigMatrix& p, const Digraph& g) {
  if (p.size() != g.size()) throw std::invalid_argument("matrix and graph sizes differ");
  const std::size_t n = g.size();
  BigMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex l = 0; l < n; ++l) {
      const BigInt& w = p(i, l);
      if (w == 0) continue;
      for (Vertex j : g.out_neighbors(l)) out(i, j) += w;
    }
  return out;
}

/// A^k by repeated multiplication.
inline BigMatrix adjacency_power(const Digraph& g, std::size_t k) {
  BigMatrix p = BigMatrix::identity(g.size());
  for (std::size_t i = 0; i < k; ++i) p = times_adjacency(p, g);
  return p;
}

struct WalkCount {
  std::size_t length = 0;
  BigInt count;

  bool operator==(const WalkCount&) const = default;
};

/// Raises A^k = A^(k-1) * A until the (s, t) entry is first non-zero. That k
/// is the shortest distance and the entry is the number of shortest paths.
/// A shortest walk is simple, so k never needs to exceed n - 1.
inline std::optional<WalkCount> count_shortest_walks(const Digraph& g, Vertex s, Vertex t) {
  if (s >= g.size() || t >= g.size()) throw std::out_of_range("vertex out of range");
  const std::size_t cap = g.size() - 1;
  if (cap == 0) return std::nullopt;
  BigMatrix p = BigMatrix::adjacency(g);
  for (std::size_t k = 1;; ++k) {
    if (p(s, t) != 0) return WalkCount{k, p(s, t)};
    if (k == cap) return std::nullopt;
    p = times_adjacency(p, g);
  }
}

using Edge = std::pair<Vertex, Vertex>;

/// Product of edge labels a_ij, kept as a sorted multiset of edges.
using EdgeMonomial = std::vector<Edge>;

/// Formal sum of edge monomials with positive integer coefficients.
using EdgePolynomial = std::map<EdgeMonomial, BigInt>;

/// Row `s` of S^k, where S is the symbolic adjacency matrix (S_ij = a_ij on
/// edges). Entry j lists, by edge multiset, the walks of length k from s to j.
/// For k = 0 this is the identity row.
inline std::vector<EdgePolynomial> symbolic_power_row(const Digraph& g, Vertex s, std::size_t k) {
  if (s >= g.size()) throw std::out_of_range("vertex out of range");
  std::vector<EdgePolynomial> row(g.size());
  row[s][EdgeMonomial{}] = 1;
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<EdgePolynomial> next(g.size());
    for (Vertex l = 0; l < g.size(); ++l) {
      for (const auto& [mono, coef] : row[l]) {
        for (Vertex j : g.out_neighbors(l)) {
          EdgeMonomial grown = mono;
          const Edge e{l, j};
          grown.insert(std::upper_bound(grown.begin(), grown.end(), e), e);
          next[j][std::move(grown)] += coef;
        }
      }
    }
    row = std::move(next);
  }
  return row;
}

/// Chains a squarefree edge set into the unique s->t path it describes.
inline VertexPath decode_edge_monomial(const EdgeMonomial& mono, Vertex s, Vertex t) {
  std::map<Vertex, Vertex> next;
  for (const auto& [u, v] : mono)
    if (!next.emplace(u, v).second)
      throw std::logic_error("edge monomial is not a simple chain: vertex has two out-edges");
  VertexPath path{s};
  Vertex at = s;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    auto it = next.find(at);
    if (it == next.end()) throw std::logic_error("edge monomial does not chain from the source");
    at = it->second;
    path.push_back(at);
  }
  if (at != t) throw std::logic_error("edge monomial chain does not end at the target");
  return path;
}

/// Every shortest s->t path, recovered from the monomials of (S^k)_{s,t} at
/// the minimal k. Much slower than all_shortest_paths; kept as a cross-check.
inline std::optional<PathList> symbolic_shortest_paths(const Digraph& g, Vertex s, Vertex t) {
  if (s >= g.size() || t >= g.size()) throw std::out_of_range("vertex out of range");
  if (s == t) return PathList{0, {{s}}};
  const auto walks = count_shortest_walks(g, s, t);
  if (!walks) return std::nullopt;
  const auto row = symbolic_power_row(g, s, walks->length);
  PathList out{walks->length, {}};
  for (const auto& [mono, coef] : row[t]) {
    if (coef != 1) throw std::logic_error("shortest-path monomial has coefficient other than 1");
    out.paths.push_back(decode_edge_monomial(mono, s, t));
  }
  std::sort(out.paths.begin(), out.paths.end());
  return out;
}

}  // namespace rivercross
