#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jaco/big_count.hpp"
#include "jaco/errors.hpp"

namespace jaco {

// Vertices are 1-based throughout the public API (v_1, ..., v_n).
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite undirected simple graph. Immutable once constructed.
class SimpleGraph {
public:
  SimpleGraph() = default;

  // Builds a graph from an edge list. Duplicates (in either orientation)
  // are merged; edges are stored as sorted pairs (a < b).
  static SimpleGraph from_edges(std::size_t order, std::span<const Edge> edges) {
    SimpleGraph g;
    g.order_ = order;
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 1 || a > order || b < 1 || b > order)
        throw InvalidArgument("edge {" + std::to_string(a) + "," +
                              std::to_string(b) + "} has an endpoint outside 1.." +
                              std::to_string(order));
      if (a == b)
        throw InvalidArgument("self-loop at vertex " + std::to_string(a));
      g.edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.adjacency_.assign(order, {});
    for (auto [a, b] : g.edges_) {
      g.adjacency_[a - 1].push_back(b);
      g.adjacency_[b - 1].push_back(a);
    }
    for (auto &row : g.adjacency_)
      std::sort(row.begin(), row.end());
    return g;
  }

  static SimpleGraph from_edges(std::size_t order,
                                std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge> &edges() const { return edges_; }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  const std::vector<Vertex> &neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v - 1];
  }

  bool has_edge(Vertex a, Vertex b) const {
    const auto &row = neighbors(a);
    check_vertex(b);
    return std::binary_search(row.begin(), row.end(), b);
  }

  void check_vertex(Vertex v) const {
    if (v < 1 || v > order_)
      throw InvalidArgument("vertex " + std::to_string(v) +
                            " outside 1.." + std::to_string(order_));
  }

  friend bool operator==(const SimpleGraph &a, const SimpleGraph &b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// All-pairs unweighted distances. Unreachable pairs carry no value; there is
// no finite stand-in to do arithmetic with.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order)
      : order_(order), dist_(order * order, kUnreachable) {}

  std::size_t order() const { return order_; }

  std::optional<std::uint32_t> at(Vertex a, Vertex b) const {
    const auto d = dist_[index(a, b)];
    if (d == kUnreachable)
      return std::nullopt;
    return d;
  }

  bool reachable(Vertex a, Vertex b) const {
    return dist_[index(a, b)] != kUnreachable;
  }

  // Distance of a pair known to be connected; throws DisconnectedGraph
  // otherwise.
  std::uint32_t finite(Vertex a, Vertex b) const {
    const auto d = dist_[index(a, b)];
    if (d == kUnreachable)
      throw DisconnectedGraph("no path between v" + std::to_string(a) +
                              " and v" + std::to_string(b));
    return d;
  }

  friend bool operator==(const DistanceMatrix &, const DistanceMatrix &) = default;

private:
  static constexpr std::uint32_t kUnreachable =
      std::numeric_limits<std::uint32_t>::max();

  std::size_t index(Vertex a, Vertex b) const {
    if (a < 1 || a > order_ || b < 1 || b > order_)
      throw InvalidArgument("distance query outside 1.." + std::to_string(order_));
    return (a - 1) * order_ + (b - 1);
  }

  void set(Vertex a, Vertex b, std::uint32_t d) { dist_[index(a, b)] = d; }

  std::size_t order_ = 0;
  std::vector<std::uint32_t> dist_;

  friend DistanceMatrix all_pairs_distances(const SimpleGraph &g);
};

// Per-source breadth-first search. Each level is expanded with word-parallel
// bitset unions over the adjacency rows, O(n^3 / 64) overall.
inline DistanceMatrix all_pairs_distances(const SimpleGraph &g) {
  const std::size_t n = g.order();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(n * words, 0);
  for (auto [a, b] : g.edges()) {
    rows[(a - 1) * words + (b - 1) / 64] |= std::uint64_t{1} << ((b - 1) % 64);
    rows[(b - 1) * words + (a - 1) / 64] |= std::uint64_t{1} << ((a - 1) % 64);
  }

  DistanceMatrix out(n);
  std::vector<std::uint64_t> visited(words), frontier(words), next(words);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    visited[s / 64] |= std::uint64_t{1} << (s % 64);
    frontier[s / 64] |= std::uint64_t{1} << (s % 64);
    out.set(s + 1, s + 1, 0);
    for (std::uint32_t level = 1;; ++level) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w) {
        for (auto bits = frontier[w]; bits != 0; bits &= bits - 1) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
          const std::uint64_t *row = &rows[v * words];
          for (std::size_t k = 0; k < words; ++k)
            next[k] |= row[k];
        }
      }
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] &= ~visited[w];
        visited[w] |= next[w];
        any = any || next[w] != 0;
        for (auto bits = next[w]; bits != 0; bits &= bits - 1)
          out.set(s + 1, w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)) + 1,
                  level);
      }
      if (!any)
        break;
      frontier.swap(next);
    }
  }
  return out;
}

// Single-source BFS; entry k - 1 is the distance to vertex k, empty when
// unreachable.
inline std::vector<std::optional<std::uint32_t>> bfs_distances(const SimpleGraph &g,
                                                               Vertex source) {
  g.check_vertex(source);
  std::vector<std::optional<std::uint32_t>> dist(g.order());
  std::vector<Vertex> queue{source};
  dist[source - 1] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w - 1]) {
        dist[w - 1] = *dist[v - 1] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Orders of the connected components, descending.
inline std::vector<std::size_t> component_orders(const SimpleGraph &g) {
  std::vector<std::size_t> orders;
  std::vector<bool> seen(g.order() + 1, false);
  std::vector<Vertex> stack;
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (seen[root])
      continue;
    std::size_t count = 0;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++count;
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    orders.push_back(count);
  }
  std::sort(orders.begin(), orders.end(), std::greater<>());
  return orders;
}

inline bool is_connected(const SimpleGraph &g) {
  return component_orders(g).size() <= 1;
}

// Gut(G) = sum over unordered pairs {a,b} of d(a) d(b) dist(a,b), using a
// precomputed distance matrix of g.
inline BigCount gutman_index(const SimpleGraph &g, const DistanceMatrix &dist) {
  BigCount total;
  for (Vertex a = 1; a <= g.order(); ++a) {
    const BigCount da = g.degree(a);
    for (Vertex b = a + 1; b <= g.order(); ++b) {
      const auto d = dist.at(a, b);
      if (!d)
        throw DisconnectedGraph(
            "the Gutman index is defined only for connected graphs");
      total += da * BigCount(g.degree(b)) * BigCount(*d);
    }
  }
  return total;
}

inline BigCount gutman_index(const SimpleGraph &g) {
  if (!is_connected(g))
    throw DisconnectedGraph("the Gutman index is defined only for connected graphs");
  return gutman_index(g, all_pairs_distances(g));
}

inline BigCount wiener_index(const SimpleGraph &g, const DistanceMatrix &dist) {
  BigCount total;
  for (Vertex a = 1; a <= g.order(); ++a) {
    for (Vertex b = a + 1; b <= g.order(); ++b) {
      const auto d = dist.at(a, b);
      if (!d)
        throw DisconnectedGraph("the Wiener index is defined only for connected graphs");
      total += BigCount(*d);
    }
  }
  return total;
}

inline BigCount wiener_index(const SimpleGraph &g) {
  if (!is_connected(g))
    throw DisconnectedGraph("the Wiener index is defined only for connected graphs");
  return wiener_index(g, all_pairs_distances(g));
}

struct InducedSubgraph {
  SimpleGraph graph;
  // original[k - 1] is the source index of vertex k in graph.
  std::vector<Vertex> original;
};

// Subgraph induced by the given vertices, relabeled 1..|set| in ascending
// order of their original indices.
inline InducedSubgraph induced_subgraph(const SimpleGraph &g,
                                        std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.original.assign(vertices.begin(), vertices.end());
  for (Vertex v : out.original)
    g.check_vertex(v);
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()),
                     out.original.end());

  std::vector<Vertex> relabel(g.order() + 1, 0);
  for (std::size_t k = 0; k < out.original.size(); ++k)
    relabel[out.original[k]] = k + 1;

  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    if (relabel[a] != 0 && relabel[b] != 0)
      edges.emplace_back(relabel[a], relabel[b]);
  out.graph = SimpleGraph::from_edges(out.original.size(), edges);
  return out;
}

inline bool is_complete(const SimpleGraph &g) {
  const std::size_t n = g.order();
  return g.size() == n * (n == 0 ? 0 : n - 1) / 2;
}

} // namespace jaco
