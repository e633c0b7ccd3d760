#pragma once

// Brute-force reference used only by the tests. It shares no code with the
// library: adjacency lists, one queue BFS per queried pair, and plain 64-bit
// sums.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

struct Graph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> adj; // 0-based
};

inline Graph make(std::size_t n, const EdgeList &edges_1based) {
  Graph g{n, std::vector<std::vector<std::size_t>>(n)};
  for (auto [a, b] : edges_1based) {
    bool seen = false;
    for (auto w : g.adj[a - 1])
      seen = seen || w == b - 1;
    if (seen)
      continue;
    g.adj[a - 1].push_back(b - 1);
    g.adj[b - 1].push_back(a - 1);
  }
  return g;
}

inline std::optional<std::uint64_t> distance(const Graph &g, std::size_t a, std::size_t b) {
  std::vector<long> dist(g.n, -1);
  std::queue<std::size_t> q;
  dist[a] = 0;
  q.push(a);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    if (v == b)
      return static_cast<std::uint64_t>(dist[v]);
    for (auto w : g.adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return std::nullopt;
}

inline std::uint64_t gutman(const Graph &g) {
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = a + 1; b < g.n; ++b) {
      auto d = distance(g, a, b);
      if (!d)
        throw std::runtime_error("oracle: disconnected");
      total += g.adj[a].size() * g.adj[b].size() * *d;
    }
  return total;
}

inline std::uint64_t wiener(const Graph &g) {
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = a + 1; b < g.n; ++b) {
      auto d = distance(g, a, b);
      if (!d)
        throw std::runtime_error("oracle: disconnected");
      total += *d;
    }
  return total;
}

// Random labelled tree plus a handful of extra edges.
inline EdgeList random_connected(std::mt19937_64 &rng, std::size_t n) {
  EdgeList edges;
  for (std::size_t v = 2; v <= n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(1, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  if (n >= 3) {
    std::uniform_int_distribution<std::size_t> pick(1, n);
    std::uniform_int_distribution<std::size_t> extra(0, n);
    for (std::size_t k = extra(rng); k > 0; --k) {
      auto a = pick(rng), b = pick(rng);
      if (a != b)
        edges.emplace_back(a, b);
    }
  }
  return edges;
}

inline EdgeList cycle(std::size_t n) {
  EdgeList edges;
  for (std::size_t v = 1; v <= n; ++v)
    edges.emplace_back(v, v % n + 1);
  return edges;
}

inline EdgeList complete(std::size_t n) {
  EdgeList edges;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b)
      edges.emplace_back(a, b);
  return edges;
}

inline EdgeList path(std::size_t n) {
  EdgeList edges;
  for (std::size_t v = 1; v < n; ++v)
    edges.emplace_back(v, v + 1);
  return edges;
}

} // namespace oracle
