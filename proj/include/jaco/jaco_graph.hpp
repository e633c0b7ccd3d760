#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jaco/errors.hpp"
#include "jaco/simple_graph.hpp"

namespace jaco {

// f(x) = m x + c over the naturals, with m, c >= 0.
struct LinearFunction {
  std::uint64_t m = 1;
  std::uint64_t c = 0;

  // Exact f(x); throws Overflow when the value does not fit in 64 bits.
  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(m, x, &out) || __builtin_add_overflow(out, c, &out))
      throw Overflow("f(x) = " + std::to_string(m) + "x + " + std::to_string(c) +
                     " overflows at x = " + std::to_string(x));
    return out;
  }

  bool is_identity() const { return m == 1 && c == 0; }

  friend bool operator==(const LinearFunction &, const LinearFunction &) = default;
};

using Arc = std::pair<Vertex, Vertex>;

// Finite directed Jaco graph J_n(f(x)) together with its degree tables.
// Instances built by build_jaco satisfy the arc rule by construction; ones
// assembled with from_arcs are arbitrary oriented graphs that the verify_*
// functions can audit.
class JacoGraph {
public:
  // Any set of arcs on 1..n without self-loops or antiparallel pairs.
  static JacoGraph from_arcs(LinearFunction f, std::size_t n, std::vector<Arc> arcs) {
    if (n == 0)
      throw InvalidArgument("Jaco graph order must be at least 1");
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    JacoGraph j(f, n);
    for (auto [tail, head] : arcs) {
      if (tail < 1 || tail > n || head < 1 || head > n)
        throw InvalidArgument("arc (" + std::to_string(tail) + "," +
                              std::to_string(head) + ") outside 1.." + std::to_string(n));
      if (tail == head)
        throw InvalidArgument("self-loop arc at vertex " + std::to_string(tail));
      if (std::binary_search(arcs.begin(), arcs.end(), Arc{head, tail}))
        throw InvalidArgument("antiparallel arcs between " + std::to_string(tail) +
                              " and " + std::to_string(head));
      j.add_arc(tail, head);
    }
    for (auto &row : j.in_)
      std::sort(row.begin(), row.end());
    return j;
  }

  const LinearFunction &function() const { return f_; }
  std::size_t order() const { return out_.size(); }

  std::size_t in_degree(Vertex v) const { return in_[index(v)].size(); }
  std::size_t out_degree(Vertex v) const { return out_[index(v)].size(); }
  // d(v) = d+(v) + d-(v)
  std::size_t degree(Vertex v) const { return in_degree(v) + out_degree(v); }

  const std::vector<Vertex> &out_neighbors(Vertex v) const { return out_[index(v)]; }
  const std::vector<Vertex> &in_neighbors(Vertex v) const { return in_[index(v)]; }

  bool has_arc(Vertex tail, Vertex head) const {
    const auto &row = out_[index(tail)];
    return std::binary_search(row.begin(), row.end(), head);
  }

  std::size_t arc_count() const {
    std::size_t total = 0;
    for (const auto &row : out_)
      total += row.size();
    return total;
  }

  // Arcs sorted lexicographically.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count());
    for (Vertex t = 1; t <= order(); ++t)
      for (Vertex h : out_[t - 1])
        out.emplace_back(t, h);
    return out;
  }

  // f(i) + i - d-(v_i): the highest head index v_i may reach.
  std::int64_t reach(Vertex i) const {
    const auto fi = f_(i);
    return static_cast<std::int64_t>(std::min<std::uint64_t>(fi, INT64_MAX / 2)) +
           static_cast<std::int64_t>(i) - static_cast<std::int64_t>(in_degree(i));
  }

  // J*_n: the simple graph obtained by forgetting orientation.
  SimpleGraph underlying() const { return SimpleGraph::from_edges(order(), arcs()); }

  friend bool operator==(const JacoGraph &a, const JacoGraph &b) {
    return a.f_ == b.f_ && a.out_ == b.out_;
  }

private:
  JacoGraph(LinearFunction f, std::size_t n) : f_(f), out_(n), in_(n) {}

  std::size_t index(Vertex v) const {
    if (v < 1 || v > order())
      throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(order()));
    return v - 1;
  }

  void add_arc(Vertex tail, Vertex head) {
    out_[tail - 1].push_back(head);
    in_[head - 1].push_back(tail);
  }

  LinearFunction f_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;

  friend JacoGraph build_jaco(LinearFunction f, std::size_t n);
};

// Sequential construction: visiting i = 1..n in order, d-(v_i) is already
// final, and v_i gets arcs to v_{i+1} .. v_{min(f(i) + i - d-(v_i), n)}.
inline JacoGraph build_jaco(LinearFunction f, std::size_t n) {
  if (n == 0)
    throw InvalidArgument("Jaco graph order must be at least 1");
  JacoGraph j(f, n);
  std::vector<std::size_t> in_degree(n, 0);
  for (Vertex i = 1; i <= n; ++i) {
    const auto fi = std::min<std::uint64_t>(f(i), INT64_MAX / 2);
    const std::int64_t reach = static_cast<std::int64_t>(fi) + static_cast<std::int64_t>(i) -
                               static_cast<std::int64_t>(in_degree[i - 1]);
    const Vertex last = reach < 0 ? 0 : std::min<Vertex>(static_cast<Vertex>(reach), n);
    if (last <= i)
      continue;
    auto &row = j.out_[i - 1];
    row.reserve(last - i);
    for (Vertex head = i + 1; head <= last; ++head) {
      row.push_back(head);
      ++in_degree[head - 1];
    }
  }
  for (Vertex h = 1; h <= n; ++h)
    j.in_[h - 1].reserve(in_degree[h - 1]);
  for (Vertex t = 1; t <= n; ++t)
    for (Vertex h : j.out_[t - 1])
      j.in_[h - 1].push_back(t);
  return j;
}

// True iff for every pair i < j <= n: (v_i, v_j) is an arc exactly when
// f(i) + i - d-(v_i) >= j, with d- read from the graph itself. Arcs with a
// tail above the head also fail.
inline bool verify_definition_fixed_point(const JacoGraph &j) {
  const std::size_t n = j.order();
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex h : j.out_neighbors(i))
      if (h < i)
        return false;
    const std::int64_t reach = j.reach(i);
    // Out-neighbors must be exactly i+1 .. min(reach, n).
    const Vertex last = reach <= static_cast<std::int64_t>(i)
                            ? i
                            : std::min<Vertex>(static_cast<Vertex>(reach), n);
    const auto &row = j.out_neighbors(i);
    if (row.size() != last - i)
      return false;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != i + 1 + k)
        return false;
  }
  return true;
}

struct PropertyCheck {
  bool passed = true;
  std::string counterexample;
};

struct PropertyReport {
  PropertyCheck tail_precedes_head;       // (ii)
  PropertyCheck in_neighbors_contiguous;  // (iii)
  PropertyCheck degree_matches_function;  // (iv), fully realized vertices only
  // Vertices whose out-reach stays within 1..n, i.e. those (iv) was checked on.
  std::size_t realized_vertices = 0;

  bool all_passed() const {
    return tail_precedes_head.passed && in_neighbors_contiguous.passed &&
           degree_matches_function.passed;
  }
};

inline PropertyReport verify_fundamental_properties(const JacoGraph &j) {
  PropertyReport report;
  const std::size_t n = j.order();
  auto fail = [](PropertyCheck &check, std::string what) {
    if (check.passed) {
      check.passed = false;
      check.counterexample = std::move(what);
    }
  };

  for (Vertex t = 1; t <= n; ++t)
    for (Vertex h : j.out_neighbors(t))
      if (t >= h)
        fail(report.tail_precedes_head,
             "arc (" + std::to_string(t) + "," + std::to_string(h) + ")");

  for (Vertex h = 1; h <= n; ++h) {
    const auto &tails = j.in_neighbors(h);
    if (tails.empty())
      continue;
    const Vertex lowest = tails.front();
    const bool contiguous =
        lowest < h && tails.size() == h - lowest && tails.back() == h - 1;
    if (!contiguous)
      fail(report.in_neighbors_contiguous,
           "in-neighbors of v" + std::to_string(h) + " are not v" +
               std::to_string(lowest) + "..v" + std::to_string(h - 1));
  }

  for (Vertex k = 1; k <= n; ++k) {
    if (j.reach(k) > static_cast<std::int64_t>(n))
      continue;
    ++report.realized_vertices;
    if (j.degree(k) != j.function()(k))
      fail(report.degree_matches_function,
           "d(v" + std::to_string(k) + ") = " + std::to_string(j.degree(k)) +
               " but f(" + std::to_string(k) + ") = " +
               std::to_string(j.function()(k)));
  }
  return report;
}

struct JaconianInfo {
  std::size_t max_degree = 0;
  std::vector<Vertex> jaconian_set;
  Vertex prime_index = 1;
  // Hope vertices are prime_index + 1 .. hope_last; empty when prime_index == n.
  Vertex hope_first = 2;
  Vertex hope_last = 1;

  std::size_t hope_size() const { return hope_last + 1 - hope_first; }
};

// The Jaconian set holds the vertices of maximum degree; the prime Jaconian
// vertex is its lowest-indexed member.
inline JaconianInfo jaconian_info(const JacoGraph &j) {
  JaconianInfo info;
  for (Vertex v = 1; v <= j.order(); ++v)
    info.max_degree = std::max(info.max_degree, j.degree(v));
  for (Vertex v = 1; v <= j.order(); ++v)
    if (j.degree(v) == info.max_degree)
      info.jaconian_set.push_back(v);
  info.prime_index = info.jaconian_set.front();
  info.hope_first = info.prime_index + 1;
  info.hope_last = j.order();
  return info;
}

// Subgraph of J*_n induced by the vertices above the prime Jaconian vertex,
// relabeled from 1. Order 0 when the prime Jaconian vertex is v_n.
inline SimpleGraph hope_graph(const JacoGraph &j) {
  const JaconianInfo info = jaconian_info(j);
  const Vertex offset = info.prime_index;
  std::vector<Edge> edges;
  for (Vertex t = info.hope_first; t <= info.hope_last; ++t)
    for (Vertex h : j.out_neighbors(t))
      if (h > offset)
        edges.emplace_back(t - offset, h - offset);
  return SimpleGraph::from_edges(info.hope_size(), edges);
}

inline std::vector<std::size_t> component_structure(const JacoGraph &j) {
  return component_orders(j.underlying());
}

} // namespace jaco
