#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "jaco/big_count.hpp"
#include "jaco/errors.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/simple_graph.hpp"

namespace jaco {

// G ~>_{vu} H: disjoint union of g and h plus the bridge edge vu.
struct JointSpec {
  SimpleGraph g;
  SimpleGraph h;
  Vertex v = 1;
  Vertex u = 1;

  bool trivial() const { return v == 1 && u == 1; }

  void validate() const {
    if (g.order() == 0 || h.order() == 0)
      throw InvalidArgument("edge-joint needs two nonempty graphs");
    if (v < 1 || v > g.order())
      throw InvalidArgument("anchor v" + std::to_string(v) + " outside 1.." +
                            std::to_string(g.order()));
    if (u < 1 || u > h.order())
      throw InvalidArgument("anchor u" + std::to_string(u) + " outside 1.." +
                            std::to_string(h.order()));
  }
};

// Vertex y of h becomes y + order(g) in the result.
inline SimpleGraph edge_joint_graph(const JointSpec &spec) {
  spec.validate();
  const std::size_t shift = spec.g.order();
  std::vector<Edge> edges(spec.g.edges());
  edges.reserve(spec.g.size() + spec.h.size() + 1);
  for (auto [a, b] : spec.h.edges())
    edges.emplace_back(a + shift, b + shift);
  edges.emplace_back(spec.v, spec.u + shift);
  return SimpleGraph::from_edges(shift + spec.h.order(), edges);
}

// Summands of Gut(G ~>_{vu} H), grouped by pair type. x ranges over G - v,
// y over H - u, and every cross pair routes through the bridge.
struct JointTerms {
  BigCount gut_g;
  BigCount gut_h;
  BigCount anchor_g;     // sum_x d_G(x) dist_G(x,v): v gained one degree
  BigCount anchor_h;     // sum_y d_H(y) dist_H(y,u)
  BigCount bridge;       // (d_G(v)+1)(d_H(u)+1), the pair {v,u}
  BigCount v_to_h;       // pairs {v, y}
  BigCount g_to_u;       // pairs {x, u}
  BigCount cross;        // pairs {x, y}

  static constexpr std::size_t kCount = 8;

  static constexpr std::array<std::string_view, kCount> names() {
    return {"gut_g", "gut_h", "anchor_g", "anchor_h",
            "bridge", "v_to_h", "g_to_u", "cross"};
  }

  std::array<BigCount, kCount> values() const {
    return {gut_g, gut_h, anchor_g, anchor_h, bridge, v_to_h, g_to_u, cross};
  }

  BigCount total() const {
    BigCount sum;
    for (auto value : values())
      sum += value;
    return sum;
  }
};

namespace detail {

struct AnchoredGraph {
  const SimpleGraph &graph;
  const DistanceMatrix &dist;
  Vertex anchor;

  BigCount degree(Vertex x) const { return graph.degree(x); }
  BigCount distance(Vertex x) const { return dist.finite(x, anchor); }

  // sum_{x != anchor} d(x) * (dist(x, anchor) + extra)
  BigCount weighted_distance_sum(std::uint64_t extra) const {
    BigCount sum;
    for (Vertex x = 1; x <= graph.order(); ++x)
      if (x != anchor)
        sum += degree(x) * (distance(x) + BigCount(extra));
    return sum;
  }
};

inline JointTerms closed_form_terms(const AnchoredGraph &g, const AnchoredGraph &h) {
  JointTerms terms;
  terms.gut_g = gutman_index(g.graph, g.dist);
  terms.gut_h = gutman_index(h.graph, h.dist);
  terms.anchor_g = g.weighted_distance_sum(0);
  terms.anchor_h = h.weighted_distance_sum(0);
  const BigCount dv = g.degree(g.anchor) + BigCount(1);
  const BigCount du = h.degree(h.anchor) + BigCount(1);
  terms.bridge = dv * du;
  terms.v_to_h = dv * h.weighted_distance_sum(1);
  terms.g_to_u = du * g.weighted_distance_sum(1);
  for (Vertex x = 1; x <= g.graph.order(); ++x) {
    if (x == g.anchor)
      continue;
    for (Vertex y = 1; y <= h.graph.order(); ++y) {
      if (y == h.anchor)
        continue;
      terms.cross += g.degree(x) * h.degree(y) *
                     (g.distance(x) + h.distance(y) + BigCount(1));
    }
  }
  return terms;
}

inline void require_connected(const SimpleGraph &graph, std::string_view which) {
  if (!is_connected(graph))
    throw DisconnectedGraph(std::string(which) + " is disconnected");
}

} // namespace detail

inline JointTerms closed_form_joint_terms(const JointSpec &spec) {
  spec.validate();
  detail::require_connected(spec.g, "G");
  detail::require_connected(spec.h, "H");
  const DistanceMatrix dg = all_pairs_distances(spec.g);
  const DistanceMatrix dh = all_pairs_distances(spec.h);
  return detail::closed_form_terms({spec.g, dg, spec.v}, {spec.h, dh, spec.u});
}

// Exact Gut(G ~>_{vu} H) from data of G and H alone, for any anchors.
inline BigCount closed_form_joint_gutman(const JointSpec &spec) {
  return closed_form_joint_terms(spec).total();
}

namespace detail {

inline void require_trivial_joint_inputs(const JacoGraph &jn, const JacoGraph &jm) {
  if (!jn.function().is_identity() || !jm.function().is_identity())
    throw InvalidArgument("the edge-joint formula is stated for f(x) = x only");
  if (!(jn.order() >= jm.order() && jm.order() >= 2))
    throw InvalidArgument("the edge-joint formula needs n >= m >= 2, got n = " +
                          std::to_string(jn.order()) +
                          ", m = " + std::to_string(jm.order()));
}

// The printed formula for the trivial joint, anchors v_1 and u_1. It has no
// (v_k, u_1) block and a literal 4 for the bridge pair.
inline JointTerms printed_terms(const AnchoredGraph &g, const AnchoredGraph &h) {
  JointTerms terms;
  terms.gut_g = gutman_index(g.graph, g.dist);
  terms.gut_h = gutman_index(h.graph, h.dist);
  terms.anchor_g = g.weighted_distance_sum(0);
  terms.anchor_h = h.weighted_distance_sum(0);
  terms.bridge = 4;
  terms.v_to_h = (g.degree(1) + BigCount(1)) * h.weighted_distance_sum(1);
  for (Vertex k = 2; k <= g.graph.order(); ++k)
    for (Vertex t = 2; t <= h.graph.order(); ++t)
      terms.cross += g.degree(k) * h.degree(t) *
                     (g.distance(k) + h.distance(t) + BigCount(1));
  return terms;
}

} // namespace detail

inline JointTerms joint_printed_terms(const JacoGraph &jn, const JacoGraph &jm) {
  detail::require_trivial_joint_inputs(jn, jm);
  const SimpleGraph g = jn.underlying();
  const SimpleGraph h = jm.underlying();
  const DistanceMatrix dg = all_pairs_distances(g);
  const DistanceMatrix dh = all_pairs_distances(h);
  return detail::printed_terms({g, dg, 1}, {h, dh, 1});
}

inline BigCount joint_printed_rhs(const JacoGraph &jn, const JacoGraph &jm) {
  return joint_printed_terms(jn, jm).total();
}

// (d_H(u_1) + 1) * sum_{k>=2} d_G(v_k) (dist_G(v_1, v_k) + 1): the pairs
// (v_k, u_1) that the printed formula leaves out.
inline BigCount omitted_pair_block(const SimpleGraph &g, const SimpleGraph &h) {
  const DistanceMatrix dg = all_pairs_distances(g);
  BigCount sum;
  for (Vertex k = 2; k <= g.order(); ++k)
    sum += BigCount(g.degree(k)) * (BigCount(dg.finite(1, k)) + BigCount(1));
  return (BigCount(h.degree(1)) + BigCount(1)) * sum;
}

struct JointTrace {
  std::size_t n = 0;
  std::size_t m = 0;
  Vertex v = 1;
  Vertex u = 1;
  BigCount closed_value;
  BigCount direct_value;
  JointTerms closed;
  // Present only for trivial anchors with n >= m.
  std::optional<JointTerms> printed;
  std::optional<BigCount> paper_value;
  std::optional<SignedCount> delta_paper;
  std::optional<BigCount> missing_block;

  bool closed_matches() const { return closed_value == direct_value; }

  bool paper_plus_block_matches() const {
    return paper_value && missing_block &&
           *paper_value + *missing_block == direct_value;
  }

  std::array<SignedCount, JointTerms::kCount> term_deltas() const {
    std::array<SignedCount, JointTerms::kCount> out{};
    if (!printed)
      return out;
    const auto p = printed->values();
    const auto c = closed.values();
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = difference(p[k], c[k]);
    return out;
  }
};

namespace detail {

struct PreparedJaco {
  JacoGraph directed;
  SimpleGraph graph;
  DistanceMatrix dist;

  explicit PreparedJaco(std::size_t order)
      : directed(build_jaco({1, 0}, order)), graph(directed.underlying()),
        dist(all_pairs_distances(graph)) {}
};

inline JointTrace trace_joint(const PreparedJaco &g, const PreparedJaco &h, Vertex v,
                              Vertex u) {
  JointSpec spec{g.graph, h.graph, v, u};
  spec.validate();
  JointTrace row;
  row.n = g.graph.order();
  row.m = h.graph.order();
  row.v = v;
  row.u = u;
  row.closed = closed_form_terms({g.graph, g.dist, v}, {h.graph, h.dist, u});
  row.closed_value = row.closed.total();
  row.direct_value = gutman_index(edge_joint_graph(spec));
  if (spec.trivial() && row.n >= row.m) {
    row.printed = printed_terms({g.graph, g.dist, 1}, {h.graph, h.dist, 1});
    row.paper_value = row.printed->total();
    row.delta_paper = difference(*row.paper_value, row.direct_value);
    row.missing_block = omitted_pair_block(g.graph, h.graph);
  }
  return row;
}

} // namespace detail

// J*_n(x) ~>_{v u} J*_m(x) for a single pair of orders.
inline JointTrace trace_jaco_joint(std::size_t n, std::size_t m, Vertex v = 1,
                                   Vertex u = 1) {
  if (n < 1 || m < 1)
    throw InvalidArgument("joint orders must be at least 1");
  const detail::PreparedJaco g(n), h(m);
  return detail::trace_joint(g, h, v, u);
}

// Trivial joints on the grid 2 <= m <= n <= n_max, m <= m_max, ordered by (n, m).
inline std::vector<JointTrace> joint_delta_report(std::size_t n_max, std::size_t m_max) {
  if (n_max < 2 || m_max < 2)
    throw InvalidArgument("joint grid bounds must be at least 2");
  std::vector<detail::PreparedJaco> graphs;
  for (std::size_t k = 1; k <= n_max; ++k)
    graphs.emplace_back(k);
  std::vector<JointTrace> rows;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (std::size_t m = 2; m <= std::min(n, m_max); ++m)
      rows.push_back(detail::trace_joint(graphs[n - 1], graphs[m - 1], 1, 1));
  return rows;
}

// Same grid, with per_pair anchor pairs (v, u) != (1, 1) drawn from a
// generator seeded with seed.
inline std::vector<JointTrace> nontrivial_anchor_audit(std::size_t n_max,
                                                       std::size_t m_max,
                                                       std::size_t per_pair,
                                                       std::uint64_t seed) {
  if (n_max < 2 || m_max < 2)
    throw InvalidArgument("joint grid bounds must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<detail::PreparedJaco> graphs;
  for (std::size_t k = 1; k <= n_max; ++k)
    graphs.emplace_back(k);
  std::vector<JointTrace> rows;
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (std::size_t m = 2; m <= std::min(n, m_max); ++m) {
      std::uniform_int_distribution<Vertex> pick_v(1, n), pick_u(1, m);
      for (std::size_t draw = 0; draw < per_pair; ++draw) {
        Vertex v = 1, u = 1;
        while (v == 1 && u == 1) {
          v = pick_v(rng);
          u = pick_u(rng);
        }
        rows.push_back(detail::trace_joint(graphs[n - 1], graphs[m - 1], v, u));
      }
    }
  }
  return rows;
}

} // namespace jaco
