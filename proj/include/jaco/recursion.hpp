#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "jaco/big_count.hpp"
#include "jaco/errors.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/simple_graph.hpp"

// Gut(J*_{n+1}(x)) from data of J*_n(x).
//
// Pairs of J*_{n+1} split by where the endpoints live: "low" vertices
// v_1..v_i, "hope" vertices v_{i+1}..v_n and the new vertex v_{n+1}, which is
// joined to every hope vertex. Both evaluators below report the same seven
// summands so the printed formula can be compared term by term against the
// exact decomposition.
namespace jaco {

struct RecursionTerms {
  BigCount base;             // Gut(J*_n)
  BigCount cross;            // sum_{k<=i<t} d(v_k) dist(v_k, v_t)
  BigCount hope_degrees;     // sum_{i<t<q} (d(v_t) + d(v_q))
  BigCount hope_constant;    // one per hope pair
  BigCount new_low_distance; // low x v_{n+1}, distance part
  BigCount new_low_degrees;  // low x v_{n+1}, degree part
  BigCount new_hope;         // hope x v_{n+1}

  static constexpr std::size_t kCount = 7;

  static constexpr std::array<std::string_view, kCount> names() {
    return {"base",             "cross",           "hope_degrees", "hope_constant",
            "new_low_distance", "new_low_degrees", "new_hope"};
  }

  std::array<BigCount, kCount> values() const {
    return {base, cross, hope_degrees, hope_constant, new_low_distance,
            new_low_degrees, new_hope};
  }

  BigCount total() const {
    BigCount sum;
    for (auto v : values())
      sum += v;
    return sum;
  }
};

// Pre-computed view of J_n(x) shared by both evaluators.
struct RecursionInput {
  SimpleGraph underlying;
  DistanceMatrix distances;
  // Prime index as read off the extension: n - d-(v_{n+1}) in J_{n+1}.
  Vertex i = 0;
  Vertex jaconian_prime = 0;
};

namespace detail {

inline void require_identity_rule(const JacoGraph &jn) {
  if (!jn.function().is_identity())
    throw InvalidArgument("the recursion is stated for f(x) = x only");
  if (jn.order() < 2)
    throw InvalidArgument("the recursion needs n >= 2");
}

} // namespace detail

// In J_{n+1}(x) the tails into v_{n+1} must be exactly v_{i+1}..v_n; returns
// that i. Throws StructureAssumptionViolated when the in-neighborhood is not
// such a block.
inline Vertex extension_prime_index(const JacoGraph &jn_plus_one) {
  const std::size_t n = jn_plus_one.order() - 1;
  const auto &tails = jn_plus_one.in_neighbors(n + 1);
  if (tails.empty() || tails.back() != n || tails.size() != n + 1 - tails.front())
    throw StructureAssumptionViolated(
        "in-neighbors of v" + std::to_string(n + 1) +
        " do not form a block ending at v" + std::to_string(n));
  return n - tails.size();
}

inline RecursionInput prepare_recursion(const JacoGraph &jn,
                                        const JacoGraph &jn_plus_one) {
  detail::require_identity_rule(jn);
  if (jn_plus_one.order() != jn.order() + 1 || jn_plus_one.function() != jn.function())
    throw InvalidArgument("extension graph must be J_{n+1} under the same rule");
  RecursionInput in;
  in.underlying = jn.underlying();
  if (!is_connected(in.underlying))
    throw DisconnectedGraph("J*_" + std::to_string(jn.order()) + " is disconnected");
  in.distances = all_pairs_distances(in.underlying);
  in.i = extension_prime_index(jn_plus_one);
  in.jaconian_prime = jaconian_info(jn).prime_index;
  return in;
}

namespace detail {

// Summands shared by both evaluators.
inline void shared_terms(const RecursionInput &in, RecursionTerms &terms) {
  const auto &g = in.underlying;
  const auto &dist = in.distances;
  const std::size_t n = g.order();
  const Vertex i = in.i;
  terms.base = gutman_index(g, dist);
  for (Vertex k = 1; k <= i; ++k)
    for (Vertex t = i + 1; t <= n; ++t)
      terms.cross += BigCount(g.degree(k)) * BigCount(dist.finite(k, t));
  for (Vertex t = i + 1; t < n; ++t)
    for (Vertex q = t + 1; q <= n; ++q)
      terms.hope_degrees += BigCount(g.degree(t)) + BigCount(g.degree(q));
}

} // namespace detail

// The right-hand side exactly as printed, all quantities in J*_n:
//   Gut(J*_n) + sum_{k<=i} sum_{t>i} d(v_k) dist(v_k,v_t)
//   + sum_{i<t<q} (d(v_t) + d(v_q))
//   + (n-i) (sum_{k<=i} d(v_k) dist(v_k,v_n) + sum_{t>i} d(v_t))
//   + (n-i-1) + i(n-i)
inline RecursionTerms printed_recursion_terms(const RecursionInput &in) {
  RecursionTerms terms;
  detail::shared_terms(in, terms);
  const auto &g = in.underlying;
  const std::size_t n = g.order();
  const Vertex i = in.i;
  const BigCount width = n - i;

  BigCount low;
  for (Vertex k = 1; k <= i; ++k)
    low += BigCount(g.degree(k)) * BigCount(in.distances.finite(k, n));
  terms.new_low_distance = width * low;

  BigCount hope;
  for (Vertex t = i + 1; t <= n; ++t)
    hope += g.degree(t);
  terms.new_hope = width * hope;

  terms.hope_constant = BigCount(n - i) - BigCount(1);
  terms.new_low_degrees = BigCount(i) * width;
  return terms;
}

// Exact decomposition of Gut(J*_{n+1}). Requires the hope vertices to be
// pairwise adjacent in J*_n, so v_{n+1} creates no shortcut and every hope
// pair stays at distance 1:
//   hope pairs      (d_t+1)(d_q+1)        = d_t d_q + d_t + d_q + 1
//   low x v_{n+1}   d_k (n-i) (1 + min_{t>i} dist(v_k, v_t))
//   hope x v_{n+1}  (d_t+1) (n-i)
inline RecursionTerms exact_recursion_terms(const RecursionInput &in) {
  const auto &g = in.underlying;
  const std::size_t n = g.order();
  const Vertex i = in.i;
  for (Vertex t = i + 1; t <= n; ++t)
    for (Vertex q = t + 1; q <= n; ++q)
      if (!g.has_edge(t, q))
        throw StructureAssumptionViolated("hope vertices v" + std::to_string(t) +
                                          " and v" + std::to_string(q) +
                                          " are not adjacent in J*_" +
                                          std::to_string(n));

  RecursionTerms terms;
  detail::shared_terms(in, terms);
  const BigCount width = n - i;

  BigCount low_distance, low_degrees;
  for (Vertex k = 1; k <= i; ++k) {
    std::uint32_t nearest = std::numeric_limits<std::uint32_t>::max();
    for (Vertex t = i + 1; t <= n; ++t)
      nearest = std::min(nearest, in.distances.finite(k, t));
    low_distance += BigCount(g.degree(k)) * BigCount(nearest);
    low_degrees += g.degree(k);
  }
  terms.new_low_distance = width * low_distance;
  terms.new_low_degrees = width * low_degrees;

  BigCount hope;
  for (Vertex t = i + 1; t <= n; ++t)
    hope += BigCount(g.degree(t)) + BigCount(1);
  terms.new_hope = width * hope;

  const std::size_t h = n - i;
  terms.hope_constant = BigCount(h) * BigCount(h - 1);
  terms.hope_constant = BigCount::from_raw(terms.hope_constant.raw() / 2);
  return terms;
}

inline BigCount recursion_printed_rhs(const JacoGraph &jn) {
  detail::require_identity_rule(jn);
  const JacoGraph next = build_jaco(jn.function(), jn.order() + 1);
  return printed_recursion_terms(prepare_recursion(jn, next)).total();
}

inline BigCount recursion_exact_rhs(const JacoGraph &jn) {
  detail::require_identity_rule(jn);
  const JacoGraph next = build_jaco(jn.function(), jn.order() + 1);
  return exact_recursion_terms(prepare_recursion(jn, next)).total();
}

struct RecursionTrace {
  std::size_t n = 0;
  Vertex i = 0;
  // Whether the lowest maximum-degree vertex of J_n matches i.
  bool prime_index_agrees = true;
  RecursionTerms printed;
  RecursionTerms exact;
  BigCount paper_value;
  BigCount exact_value;
  BigCount direct_value;
  SignedCount delta_paper; // paper - direct
  SignedCount delta_exact; // exact - direct

  // printed - exact, per summand.
  std::array<SignedCount, RecursionTerms::kCount> term_deltas() const {
    std::array<SignedCount, RecursionTerms::kCount> out{};
    const auto p = printed.values();
    const auto e = exact.values();
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = difference(p[k], e[k]);
    return out;
  }
};

inline RecursionTrace trace_recursion(const JacoGraph &jn, const JacoGraph &jn_plus_one,
                                      BigCount direct) {
  const RecursionInput in = prepare_recursion(jn, jn_plus_one);
  RecursionTrace row;
  row.n = jn.order();
  row.i = in.i;
  row.prime_index_agrees = in.i == in.jaconian_prime;
  row.printed = printed_recursion_terms(in);
  row.exact = exact_recursion_terms(in);
  row.paper_value = row.printed.total();
  row.exact_value = row.exact.total();
  row.direct_value = direct;
  row.delta_paper = difference(row.paper_value, direct);
  row.delta_exact = difference(row.exact_value, direct);
  return row;
}

// One row per n = 2..n_max; the direct column is Gut(J*_{n+1}) computed from
// its own distance matrix.
inline std::vector<RecursionTrace> recursion_delta_report(std::size_t n_max,
                                                          LinearFunction f = {1, 0}) {
  if (!f.is_identity())
    throw InvalidArgument("the recursion is stated for f(x) = x only");
  if (n_max < 2)
    throw InvalidArgument("n_max must be at least 2");
  std::vector<RecursionTrace> rows;
  rows.reserve(n_max - 1);
  JacoGraph current = build_jaco(f, 2);
  for (std::size_t n = 2; n <= n_max; ++n) {
    JacoGraph next = build_jaco(f, n + 1);
    rows.push_back(trace_recursion(current, next, gutman_index(next.underlying())));
    current = std::move(next);
  }
  return rows;
}

} // namespace jaco
