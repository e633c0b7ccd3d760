#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "jaco/edge_joint.hpp"
#include "jaco/errors.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/recursion.hpp"
#include "jaco/sequences.hpp"

// Text exports. Every integer is written as an exact decimal; rows come out
// in a fixed order so outputs diff cleanly.
namespace jaco::io {

// {"m":M,"c":C,"n":N,"arcs":[[i,j],...]} with arcs sorted lexicographically.
inline std::string to_json(const JacoGraph &j) {
  nlohmann::ordered_json doc;
  doc["m"] = j.function().m;
  doc["c"] = j.function().c;
  doc["n"] = j.order();
  auto arcs = nlohmann::ordered_json::array();
  for (auto [tail, head] : j.arcs())
    arcs.push_back({tail, head});
  doc["arcs"] = std::move(arcs);
  return doc.dump();
}

// Inverse of to_json. The arc set is taken as given, not rebuilt from the rule.
inline JacoGraph from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    LinearFunction f{doc.at("m").get<std::uint64_t>(), doc.at("c").get<std::uint64_t>()};
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<Arc> arcs;
    for (const auto &arc : doc.at("arcs"))
      arcs.emplace_back(arc.at(0).get<Vertex>(), arc.at(1).get<Vertex>());
    return JacoGraph::from_arcs(f, n, std::move(arcs));
  } catch (const nlohmann::json::exception &e) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
  }
}

inline void write_json(std::ostream &os, const JacoGraph &j) { os << to_json(j) << '\n'; }

inline void write_csv(std::ostream &os, const JacoGraph &j) {
  os << "tail,head\n";
  for (auto [tail, head] : j.arcs())
    os << tail << ',' << head << '\n';
}

// Undirected (J*_n, "--") unless directed is set ("->" arcs).
inline void write_dot(std::ostream &os, const JacoGraph &j, bool directed) {
  const auto &f = j.function();
  const std::string_view link = directed ? " -> " : " -- ";
  os << (directed ? "digraph" : "graph") << " J_" << j.order() << " {\n";
  os << "  label=\"f(x) = " << f.m << "x + " << f.c << "\";\n";
  for (Vertex v = 1; v <= j.order(); ++v)
    os << "  v" << v << ";\n";
  for (auto [tail, head] : j.arcs())
    os << "  v" << tail << link << 'v' << head << ";\n";
  os << "}\n";
}

inline constexpr std::string_view kRecursionHeader =
    "n,i,paper_rhs,exact_rhs,direct,delta_paper";

inline void write_recursion_csv(std::ostream &os, const std::vector<RecursionTrace> &rows) {
  os << kRecursionHeader << '\n';
  for (const auto &r : rows)
    os << r.n << ',' << r.i << ',' << r.paper_value << ',' << r.exact_value << ','
       << r.direct_value << ',' << r.delta_paper << '\n';
}

inline void write_recursion_json(std::ostream &os, const std::vector<RecursionTrace> &rows) {
  os << '[';
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto &r = rows[k];
    os << (k ? "," : "") << "{\"n\":" << r.n << ",\"i\":" << r.i
       << ",\"paper_rhs\":" << r.paper_value << ",\"exact_rhs\":" << r.exact_value
       << ",\"direct\":" << r.direct_value << ",\"delta_paper\":" << r.delta_paper << '}';
  }
  os << "]\n";
}

// Full per-term breakdown: printed minus exact for each summand.
inline void write_recursion_terms_csv(std::ostream &os,
                                      const std::vector<RecursionTrace> &rows) {
  os << kRecursionHeader << ",prime_index_agrees";
  for (auto name : RecursionTerms::names())
    os << ",delta_" << name;
  os << '\n';
  for (const auto &r : rows) {
    os << r.n << ',' << r.i << ',' << r.paper_value << ',' << r.exact_value << ','
       << r.direct_value << ',' << r.delta_paper << ','
       << (r.prime_index_agrees ? "true" : "false");
    for (auto d : r.term_deltas())
      os << ',' << d;
    os << '\n';
  }
}

inline void write_joint_terms_csv(std::ostream &os, const std::vector<JointTrace> &rows) {
  os << "n,m,paper_rhs,closed_form,direct,delta_paper,missing_block,"
        "paper_plus_block_matches";
  for (auto name : JointTerms::names())
    os << ",delta_" << name;
  os << '\n';
  for (const auto &r : rows) {
    os << r.n << ',' << r.m << ',';
    if (r.paper_value)
      os << *r.paper_value;
    os << ',' << r.closed_value << ',' << r.direct_value << ',';
    if (r.delta_paper)
      os << *r.delta_paper;
    os << ',';
    if (r.missing_block)
      os << *r.missing_block;
    os << ',' << (r.paper_plus_block_matches() ? "true" : "false");
    for (auto d : r.term_deltas())
      os << ',' << d;
    os << '\n';
  }
}

// Single joint row. The printed-formula columns appear only when the printed formula
// applies (trivial anchors, n >= m).
inline void write_joint_csv(std::ostream &os, const JointTrace &r) {
  os << "n,m,vi,uj,direct,closed";
  if (r.paper_value)
    os << ",paper_rhs,delta_paper";
  os << '\n' << r.n << ',' << r.m << ',' << r.v << ',' << r.u << ',' << r.direct_value
     << ',' << r.closed_value;
  if (r.paper_value)
    os << ',' << *r.paper_value << ',' << *r.delta_paper;
  os << '\n';
}

inline void write_joint_json(std::ostream &os, const JointTrace &r) {
  os << "{\"n\":" << r.n << ",\"m\":" << r.m << ",\"vi\":" << r.v << ",\"uj\":" << r.u
     << ",\"direct\":" << r.direct_value << ",\"closed\":" << r.closed_value;
  if (r.paper_value)
    os << ",\"paper_rhs\":" << *r.paper_value << ",\"delta_paper\":" << *r.delta_paper;
  os << "}\n";
}

inline void write_sequence_csv(std::ostream &os, const SequenceTable &table) {
  os << "n,value\n";
  for (const auto &row : table.rows)
    os << row.n << ',' << row.value << '\n';
}

// {"name":[[n,value],...],...} in request order.
inline void write_sequences_json(std::ostream &os, const std::vector<SequenceTable> &tables) {
  os << '{';
  for (std::size_t t = 0; t < tables.size(); ++t) {
    os << (t ? "," : "") << '"' << tables[t].name() << "\":[";
    const auto &rows = tables[t].rows;
    for (std::size_t k = 0; k < rows.size(); ++k)
      os << (k ? "," : "") << '[' << rows[k].n << ',' << rows[k].value << ']';
    os << ']';
  }
  os << "}\n";
}

} // namespace jaco::io
