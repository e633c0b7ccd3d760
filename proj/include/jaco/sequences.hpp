#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jaco/big_count.hpp"
#include "jaco/errors.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/simple_graph.hpp"

namespace jaco {

enum class SequenceKind { edges, gutman, jaconian_cardinality, v1_vn_distance };

inline constexpr std::array<std::pair<SequenceKind, std::string_view>, 4>
    kSequenceNames{{{SequenceKind::edges, "edges"},
                    {SequenceKind::gutman, "gutman"},
                    {SequenceKind::jaconian_cardinality, "jaconian_cardinality"},
                    {SequenceKind::v1_vn_distance, "v1_vn_distance"}}};

inline std::string_view sequence_name(SequenceKind kind) {
  for (auto [k, name] : kSequenceNames)
    if (k == kind)
      return name;
  return "";
}

inline std::optional<SequenceKind> parse_sequence_kind(std::string_view name) {
  for (auto [k, known] : kSequenceNames)
    if (known == name)
      return k;
  return std::nullopt;
}

struct SequenceRow {
  std::size_t n = 0;
  BigCount value;
};

struct SequenceTable {
  SequenceKind kind = SequenceKind::edges;
  std::vector<SequenceRow> rows;

  std::string_view name() const { return sequence_name(kind); }
};

inline BigCount sequence_value(SequenceKind kind, const JacoGraph &j) {
  switch (kind) {
  case SequenceKind::edges:
    return j.arc_count();
  case SequenceKind::gutman:
    return gutman_index(j.underlying());
  case SequenceKind::jaconian_cardinality:
    return jaconian_info(j).jaconian_set.size();
  case SequenceKind::v1_vn_distance: {
    const auto dist = bfs_distances(j.underlying(), 1);
    if (!dist.back())
      throw DisconnectedGraph("v_1 and v_" + std::to_string(j.order()) +
                              " lie in different components");
    return *dist.back();
  }
  }
  throw InvalidArgument("unknown sequence");
}

// Rows n = 1..n_max of the requested invariant of J_n(f).
inline SequenceTable tabulate(SequenceKind kind, std::size_t n_max,
                              LinearFunction f = {1, 0}) {
  if (n_max < 1)
    throw InvalidArgument("n_max must be at least 1");
  SequenceTable table{kind, {}};
  table.rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n)
    table.rows.push_back({n, sequence_value(kind, build_jaco(f, n))});
  return table;
}

} // namespace jaco
