#include <gtest/gtest.h>

#include <vector>

#include "jaco/sequences.hpp"

using namespace jaco;

namespace {

std::vector<std::uint64_t> values(const SequenceTable &t) {
  std::vector<std::uint64_t> out;
  for (const auto &row : t.rows)
    out.push_back(static_cast<std::uint64_t>(row.value.raw()));
  return out;
}

} // namespace

TEST(Sequences, EdgeCounts) {
  EXPECT_EQ(values(tabulate(SequenceKind::edges, 7)),
            (std::vector<std::uint64_t>{0, 1, 2, 3, 5, 7, 10}));
}

TEST(Sequences, JaconianCardinality) {
  const auto t = tabulate(SequenceKind::jaconian_cardinality, 7);
  EXPECT_EQ(values(t), (std::vector<std::uint64_t>{1, 2, 1, 2, 1, 3, 2}));
}

TEST(Sequences, FirstToLastDistance) {
  const auto t = tabulate(SequenceKind::v1_vn_distance, 7);
  EXPECT_EQ(values(t), (std::vector<std::uint64_t>{0, 1, 2, 3, 3, 4, 4}));
}

TEST(Sequences, Gutman) {
  EXPECT_EQ(values(tabulate(SequenceKind::gutman, 7)),
            (std::vector<std::uint64_t>{0, 1, 6, 19, 58, 127, 263}));
}

TEST(Sequences, RowsStrictlyIncreasing) {
  const auto t = tabulate(SequenceKind::edges, 50);
  for (std::size_t k = 1; k < t.rows.size(); ++k)
    EXPECT_LT(t.rows[k - 1].n, t.rows[k].n);
}

TEST(Sequences, Names) {
  EXPECT_EQ(parse_sequence_kind("v1_vn_distance"), SequenceKind::v1_vn_distance);
  EXPECT_FALSE(parse_sequence_kind("vertices").has_value());
  EXPECT_EQ(sequence_name(SequenceKind::jaconian_cardinality), "jaconian_cardinality");
}

TEST(Sequences, DisconnectedRuleErrors) {
  EXPECT_THROW(tabulate(SequenceKind::gutman, 7, {0, 2}), DisconnectedGraph);
  EXPECT_THROW(tabulate(SequenceKind::v1_vn_distance, 7, {0, 2}), DisconnectedGraph);
  EXPECT_THROW(tabulate(SequenceKind::edges, 0), InvalidArgument);
}
