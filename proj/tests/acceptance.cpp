// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Usage: acceptance [path-to-jaco-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "jaco/cli.hpp"
#include "jaco/jaco.hpp"
#include "oracle.hpp"

using namespace jaco;

namespace {

const LinearFunction kIdentity{1, 0};

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string &what) {
    if (!ok && failures.size() < 10)
      failures.push_back(what);
  }
};

BigCount oracle_gutman(const SimpleGraph &g) {
  return oracle::gutman(oracle::make(g.order(), g.edges()));
}

void construction_fidelity(Check &check) {
  check.expect(build_jaco(kIdentity, 5).arcs() ==
                   std::vector<Arc>{{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}},
               "J_5(x) arcs");
  check.expect(component_structure(build_jaco({0, 2}, 7)) == std::vector<std::size_t>{3, 3, 1},
               "J_7(2) components");
  for (std::uint64_t m = 0; m <= 3; ++m)
    for (std::uint64_t c = 0; c <= 3; ++c)
      for (std::size_t n = 1; n <= 300; ++n)
        check.expect(verify_definition_fixed_point(build_jaco({m, c}, n)),
                     "fixed point " + std::to_string(m) + "x+" + std::to_string(c) +
                         " n=" + std::to_string(n));
}

void gutman_baselines(Check &check) {
  const std::uint64_t expected[] = {1, 6, 19, 58};
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto g = build_jaco(kIdentity, n).underlying();
    check.expect(oracle_gutman(g) == BigCount(expected[n - 2]), "oracle Gut(J*_" + std::to_string(n) + ")");
    check.expect(gutman_index(g) == BigCount(expected[n - 2]), "Gut(J*_" + std::to_string(n) + ")");
  }
  const auto c4 = SimpleGraph::from_edges(4, oracle::cycle(4));
  check.expect(gutman_index(c4) == BigCount(32) && oracle_gutman(c4) == BigCount(32), "Gut(C_4)");
  for (std::size_t n = 3; n <= 50; ++n) {
    const auto c = SimpleGraph::from_edges(n, oracle::cycle(n));
    check.expect(gutman_index(c) == BigCount(4) * wiener_index(c), "C_" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto k = SimpleGraph::from_edges(n, oracle::complete(n));
    const BigCount deg = n - 1;
    check.expect(gutman_index(k) == deg * deg * wiener_index(k), "K_" + std::to_string(n));
  }
}

void recursion_audit(Check &check) {
  const auto rows = recursion_delta_report(500);
  check.expect(rows.size() == 499, "row count");
  for (const auto &r : rows) {
    const auto tag = "n=" + std::to_string(r.n);
    check.expect(r.exact_value == r.direct_value, "exact != direct at " + tag);
    SignedCount sum;
    for (auto d : r.term_deltas())
      sum += d;
    check.expect(sum == r.delta_paper, "term deltas do not close at " + tag);
  }
  const std::int64_t deltas[] = {-1, -2, 0};
  for (std::size_t k = 0; k < 3; ++k)
    check.expect(rows[k].delta_paper == SignedCount(deltas[k]),
                 "delta_paper at n=" + std::to_string(k + 2));
  // Spot-check the direct column against the brute-force oracle.
  for (std::size_t n : {2u, 3u, 4u, 10u, 25u, 60u})
    check.expect(rows[n - 2].direct_value == oracle_gutman(build_jaco(kIdentity, n + 1).underlying()),
                 "oracle direct n=" + std::to_string(n));
}

void joint_audit(Check &check) {
  const auto rows = joint_delta_report(40, 40);
  for (const auto &r : rows) {
    const auto tag = "(" + std::to_string(r.n) + "," + std::to_string(r.m) + ")";
    check.expect(r.closed_matches(), "closed != direct at " + tag);
    check.expect(r.paper_plus_block_matches(), "paper + B != direct at " + tag);
  }
  check.expect(rows.size() == 780, "grid size");
  check.expect(*rows[0].paper_value == BigCount(15) && rows[0].direct_value == BigCount(19) &&
                   *rows[0].missing_block == BigCount(4),
               "(2,2) values");
  check.expect(*rows[1].paper_value == BigCount(30) && rows[1].direct_value == BigCount(44) &&
                   *rows[1].missing_block == BigCount(14),
               "(3,2) values");
  for (std::size_t k : {0u, 1u, 50u, 400u, 779u}) {
    const auto &r = rows[k];
    const JointSpec spec{build_jaco(kIdentity, r.n).underlying(),
                         build_jaco(kIdentity, r.m).underlying(), 1, 1};
    check.expect(r.direct_value == oracle_gutman(edge_joint_graph(spec)), "oracle direct row");
  }

  const auto anchors = nontrivial_anchor_audit(40, 40, 5, 0);
  check.expect(anchors.size() == 780 * 5, "anchor count");
  for (const auto &r : anchors)
    check.expect(r.closed_matches() && !(r.v == 1 && r.u == 1), "anchor row");

  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> order(1, 10);
    const std::size_t n = order(rng), m = order(rng);
    const auto g = SimpleGraph::from_edges(n, oracle::random_connected(rng, n));
    const auto h = SimpleGraph::from_edges(m, oracle::random_connected(rng, m));
    std::uniform_int_distribution<Vertex> pv(1, n), pu(1, m);
    const JointSpec spec{g, h, pv(rng), pu(rng)};
    check.expect(closed_form_joint_gutman(spec) == oracle_gutman(edge_joint_graph(spec)),
                 "random pair " + std::to_string(trial));
  }
}

void structural_invariants(Check &check) {
  JacoGraph current = build_jaco(kIdentity, 2);
  for (std::size_t n = 2; n <= 2000; ++n) {
    JacoGraph next = build_jaco(kIdentity, n + 1);
    const auto info = jaconian_info(current);
    const auto &tails = next.in_neighbors(n + 1);
    bool block = tails.size() == n - info.prime_index;
    for (std::size_t k = 0; block && k < tails.size(); ++k)
      block = tails[k] == info.prime_index + 1 + k;
    check.expect(block, "extension adjacency n=" + std::to_string(n));
    check.expect(is_complete(hope_graph(current)), "hope graph n=" + std::to_string(n));
    current = std::move(next);
  }
  JacoGraph next = build_jaco(kIdentity, 1);
  for (std::size_t n = 1; n <= 300; ++n) {
    JacoGraph prefix = std::move(next);
    next = build_jaco(kIdentity, n + 1);
    auto trimmed = next.arcs();
    std::erase_if(trimmed, [n](const Arc &a) { return a.second > n; });
    check.expect(prefix.arcs() == trimmed, "prefix n=" + std::to_string(n));
  }
}

std::string capture(std::vector<std::string> args, int &code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

void sequences(Check &check) {
  int code = -1;
  auto out = capture({"sequences", "--which", "edges", "--n-max", "7"}, code);
  check.expect(code == 0 && out == "n,value\n1,0\n2,1\n3,2\n4,3\n5,5\n6,7\n7,10\n", "edges table");
  out = capture({"sequences", "--which", "jaconian_cardinality", "--n-max", "7"}, code);
  check.expect(code == 0 && out.find("\n5,1\n6,3\n7,2\n") != std::string::npos,
               "jaconian_cardinality table");
  out = capture({"sequences", "--which", "v1_vn_distance", "--n-max", "7"}, code);
  check.expect(code == 0 && out.find("\n5,3\n") != std::string::npos &&
                   out.find("\n7,4\n") != std::string::npos,
               "v1_vn_distance table");
}

int exit_status(const std::string &command) {
  const int raw = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void error_contract(Check &check, const std::string &binary) {
  std::ostringstream out, err;
  int code = cli::run({"gutman", "--m", "0", "--c", "2", "--n", "7"}, out, err);
  check.expect(code == 2 && err.str().find("DisconnectedGraph") != std::string::npos,
               "in-process disconnected");
  check.expect(cli::run({"gutman", "--n", "x"}, out, err) == 1, "in-process malformed");
  check.expect(cli::run({"build", "--bogus"}, out, err) == 1, "in-process unknown flag");
  if (!binary.empty()) {
    check.expect(exit_status(binary + " gutman --m 0 --c 2 --n 7") == 2, "binary disconnected");
    check.expect(exit_status(binary + " gutman --n x") == 1, "binary malformed");
    check.expect(exit_status(binary + " gutman --n 5") == 0, "binary ok");
  }
}

} // namespace

int main(int argc, char **argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void(Check &)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "construction fidelity", 10, construction_fidelity},
      {2, "Gutman baselines", 5, gutman_baselines},
      {3, "recursion audit n <= 500", 120, recursion_audit},
      {4, "edge-joint audit", 120, joint_audit},
      {5, "structural invariants", 60, structural_invariants},
      {6, "sequence tables", 60, sequences},
      {7, "error contract", 60, [&](Check &c) { error_contract(c, binary); }},
  };

  int failed = 0;
  for (const auto &criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception &e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.budget_seconds)
      check.failures.push_back("runtime over budget");
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.name.c_str(), seconds, criterion.budget_seconds);
    for (const auto &f : check.failures)
      std::printf("    %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
