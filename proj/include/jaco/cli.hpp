#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jaco/edge_joint.hpp"
#include "jaco/errors.hpp"
#include "jaco/io.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/recursion.hpp"
#include "jaco/sequences.hpp"

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 domain or
// computation error.
namespace jaco::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDomain = 2;

namespace detail {

struct Options {
  std::uint64_t m = 1;
  std::uint64_t c = 0;
  std::size_t n = 0;
  std::size_t n_max = 0;
  std::size_t m_max = 0;
  std::size_t vi = 1;
  std::size_t uj = 1;
  std::vector<std::string> which;
  std::string format;
  std::string out_path;
  std::uint64_t seed = 0;
  bool directed = false;
};

class Output {
public:
  Output(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw Error("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream &stream() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream *stream_;
};

inline void add_rule(CLI::App *cmd, Options &o) {
  cmd->add_option("--m", o.m, "slope m of f(x) = mx + c")->capture_default_str();
  cmd->add_option("--c", o.c, "intercept c of f(x) = mx + c")->capture_default_str();
}

inline void add_out(CLI::App *cmd, Options &o) {
  cmd->add_option("--out", o.out_path, "write to PATH instead of standard output");
}

// Subcommands share Options, so the per-command default is applied only
// after parsing (see format_or).
inline void add_format(CLI::App *cmd, Options &o, std::vector<std::string> allowed,
                       const std::string &fallback) {
  cmd->add_option("--format", o.format, "output format (default " + fallback + ")")
      ->check(CLI::IsMember(std::move(allowed)));
}

inline std::string format_or(const Options &o, const std::string &fallback) {
  return o.format.empty() ? fallback : o.format;
}

inline std::string describe(const LinearFunction &f, std::size_t n) {
  return "J*_" + std::to_string(n) + "(" + std::to_string(f.m) + "x + " +
         std::to_string(f.c) + ")";
}

inline int cmd_build(const Options &o, std::ostream &out) {
  const JacoGraph j = build_jaco({o.m, o.c}, o.n);
  Output sink(o.out_path, out);
  const std::string format = format_or(o, "json");
  if (format == "json")
    io::write_json(sink.stream(), j);
  else if (format == "csv")
    io::write_csv(sink.stream(), j);
  else
    io::write_dot(sink.stream(), j, o.directed);
  return kOk;
}

inline int cmd_index(const Options &o, std::ostream &out, bool gutman) {
  const LinearFunction f{o.m, o.c};
  const SimpleGraph g = build_jaco(f, o.n).underlying();
  const auto components = component_orders(g);
  if (components.size() > 1)
    throw DisconnectedGraph(describe(f, o.n) + " has " + std::to_string(components.size()) +
                            " components; the " + (gutman ? "Gutman" : "Wiener") +
                            " index is defined only for connected graphs, which "
                            "linear Jaco graphs are only when m >= 1");
  Output sink(o.out_path, out);
  sink.stream() << (gutman ? gutman_index(g) : wiener_index(g)) << '\n';
  return kOk;
}

inline int cmd_recursion_check(const Options &o, std::ostream &out, std::ostream &err) {
  const auto rows = recursion_delta_report(o.n_max);
  Output sink(o.out_path, out);
  if (format_or(o, "csv") == "json")
    io::write_recursion_json(sink.stream(), rows);
  else
    io::write_recursion_csv(sink.stream(), rows);
  for (const auto &r : rows) {
    if (r.exact_value != r.direct_value) {
      err << "error: exact recursion disagrees with the direct value at n = " << r.n
          << '\n';
      return kDomain;
    }
  }
  return kOk;
}

inline int cmd_joint(const Options &o, std::ostream &out, std::ostream &err) {
  if (o.n < 2 || o.m_max < 2) {
    err << "error: joint needs --n >= 2 and --m >= 2\n";
    return kUsage;
  }
  if (o.vi < 1 || o.vi > o.n || o.uj < 1 || o.uj > o.m_max) {
    err << "error: anchors must satisfy 1 <= vi <= n and 1 <= uj <= m\n";
    return kUsage;
  }
  const JointTrace row = trace_jaco_joint(o.n, o.m_max, o.vi, o.uj);
  Output sink(o.out_path, out);
  if (format_or(o, "csv") == "json")
    io::write_joint_json(sink.stream(), row);
  else
    io::write_joint_csv(sink.stream(), row);
  if (!row.closed_matches()) {
    err << "error: closed form disagrees with the direct value\n";
    return kDomain;
  }
  return kOk;
}

inline int cmd_sequences(const Options &o, std::ostream &out) {
  std::vector<SequenceTable> tables;
  for (const auto &name : o.which)
    tables.push_back(tabulate(*parse_sequence_kind(name), o.n_max, {o.m, o.c}));
  Output sink(o.out_path, out);
  if (format_or(o, "csv") == "json") {
    io::write_sequences_json(sink.stream(), tables);
    return kOk;
  }
  // A lone table is written bare; several are each introduced by "# name"
  // and separated by a blank line.
  for (std::size_t t = 0; t < tables.size(); ++t) {
    if (tables.size() > 1)
      sink.stream() << (t ? "\n" : "") << "# " << tables[t].name() << '\n';
    io::write_sequence_csv(sink.stream(), tables[t]);
  }
  return kOk;
}

inline int cmd_erratum(const Options &o, std::ostream &out, std::ostream &err) {
  const auto recursion = recursion_delta_report(o.n_max);
  const auto joints = joint_delta_report(o.n_max, o.m_max);
  const auto anchors = nontrivial_anchor_audit(o.n_max, o.m_max, 5, o.seed);

  std::size_t mismatches = 0;
  for (const auto &r : recursion)
    mismatches += r.exact_value != r.direct_value;
  for (const auto &r : joints)
    mismatches += !r.closed_matches();
  std::size_t anchor_mismatches = 0;
  for (const auto &r : anchors)
    anchor_mismatches += !r.closed_matches();

  Output sink(o.out_path, out);
  auto &os = sink.stream();
  os << "# recursion\n";
  io::write_recursion_terms_csv(os, recursion);
  os << "\n# edge-joint\n";
  io::write_joint_terms_csv(os, joints);
  os << "\n# nontrivial-anchors rows=" << anchors.size() << " seed=" << o.seed
     << " closed_form_mismatches=" << anchor_mismatches << '\n';

  if (mismatches + anchor_mismatches != 0) {
    err << "error: " << mismatches + anchor_mismatches
        << " exact or closed-form values disagree with the direct oracle\n";
    return kDomain;
  }
  return kOk;
}

} // namespace detail

// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  using detail::Options;
  Options o;
  CLI::App app{"Linear Jaco graphs: construction, Gutman index and formula audits", "jaco"};
  app.require_subcommand(1);

  auto *build = app.add_subcommand("build", "construct J_n(f) and export it");
  detail::add_rule(build, o);
  build->add_option("--n", o.n, "order n")->required();
  detail::add_format(build, o, {"dot", "json", "csv"}, "json");
  build->add_flag("--directed", o.directed, "DOT: keep arc orientation");
  detail::add_out(build, o);

  auto *gutman = app.add_subcommand("gutman", "Gutman index of J*_n(f)");
  detail::add_rule(gutman, o);
  gutman->add_option("--n", o.n, "order n")->required();
  detail::add_out(gutman, o);

  auto *wiener = app.add_subcommand("wiener", "Wiener index of J*_n(f)");
  detail::add_rule(wiener, o);
  wiener->add_option("--n", o.n, "order n")->required();
  detail::add_out(wiener, o);

  auto *recursion = app.add_subcommand(
      "recursion-check", "printed vs exact recursion for Gut(J*_{n+1}(x)), n = 2..n-max");
  recursion->add_option("--n-max", o.n_max, "largest n")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  detail::add_format(recursion, o, {"csv", "json"}, "csv");
  detail::add_out(recursion, o);

  auto *joint = app.add_subcommand("joint", "Gutman index of J*_n(x) ~>_{v_i u_j} J*_m(x)");
  joint->add_option("--n", o.n, "order of the first graph")->required();
  joint->add_option("--m", o.m_max, "order of the second graph")->required();
  joint->add_option("--vi", o.vi, "anchor in the first graph")->capture_default_str();
  joint->add_option("--uj", o.uj, "anchor in the second graph")->capture_default_str();
  detail::add_format(joint, o, {"csv", "json"}, "csv");
  detail::add_out(joint, o);

  auto *sequences = app.add_subcommand("sequences", "tabulate invariants of J_n(f), n = 1..n-max");
  detail::add_rule(sequences, o);
  sequences->add_option("--which", o.which, "edges, gutman, jaconian_cardinality, v1_vn_distance")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember({"edges", "gutman", "jaconian_cardinality", "v1_vn_distance"}));
  sequences->add_option("--n-max", o.n_max, "largest n")
      ->required()
      ->check(CLI::PositiveNumber);
  detail::add_format(sequences, o, {"csv", "json"}, "csv");
  detail::add_out(sequences, o);

  auto *erratum = app.add_subcommand("erratum", "per-term audit of both printed formulas");
  o.n_max = 40;
  o.m_max = 40;
  erratum->add_option("--n-max", o.n_max, "largest n")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  erratum->add_option("--m-max", o.m_max, "largest m of the joint grid")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  erratum->add_option("--seed", o.seed, "seed for the non-trivial anchor draw")
      ->capture_default_str();
  detail::add_out(erratum, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (build->parsed())
      return detail::cmd_build(o, out);
    if (gutman->parsed())
      return detail::cmd_index(o, out, true);
    if (wiener->parsed())
      return detail::cmd_index(o, out, false);
    if (recursion->parsed())
      return detail::cmd_recursion_check(o, out, err);
    if (joint->parsed())
      return detail::cmd_joint(o, out, err);
    if (sequences->parsed())
      return detail::cmd_sequences(o, out);
    if (erratum->parsed())
      return detail::cmd_erratum(o, out, err);
  } catch (const Error &e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

inline int run(int argc, const char *const *argv, std::ostream &out = std::cout,
               std::ostream &err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

} // namespace jaco::cli
