// sbt: command-line front end of the toolkit.
//
// Exit status: 0 success or "yes", 1 "no", 2 search budget exhausted,
// 3 usage, format or input errors.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sbt/behavior.hpp"
#include "sbt/distance.hpp"
#include "sbt/emitter.hpp"
#include "sbt/error.hpp"
#include "sbt/io.hpp"
#include "sbt/pipeline.hpp"
#include "sbt/reduction.hpp"

namespace fs = std::filesystem;
using namespace sbt;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kBudget = 2;
constexpr int kFailure = 3;

int exit_code(Outcome o) {
  switch (o) {
  case Outcome::yes: return kYes;
  case Outcome::no: return kNo;
  case Outcome::budget_exhausted: return kBudget;
  }
  return kFailure;
}

struct SearchOptions {
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;

  void add_to(CLI::App *cmd) {
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", budget, "Node budget")->check(CLI::PositiveNumber);
  }
  SearchConfig config() const {
    SearchConfig cfg;
    cfg.workers = jobs;
    cfg.node_budget = budget;
    return cfg;
  }
};

bool looks_like_tdt(const std::string &text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  return start != std::string::npos && text.compare(start, 4, "span") == 0;
}

int cmd_reduce(const fs::path &cnf, const fs::path &out, const std::optional<fs::path> &meta) {
  const CnfFormula f = parse_dimacs(read_file(cnf));
  const ReductionOutput r = reduce(normalize(f));
  write_file(out, format_tdt(r.assembling.instance()));
  if (meta) write_file(*meta, reduction_metadata(r));
  std::cout << "span " << r.assembling.instance().span() << " triples "
            << r.assembling.instance().triple_count() << " blocks " << r.assembling.specs.size() << "\n";
  return kYes;
}

int cmd_emit(const fs::path &tdt, const fs::path &out, std::optional<fs::path> meta,
             const std::optional<fs::path> &layout) {
  const TdtInstance inst = parse_tdt(read_file(tdt));
  if (!meta) meta = fs::path(tdt.string() + ".meta.json");
  const Assembling a = assembling_from_metadata(read_file(*meta));
  if (!(a.instance() == inst))
    throw Error(Errc::parse_error, "metadata does not describe '" + tdt.string() + "'");
  const EmittedPermutation e = emit_permutation(a);
  if (const auto bad = check_emission(a, e); !bad.empty())
    throw Error(Errc::invalid_permutation, "emission check failed: " + bad.front());
  write_file(out, format_permutation(e.permutation) + "\n");
  if (layout) write_file(*layout, layout_report(a, e.layout));
  std::cout << "n " << e.permutation.n() << " breakpoints " << breakpoint_count(e.permutation) << "\n";
  return kYes;
}

int cmd_collapse(const fs::path &tdt, const std::optional<fs::path> &trace, const SearchOptions &so) {
  const TdtInstance inst = parse_tdt(read_file(tdt));
  const CollapseResult r = collapse_search(inst, so.config());
  std::cout << to_string(r.outcome) << " (nodes " << r.stats.nodes_expanded << ", dead states "
            << r.stats.dead_states << ")\n";
  if (trace && r.trace) write_file(*trace, format_trace(inst, *r.trace));
  return exit_code(r.outcome);
}

int cmd_sort(const fs::path &perm, const std::string &mode, int max_depth,
             const std::optional<fs::path> &trace, const SearchOptions &so) {
  const Permutation p = parse_permutation(read_file(perm));
  if (mode == "exact") {
    try {
      std::cout << exact_distance(p, max_depth) << "\n";
      return kYes;
    } catch (const Error &e) {
      if (e.code() != Errc::depth_exceeded) throw;
      std::cout << "depth exceeded\n";
      return kBudget;
    }
  }
  if (mode == "oracle") {
    std::cout << bfs_distance_oracle(p) << "\n";
    return kYes;
  }
  const SortResult r = db3_sort_decision(p, so.config());
  std::cout << to_string(r.outcome) << " (d_b " << breakpoint_count(p) << ", nodes "
            << r.stats.nodes_expanded << ")\n";
  if (trace && r.outcome == Outcome::yes) write_file(*trace, format_move_trace(p, r.moves));
  return exit_code(r.outcome);
}

int cmd_check_equiv(const fs::path &tdt, const fs::path &perm) {
  const bool eq = is_equivalent(parse_tdt(read_file(tdt)), parse_permutation(read_file(perm)));
  std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
  return eq ? kYes : kNo;
}

int cmd_behavior(const std::string &kind_name, const std::optional<fs::path> &dot) {
  const Harness h = make_harness(parse_block_kind(kind_name));
  for (const auto &order : activation_orders(h.assembling.context, h.assembling.variables)) {
    std::string line;
    for (const auto &id : order) line += (line.empty() ? "" : " ") + id;
    std::cout << "(" << line << ")\n";
  }
  const BehaviorGraph g = behavior_graph(h);
  if (dot) write_file(*dot, g.to_dot(kind_name));
  const bool ok = g.is_acyclic() && g.terminals().size() == 1;
  std::cout << g.nodes.size() << " states, " << g.edges.size() << " transitions"
            << (ok ? "" : ", malformed graph") << "\n";
  return ok ? kYes : kNo;
}

int cmd_verify(const fs::path &cnf, const std::optional<std::string> &bits,
               const std::optional<fs::path> &report, const SearchOptions &so) {
  const CnfFormula f = parse_dimacs(read_file(cnf));
  PipelineConfig cfg;
  cfg.search = so.config();
  if (bits) {
    const int m = normalize(f).variable_count();
    std::string padded = *bits;
    if (static_cast<int>(padded.size()) == f.variable_count()) padded.resize(static_cast<std::size_t>(m), '0');
    cfg.assignment = parse_assignment_bits(padded, m);
  }
  const PipelineReport rep = run_pipeline(f, cfg);
  for (const PipelineCheck &c : rep.checks)
    std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
              << "\n";
  std::cout << "satisfiable " << (rep.satisfiable ? "yes" : "no") << ", n " << rep.span
            << ", collapsible " << (rep.collapsible ? to_string(*rep.collapsible) : "-")
            << ", d_t = n/3 " << (rep.sorts_in_db3 ? to_string(*rep.sorts_in_db3) : "-") << "\n";
  if (report) write_file(*report, rep.to_json());
  if (!rep.all_passed()) return kNo;
  return rep.budget_exhausted() ? kBudget : kYes;
}

int cmd_replay(const fs::path &trace, const fs::path &target) {
  const std::vector<TraceRecord> records = parse_trace(read_file(trace));
  const std::string text = read_file(target);
  if (looks_like_tdt(text)) {
    const TdtInstance start = parse_tdt(text);
    const TdtInstance end = replay_trace(start, trace_from_records(start, records));
    std::cout << records.size() << " steps, " << end.triple_count() << " triples left\n";
    return end.is_empty() ? kYes : kNo;
  }
  Permutation p = parse_permutation(text);
  for (const TraceRecord &r : records) p = apply_transposition(p, r.move);
  std::cout << records.size() << " moves, " << breakpoint_count(p) << " breakpoints left\n";
  return p.is_identity() ? kYes : kNo;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Sorting by transpositions: reduction, search and verification"};
  app.require_subcommand(1);

  fs::path in, out, other;
  std::optional<fs::path> meta, layout, trace, dot, report;
  std::optional<std::string> bits;
  std::string mode = "exact", kind;
  int max_depth = 32;
  SearchOptions so;

  auto *reduce_cmd = app.add_subcommand("reduce", "Compile a DIMACS formula into a 3DT-instance");
  reduce_cmd->add_option("cnf", in)->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("-o,--output", out)->required();
  reduce_cmd->add_option("--meta", meta, "Block metadata sidecar (JSON)");

  auto *emit_cmd = app.add_subcommand("emit-perm", "Emit the permutation equivalent to a reduced instance");
  emit_cmd->add_option("tdt", in)->required()->check(CLI::ExistingFile);
  emit_cmd->add_option("-o,--output", out)->required();
  emit_cmd->add_option("--meta", meta, "Metadata sidecar (default: <tdt>.meta.json)");
  emit_cmd->add_option("--layout", layout, "Write the p/q/alpha/beta layout (JSON)");

  auto *collapse_cmd = app.add_subcommand("collapse", "Decide 3DT-collapsibility");
  collapse_cmd->add_option("tdt", in)->required()->check(CLI::ExistingFile);
  collapse_cmd->add_option("--trace", trace, "Write the collapse trace (JSON lines)");
  so.add_to(collapse_cmd);

  auto *sort_cmd = app.add_subcommand("sort", "Transposition distance of a permutation");
  sort_cmd->add_option("perm", in)->required()->check(CLI::ExistingFile);
  sort_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "decision", "oracle"}));
  sort_cmd->add_option("--max-depth", max_depth)->check(CLI::NonNegativeNumber);
  sort_cmd->add_option("--trace", trace, "Write the decision witness (JSON lines)");
  so.add_to(sort_cmd);

  auto *equiv_cmd = app.add_subcommand("check-equiv", "Check that an instance and a permutation are equivalent");
  equiv_cmd->add_option("tdt", in)->required()->check(CLI::ExistingFile);
  equiv_cmd->add_option("perm", other)->required()->check(CLI::ExistingFile);

  auto *behavior_cmd = app.add_subcommand("behavior", "Explore one block in a harness");
  behavior_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"copy", "and", "or", "var"}));
  behavior_cmd->add_option("--dot", dot, "Write the behavior graph (DOT)");

  auto *verify_cmd = app.add_subcommand("verify", "Run the whole pipeline with cross-checks");
  verify_cmd->add_option("cnf", in)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--assignment", bits, "Model as bits, x1 first (e.g. 1010)");
  verify_cmd->add_option("--report", report, "Write the pipeline report (JSON)");
  so.add_to(verify_cmd);

  auto *replay_cmd = app.add_subcommand("replay", "Replay a trace on an instance or permutation");
  replay_cmd->add_option("trace", in)->required()->check(CLI::ExistingFile);
  replay_cmd->add_option("target", other)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kFailure;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(in, out, meta);
    if (*emit_cmd) return cmd_emit(in, out, meta, layout);
    if (*collapse_cmd) return cmd_collapse(in, trace, so);
    if (*sort_cmd) return cmd_sort(in, mode, max_depth, trace, so);
    if (*equiv_cmd) return cmd_check_equiv(in, other);
    if (*behavior_cmd) return cmd_behavior(kind, dot);
    if (*verify_cmd) return cmd_verify(in, bits, report, so);
    if (*replay_cmd) return cmd_replay(in, other);
  } catch (const Error &e) {
    std::cerr << "sbt: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception &e) {
    std::cerr << "sbt: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
