#include "ledgerkit/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ledgerkit/cost.hpp"
#include "ledgerkit/errors.hpp"
#include "ledgerkit/flows.hpp"
#include "ledgerkit/graph.hpp"
#include "ledgerkit/ledger.hpp"
#include "ledgerkit/potential.hpp"
#include "ledgerkit/scheduler.hpp"
#include "ledgerkit/trace_io.hpp"

namespace ledgerkit::cli {

namespace {

// Reals print with 12 significant digits; everything integer stays integer.
std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* fmt_b(bool v) { return v ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_walk(const std::vector<NodeId>& nodes) {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += "->";
    s += nodes[i];
  }
  return s;
}

Window resolve_window(const Trace& t, std::size_t t0, std::optional<std::size_t> length) {
  Window w;
  w.t0 = t0;
  w.length = length ? *length : (t.events.size() > t0 ? t.events.size() - t0 : 0);
  return w;
}

int cmd_cost_eval(double x, std::ostream& out) {
  const double j = eval_cost(x);
  out << "J=" << fmt_g(j) << "\n";
  return 0;
}

int cmd_cost_check(std::size_t grid, double lo, double hi, std::ostream& out) {
  const CostCheckReport rep = cost_check(grid, lo, hi);
  out << "reciprocity_max=" << fmt_g(rep.reciprocity_max) << "\n";
  out << "cost_min=" << fmt_g(rep.cost_min) << "\n";
  out << "composition_residual_max=" << fmt_g(rep.composition_max) << "\n";
  const bool ok = rep.reciprocity_max <= kReciprocityRelTol &&
                  rep.composition_max <= kCompositionRelTol && rep.cost_min >= kCostNonnegFloor;
  out << "pass=" << fmt_b(ok) << "\n";
  return ok ? 0 : 1;
}

int cmd_ledger_replay(const std::string& path, bool strict, std::ostream& out,
                      std::ostream& err) {
  const Trace t = parse_trace(read_file(path));
  try {
    const ReplayResult result = replay(t, {strict});
    for (std::size_t i = 0; i < t.graph->node_count(); ++i)
      out << t.graph->node_at(i) << "=" << result.final.units_at(i) << "\n";
    return 0;
  } catch (const ValidationError& e) {
    err << "violation: " << e.what() << "\n";
    return 1;
  }
}

int cmd_flows_verify(const std::string& path, std::size_t t0, std::optional<std::size_t> length,
                     std::ostream& out) {
  const Trace t = parse_trace(read_file(path));
  const ReplayResult result = replay(t);
  const EdgeFlow flow = accumulate(result.increments, resolve_window(t, t0, length));
  const SpanningForest forest(t.graph);
  const ClosureReport report = check_cycle_closure(flow, fundamental_cycles(t.graph, forest));

  out << "closed=" << fmt_b(report.closed) << "\n";
  for (const ClosureViolation& v : report.violations)
    out << "cycle=" << join_walk(v.cycle.walk) << " flux=" << v.flux << "\n";
  return report.closed ? 0 : 1;
}

int cmd_potential_solve(const std::string& path, std::size_t t0,
                        std::optional<std::size_t> length, std::ostream& out) {
  const Trace t = parse_trace(read_file(path));
  const ReplayResult result = replay(t);
  const EdgeFlow flow = accumulate(result.increments, resolve_window(t, t0, length));
  try {
    const Potential p = solve_potential(flow);
    for (std::size_t i = 0; i < t.graph->node_count(); ++i)
      out << t.graph->node_at(i) << "=" << p.value_at(i) << "\n";
    return 0;
  } catch (const ClosureError& e) {
    out << "closed=false\n";
    out << "cycle=" << join_walk(e.cycle_nodes()) << "\n";
    out << "flux=" << e.flux() << "\n";
    return 1;
  }
}

int cmd_schedule_gray(std::size_t dim, std::ostream& out) {
  out << emit_walk(gray_cycle(dim));
  return 0;
}

int cmd_schedule_validate(const std::string& path, bool cyclic, std::ostream& out) {
  const Walk w = parse_walk(read_file(path));
  const WalkReport r = validate_walk(w, cyclic);
  out << "atomic=" << fmt_b(r.atomic) << "\n";
  out << "complete=" << fmt_b(r.complete) << "\n";
  out << "unique=" << fmt_b(r.unique) << "\n";
  out << "period=" << r.period << "\n";
  return (r.atomic && r.complete && r.unique) ? 0 : 1;
}

int cmd_schedule_dims(std::size_t d_max, bool assume_linking, std::ostream& out) {
  for (const DimensionRow& row : dimension_scan(d_max)) {
    out << "d=" << row.dim << " lcm=" << row.lcm_with_45 << " gap45=" << fmt_b(row.passes_gap45)
        << " closed_form_lcm=" << row.closed_form_lcm
        << " closed_form_matches=" << fmt_b(row.closed_form_matches);
    if (assume_linking) out << " survives=" << fmt_b(row.passes_gap45 && row.dim >= 3);
    out << "\n";
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"deterministic discrete-ledger verification kernel"};
  app.name("ledgerkit");
  app.require_subcommand(1);

  std::function<int()> action;

  auto* cost_cmd = app.add_subcommand("cost", "reciprocal cost evaluation and identity scans");
  cost_cmd->require_subcommand(1);

  double eval_x = 0.0;
  auto* cost_eval = cost_cmd->add_subcommand("eval", "print J(x)");
  cost_eval->add_option("x", eval_x, "positive ratio")->required();
  cost_eval->callback([&] { action = [&] { return cmd_cost_eval(eval_x, out); }; });

  std::size_t check_grid = 100;
  double check_lo = 1e-3;
  double check_hi = 1e3;
  auto* cost_check_cmd =
      cost_cmd->add_subcommand("check", "scan reciprocity, nonnegativity, and composition");
  cost_check_cmd->add_option("--grid", check_grid, "points per axis (default 100)");
  cost_check_cmd->add_option("--lo", check_lo, "lower grid bound (default 1e-3)");
  cost_check_cmd->add_option("--hi", check_hi, "upper grid bound (default 1e3)");
  cost_check_cmd->callback(
      [&] { action = [&] { return cmd_cost_check(check_grid, check_lo, check_hi, out); }; });

  auto* ledger_cmd = app.add_subcommand("ledger", "replay double-entry traces");
  ledger_cmd->require_subcommand(1);

  std::string replay_file;
  bool replay_strict = false;
  auto* ledger_replay = ledger_cmd->add_subcommand("replay", "replay a trace, print balances");
  ledger_replay->add_option("trace", replay_file, "trace file")->required();
  ledger_replay->add_flag("--strict-unit", replay_strict,
                          "require every posting magnitude to be +1 or -1");
  ledger_replay->callback(
      [&] { action = [&] { return cmd_ledger_replay(replay_file, replay_strict, out, err); }; });

  auto* flows_cmd = app.add_subcommand("flows", "clearing-window flow aggregation");
  flows_cmd->require_subcommand(1);

  std::string verify_file;
  std::size_t verify_t0 = 0;
  std::size_t verify_len = 0;
  auto* flows_verify = flows_cmd->add_subcommand("verify", "check cycle closure over a window");
  flows_verify->add_option("trace", verify_file, "trace file")->required();
  flows_verify->add_option("--t0", verify_t0, "window start tick (default 0)");
  auto* verify_len_opt =
      flows_verify->add_option("--window", verify_len, "window length (default: to the end)");
  flows_verify->callback([&] {
    action = [&] {
      if (verify_len_opt->count())
        return cmd_flows_verify(verify_file, verify_t0, verify_len, out);
      return cmd_flows_verify(verify_file, verify_t0, std::nullopt, out);
    };
  });

  auto* potential_cmd = app.add_subcommand("potential", "scalar potential reconstruction");
  potential_cmd->require_subcommand(1);

  std::string solve_file;
  std::size_t solve_t0 = 0;
  std::size_t solve_len = 0;
  auto* potential_solve =
      potential_cmd->add_subcommand("solve", "solve for the potential of a window's flow");
  potential_solve->add_option("trace", solve_file, "trace file")->required();
  potential_solve->add_option("--t0", solve_t0, "window start tick (default 0)");
  auto* solve_len_opt =
      potential_solve->add_option("--window", solve_len, "window length (default: to the end)");
  potential_solve->callback([&] {
    action = [&] {
      if (solve_len_opt->count())
        return cmd_potential_solve(solve_file, solve_t0, solve_len, out);
      return cmd_potential_solve(solve_file, solve_t0, std::nullopt, out);
    };
  });

  auto* schedule_cmd = app.add_subcommand("schedule", "Gray-code walks on hypercubes");
  schedule_cmd->require_subcommand(1);

  std::size_t gray_dim = 0;
  auto* schedule_gray = schedule_cmd->add_subcommand("gray", "print the Gray-code cycle");
  schedule_gray->add_option("--dim", gray_dim, "hypercube dimension")->required();
  schedule_gray->callback([&] { action = [&] { return cmd_schedule_gray(gray_dim, out); }; });

  std::string validate_file;
  bool validate_cyclic = false;
  auto* schedule_validate =
      schedule_cmd->add_subcommand("validate", "judge a walk file's three constraints");
  schedule_validate->add_option("walk", validate_file, "walk file")->required();
  schedule_validate->add_flag("--cyclic", validate_cyclic,
                              "also require the wraparound step to be adjacent");
  schedule_validate->callback(
      [&] { action = [&] { return cmd_schedule_validate(validate_file, validate_cyclic, out); }; });

  std::size_t dims_max = 0;
  bool dims_linking = false;
  auto* schedule_dims =
      schedule_cmd->add_subcommand("dims", "scan dimensions for the gap-45 criterion");
  schedule_dims->add_option("--max", dims_max, "largest dimension to scan")->required();
  schedule_dims->add_flag("--assume-linking", dims_linking,
                          "intersect with the declared d >= 3 linking constraint");
  schedule_dims->callback(
      [&] { action = [&] { return cmd_schedule_dims(dims_max, dims_linking, out); }; });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (!action) return 2;

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << " ["
        << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ledgerkit::cli
