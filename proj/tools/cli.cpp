#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "collatz/accelerated.hpp"
#include "collatz/classical.hpp"
#include "collatz/diophantine.hpp"
#include "collatz/export.hpp"
#include "collatz/harness.hpp"
#include "collatz/natural.hpp"

namespace collatz::cli {

namespace {

enum class Format { table, csv, json };

const std::map<std::string, Format> kFormats{
    {"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
const std::map<std::string, GraphMap> kMaps{
    {"classical", GraphMap::classical}, {"accelerated", GraphMap::accelerated}};

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  err << "error kind=" << kind << " message=" << message << '\n';
}

Integer parse_signed(const std::string& text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not an integer: '" + text + "'");
  }
  return Integer(text.front() == '+' ? text.substr(1) : text, 10);
}

// Options shared by the subcommands, filled in by CLI11.
struct Args {
  std::string n;
  std::string lo;
  std::string hi;
  std::string a, b, c;
  std::string resume_from;
  std::uint64_t max_steps = kDefaultMaxSteps;
  std::uint64_t budget = kDefaultMaxIters;
  std::uint64_t max_exp = 0;
  std::uint64_t graph_n = 0;
  std::uint64_t graph_limit = kDefaultGraphLimit;
  std::uint64_t chunk_size = 1024;
  std::size_t workers = 1;
  bool continue_past_one = false;
  Format format = Format::table;
  GraphMap map = GraphMap::classical;
};

int cmd_step(const Args& a, std::ostream& out) {
  out << collatz_step(Natural::parse(a.n)) << '\n';
  return kExitOk;
}

int cmd_trace(const Args& a, std::ostream& out) {
  const ClassicalTrajectory t =
      classical_trajectory(Natural::parse(a.n), a.max_steps, !a.continue_past_one);
  switch (a.format) {
    case Format::table: write_table(out, t); break;
    case Format::csv: write_csv(out, t); break;
    case Format::json: out << to_json(t) << '\n'; break;
  }
  return kExitOk;
}

int cmd_accel(const Args& a, std::ostream& out) {
  const AcceleratedTrace t = accelerated_trace(Natural::parse(a.n), a.budget);
  switch (a.format) {
    case Format::table: write_table(out, t); break;
    case Format::csv: write_csv(out, t); break;
    case Format::json: out << to_json(t) << '\n'; break;
  }
  return kExitOk;
}

int cmd_card(const Args& a, std::ostream& out) {
  const CrossCheckReport r = cross_check(Natural::parse(a.n), a.budget);
  out << r.cardinality << " (oracle: " << r.stopping_time << " steps + 1) "
      << (r.passed() ? "PASS" : "FAIL") << '\n';
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_scan(const Args& a, std::ostream& out, std::ostream& err) {
  ScanOptions options;
  options.budget = a.budget;
  options.workers = a.workers;
  options.chunk_size = a.chunk_size;
  if (!a.resume_from.empty()) {
    options.resume_from = Natural::parse(a.resume_from);
  }
  options.on_chunk = [&err](const ChunkProgress& chunk) {
    err << chunk_line(chunk) << std::endl;
  };
  const ScanSummary s = scan_range(Natural::parse(a.lo), Natural::parse(a.hi), options);
  write_summary(out, s);
  if (!s.failed.empty()) {
    return kExitCheckFailed;
  }
  return s.undecided == 0 ? kExitOk : kExitUndecided;
}

int cmd_pow3(const Args& a, std::ostream& out, std::ostream& err) {
  const auto results = powers_of_three(a.max_exp, a.budget, a.workers);
  write_powers_csv(out, results);
  int status = kExitOk;
  for (const PowerOfThreeResult& r : results) {
    if (!r.terminated || !r.stopping_time) {
      err << "undecided exponent=" << r.exponent << '\n';
      status = std::max(status, kExitUndecided);
    } else if (!r.reached_fixed_point || !r.cross_check_passed) {
      err << "cross-check failed exponent=" << r.exponent << '\n';
      status = kExitCheckFailed;
    }
  }
  return status;
}

int cmd_graph(const Args& a, std::ostream& out) {
  write_dot(out, a.graph_n, a.map, a.graph_limit);
  return kExitOk;
}

int cmd_solve_dio(const Args& a, std::ostream& out) {
  const auto sol = solve_linear_diophantine(parse_signed(a.a), parse_signed(a.b), parse_signed(a.c));
  if (!sol) {
    out << "no solution\n";
    return kExitOk;
  }
  out << "gcd " << sol->gcd << '\n'
      << "particular x=" << sol->s << " y=" << sol->t << '\n'
      << "general x=" << sol->s << "+(" << sol->step_x << ")*eta y=" << sol->t << "+("
      << sol->step_y << ")*eta\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collatz trajectories, odd-part traces and batch verification", "collatz"};
  app.require_subcommand(1);
  Args a;

  auto* step = app.add_subcommand("step", "Apply the Collatz map once");
  step->add_option("n", a.n, "Positive integer")->required();

  auto* trace = app.add_subcommand("trace", "Classical trajectory with discrete derivatives");
  trace->add_option("n", a.n, "Positive integer")->required();
  trace->add_option("--max-steps", a.max_steps, "Maximum number of applications");
  trace->add_flag("--continue-past-one", a.continue_past_one,
                  "Keep iterating through the 4-2-1 cycle until --max-steps");
  trace->add_option("--format", a.format, "table, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* accel = app.add_subcommand("accel", "Odd-part trace (w, x, y, z, u, eta, v)");
  accel->add_option("n", a.n, "Positive integer")->required();
  accel->add_option("--format", a.format, "table, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  accel->add_option("--max-iters", a.budget, "Iteration budget");

  auto* card = app.add_subcommand("card", "Trajectory cardinality from the odd-part trace, checked");
  card->add_option("n", a.n, "Positive integer")->required();
  card->add_option("--budget", a.budget, "Iteration budget");

  auto* scan = app.add_subcommand("scan", "Cross-check every n in [lo, hi)");
  scan->add_option("lo", a.lo, "First n")->required();
  scan->add_option("hi", a.hi, "One past the last n")->required();
  scan->add_option("--workers", a.workers, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--budget", a.budget, "Iteration budget per n");
  scan->add_option("--resume-from", a.resume_from, "Skip every n below this value");
  scan->add_option("--chunk-size", a.chunk_size, "Numbers per work unit")
      ->check(CLI::PositiveNumber);

  auto* pow3 = app.add_subcommand("pow3", "Odd-part traces of 3^1 .. 3^max_exp");
  pow3->add_option("max_exp", a.max_exp, "Largest exponent")->required()->check(CLI::PositiveNumber);
  pow3->add_option("--budget", a.budget, "Iteration budget per exponent");
  pow3->add_option("--workers", a.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* graph = app.add_subcommand("graph", "DOT digraph of the Collatz or odd-part map");
  graph->add_option("N", a.graph_n, "Largest node")->required()->check(CLI::PositiveNumber);
  graph->add_option("--map", a.map, "classical or accelerated")
      ->transform(CLI::CheckedTransformer(kMaps, CLI::ignore_case));
  graph->add_option("--limit", a.graph_limit, "Refuse N above this value");

  auto* dio = app.add_subcommand("solve-dio", "Solve a*x + b*y = c over the integers");
  dio->add_option("a", a.a)->required();
  dio->add_option("b", a.b)->required();
  dio->add_option("c", a.c)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (*step) return cmd_step(a, out);
    if (*trace) return cmd_trace(a, out);
    if (*accel) return cmd_accel(a, out);
    if (*card) return cmd_card(a, out);
    if (*scan) return cmd_scan(a, out, err);
    if (*pow3) return cmd_pow3(a, out, err);
    if (*graph) return cmd_graph(a, out);
    if (*dio) return cmd_solve_dio(a, out);
  } catch (const BudgetExhausted& e) {
    report_error(err, "undecided", e.what());
    return kExitUndecided;
  } catch (const DomainError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace collatz::cli
