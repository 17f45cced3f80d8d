#include "mintplan/cli.h"

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mintplan/heuristics.h"
#include "mintplan/history_io.h"
#include "mintplan/lp_text.h"
#include "mintplan/oracle.h"
#include "mintplan/report.h"
#include "mintplan/rolling.h"
#include "mintplan/scenario_io.h"
#include "mintplan/synthetic.h"

namespace mintplan {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

struct PolicyFlags {
  bool proc1 = false;
  bool proc2 = false;
  std::string order = "proc2-first";
  bool strict = false;
  bool no_integerize = false;
  double granularity = 1.0;
  double k_max = 2.0;
  bool lexicographic = false;

  void Register(CLI::App* app) {
    app->add_flag("--proc1", proc1, "Fill first-quarter base capacity");
    app->add_flag("--proc2", proc2,
                  "Postpone first-quarter extended capacity");
    app->add_option("--heuristic-order", order,
                    "proc2-first or proc1-first")
        ->check(CLI::IsMember({"proc2-first", "proc1-first"}));
    app->add_flag("--strict", strict,
                  "Procedure 1 compares cost - K instead of cost");
    app->add_flag("--no-integerize", no_integerize,
                  "Keep fractional orders");
    app->add_option("--granularity", granularity, "Order unit")
        ->check(CLI::PositiveNumber);
    app->add_option("--k-max", k_max, "Upper bound of K")
        ->check(CLI::NonNegativeNumber);
    app->add_flag("--lexicographic", lexicographic,
                  "Minimise cost first, then maximise K");
  }

  PipelineOptions Options() const {
    PipelineOptions options;
    options.procedure1 = proc1;
    options.procedure2 = proc2;
    options.order = order == "proc1-first" ? HeuristicOrder::kProcedure1First
                                           : HeuristicOrder::kProcedure2First;
    options.strict_objective = strict;
    options.integerize = !no_integerize;
    options.integerize_options.granularity = granularity;
    options.build.k_max = k_max;
    options.build.force_lexicographic = lexicographic;
    return options;
  }
};

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

int Solve(const std::string& path, const PolicyFlags& flags,
          const std::string& output, std::ostream& out, std::ostream& err) {
  const ScenarioFile file = LoadScenarioFile(path);
  const PipelineResult result =
      SolvePipeline(file.scenario, file.config, flags.Options());
  WriteOutput(output, FormatPipelineResult(file.scenario, result), out);
  if (!result.failure.empty()) {
    err << path << ": " << result.failure << "\n";
    return kExitFail;
  }
  return kExitOk;
}

std::vector<InjectedConstraint> ParseInjections(
    const std::vector<std::string>& specs) {
  std::vector<InjectedConstraint> out;
  for (const std::string& spec : specs) {
    const std::size_t colon = spec.find(':');
    InjectedConstraint injected;
    injected.kind = ParseInjectedKind(spec.substr(0, colon));
    if (colon != std::string::npos) {
      injected.quarter = std::stoi(spec.substr(colon + 1));
    }
    out.push_back(injected);
  }
  return out;
}

struct SimulateFlags {
  std::string history;
  std::int64_t synthetic = -1;
  std::string baseline;
  std::string write_history;
  std::string output;
};

int Simulate(const SimulateFlags& flags, const PolicyFlags& policy,
             std::ostream& out, std::ostream& err) {
  HistoryFile history;
  if (flags.synthetic >= 0) {
    SyntheticHistory synthetic =
        GenerateSynthetic(static_cast<std::uint64_t>(flags.synthetic));
    history.input = std::move(synthetic.input);
    history.baseline = std::move(synthetic.baseline);
  } else {
    history = LoadHistoryFile(flags.history);
  }
  if (!flags.write_history.empty()) {
    WriteOutput(flags.write_history, SerializeHistoryJson(history), out);
  }

  SimulationOptions options;
  options.pipeline = policy.Options();
  const SimulationReport report = RunSimulation(history.input, options);

  std::optional<Comparison> comparison;
  if (!flags.baseline.empty()) {
    Matrix baseline;
    if (flags.baseline == "naive") {
      baseline = NaiveBaseline(history.input);
    } else if (flags.baseline == "history") {
      if (!history.baseline) {
        err << "history has no baseline orders\n";
        return kExitError;
      }
      baseline = *history.baseline;
    } else {
      baseline = LoadBaselineFile(flags.baseline);
    }
    comparison = Compare(history.input, report, baseline);
  }
  WriteOutput(flags.output,
              SimulationCsv(report, history.input.specs,
                            comparison ? &*comparison : nullptr),
              out);
  for (const QuarterRecord& q : report.quarters) {
    if (q.infeasible) {
      err << "warning: quarter " << q.quarter << ": " << q.note << "\n";
    }
  }
  return kExitOk;
}

struct OracleFlags {
  int trials = 50;
  std::uint64_t seed = 1;
  InstanceShape shape;
};

int Oracle(const OracleFlags& flags, std::ostream& out, std::ostream& err) {
  const InstanceShape& shape = flags.shape;
  const int binaries =
      shape.quarters * (shape.blanking_levels + shape.striking_levels + 1);
  if (shape.quarters < 1 || shape.denominations < 1 ||
      shape.blanking_levels < 1 || shape.striking_levels < 1) {
    err << "oracle: sizes must be positive\n";
    return kExitError;
  }
  if (binaries > 12) {
    err << "oracle: 2^" << binaries
        << " binary assignments exceed the 2^12 cap\n";
    return kExitError;
  }
  if (flags.trials == 0) {
    err << "warning: 0 trials; nothing was checked\n";
    out << "trials 0 feasible 0 infeasible 0 mismatches 0 "
           "max_deviation 0 pass\n";
    return kExitOk;
  }
  int feasible = 0, infeasible = 0, mismatches = 0;
  double max_deviation = 0.0;
  for (int i = 0; i < flags.trials; ++i) {
    const ScenarioFile file = RandomInstance(flags.seed + i, shape);
    const MintProblem problem = Build(file.scenario, file.config);
    const Solution solution = SolveMip(problem);
    const OracleResult expected = ExhaustiveSolve(problem);
    if (solution.optimal() !=
        (expected.status == SolutionStatus::kOptimal)) {
      ++mismatches;
      continue;
    }
    if (!solution.optimal()) {
      ++infeasible;
      continue;
    }
    ++feasible;
    max_deviation = std::max(max_deviation,
                             std::abs(solution.objective - expected.objective));
  }
  const bool pass = mismatches == 0 && max_deviation <= 1e-6;
  char deviation[32];
  std::snprintf(deviation, sizeof deviation, "%.3g", max_deviation);
  out << "trials " << flags.trials << " feasible " << feasible
      << " infeasible " << infeasible << " mismatches " << mismatches
      << " max_deviation " << deviation << (pass ? " pass" : " fail") << "\n";
  return pass ? kExitOk : kExitFail;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Minimum-cost quarterly coin minting plans", "mintplan"};
  app.require_subcommand(1);

  PolicyFlags solve_policy;
  std::string solve_path, solve_output;
  CLI::App* solve = app.add_subcommand("solve", "Solve one scenario");
  solve->add_option("scenario", solve_path, "Scenario JSON")->required();
  solve->add_option("-o,--output", solve_output, "Write the report here");
  solve_policy.Register(solve);

  PolicyFlags simulate_policy;
  SimulateFlags simulate_flags;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Rolling-horizon replay of a history");
  auto* history_opt =
      simulate->add_option("history", simulate_flags.history, "History JSON");
  auto* synthetic_opt = simulate->add_option(
      "--synthetic", simulate_flags.synthetic,
      "Use the generated 21-quarter history for this seed");
  synthetic_opt->check(CLI::NonNegativeNumber);
  history_opt->excludes(synthetic_opt);
  simulate->add_option("--baseline", simulate_flags.baseline,
                       "naive, history, or a baseline JSON path");
  simulate->add_option("--write-history", simulate_flags.write_history,
                       "Also write the history JSON used");
  simulate->add_option("-o,--output", simulate_flags.output,
                       "Write the CSV here");
  simulate_policy.Register(simulate);

  OracleFlags oracle_flags;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Compare branch and bound with exhaustive enumeration");
  oracle->add_option("--trials", oracle_flags.trials, "Random instances")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--seed", oracle_flags.seed, "First instance seed");
  oracle->add_option("--quarters", oracle_flags.shape.quarters, "T");
  oracle->add_option("--denominations", oracle_flags.shape.denominations,
                    "|D|");
  oracle->add_option("--blanking-levels", oracle_flags.shape.blanking_levels,
                    "nc");
  oracle->add_option("--striking-levels", oracle_flags.shape.striking_levels,
                    "na");

  std::string export_path, export_output;
  std::vector<std::string> export_injections;
  double export_k_max = 2.0;
  CLI::App* export_lp =
      app.add_subcommand("export-lp", "Write the model in LP text form");
  export_lp->add_option("scenario", export_path, "Scenario JSON")->required();
  export_lp->add_option("-o,--output", export_output, "Write the LP here");
  export_lp->add_option("--inject", export_injections,
                        "kind[:quarter], e.g. force_base_striking:0");
  export_lp->add_option("--k-max", export_k_max, "Upper bound of K")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mintplan: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (solve->parsed()) {
      return Solve(solve_path, solve_policy, solve_output, out, err);
    }
    if (simulate->parsed()) {
      if (simulate_flags.history.empty() && simulate_flags.synthetic < 0) {
        err << "mintplan simulate: give a history file or --synthetic SEED\n";
        return kExitError;
      }
      return Simulate(simulate_flags, simulate_policy, out, err);
    }
    if (oracle->parsed()) return Oracle(oracle_flags, out, err);
    if (export_lp->parsed()) {
      const ScenarioFile file = LoadScenarioFile(export_path);
      BuildOptions options;
      options.k_max = export_k_max;
      const MintProblem problem =
          Build(file.scenario, file.config, ParseInjections(export_injections),
                {}, options);
      WriteOutput(export_output, ExportLpText(problem.lp), out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "mintplan: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "mintplan: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace mintplan
