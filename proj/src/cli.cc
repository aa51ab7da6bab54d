// Copyright 2026 The pathilp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pathilp/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "pathilp/errors.h"
#include "pathilp/identities.h"
#include "pathilp/ilp.h"
#include "pathilp/reduction.h"
#include "pathilp/set_simulator.h"
#include "pathilp/subset_sum.h"

namespace pathilp {

RoundtripReport roundtrip(const CnfFormula& formula, const SolverLimits& limits) {
  RoundtripReport report;
  const CnfFormula normalized = normalize(formula);
  const std::vector<Assignment> sat = enumerate_satisfying(normalized);
  report.sat_count = sat.size();
  Reduction reduction = reduce(normalized);
  if (reduction.map.trivial) {
    report.trivial = true;
    report.equal = !sat.empty() && sat.front().mask == 0;
    return report;
  }

  ColumnValues values = final_column_values(reduction.instance, reduction.map.final_x, limits);
  report.status = values.status;
  if (values.status == SolveStatus::kResourceExceeded) return report;
  std::vector<Assignment> decoded;
  for (const Integer& v : values.values) {
    decoded.push_back(extract_assignment(v, reduction.map));
  }
  std::sort(decoded.begin(), decoded.end());
  decoded.erase(std::unique(decoded.begin(), decoded.end()), decoded.end());
  report.ip_set_size = decoded.size();

  std::vector<Assignment> nonzero;
  std::copy_if(sat.begin(), sat.end(), std::back_inserter(nonzero),
               [](Assignment a) { return a.mask != 0; });
  report.equal = decoded == nonzero;
  return report;
}

namespace {

struct CliConfig {
  std::string command;
  std::string input = "-";
  std::string output;
  SolverLimits limits;
  bool no_final_restore = false;
  std::optional<std::uint64_t> seed;
  std::string objective_path;
  std::string value;
  std::vector<std::string> items;
  std::string target;
  int count = 5;
  int max_value = 100;
  int verbosity = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<Integer>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += values[i].get_str();
  }
  return s;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw InvalidInputError("cannot write '" + path + "'");
  file << text;
  if (!file) throw InvalidInputError("failed writing '" + path + "'");
}

CnfFormula load_formula(const CliConfig& config, std::istream& in) {
  return normalize(parse_dimacs(read_input(config.input, in)));
}

IpInstance load_instance(const CliConfig& config, std::istream& in) {
  return deserialize(read_input(config.input, in));
}

Integer parse_integer(const std::string& token, const char* what) {
  Integer value;
  bool digits = !token.empty() &&
                std::all_of(token.begin() + (token[0] == '-' ? 1 : 0), token.end(),
                            [](char c) { return c >= '0' && c <= '9'; }) &&
                token != "-";
  if (!digits || value.set_str(token, 10) != 0) {
    throw ParseError(std::string(what) + ": not an integer: '" + token + "'");
  }
  return value;
}

int status_exit(SolveStatus status) {
  switch (status) {
    case SolveStatus::kFeasible:
      return kExitOk;
    case SolveStatus::kInfeasible:
      return kExitNegative;
    case SolveStatus::kResourceExceeded:
      return kExitResource;
  }
  return kExitInternal;
}

int cmd_reduce(const CliConfig& config, std::istream& in, std::ostream& out) {
  CnfFormula formula = load_formula(config, in);
  ReductionOptions options;
  options.final_restore = !config.no_final_restore;
  Reduction reduction = reduce(formula, options);
  if (config.output.empty()) {
    serialize(reduction.instance, out);
    return kExitOk;
  }
  write_output(config.output, serialize(reduction.instance));
  PathReport report = validate_pathlike(reduction.instance);
  out << "rows=" << report.num_rows << " cols=" << report.num_cols
      << " max_abs_coeff=" << report.max_abs_coeff
      << " trivial=" << bool_str(reduction.map.trivial) << '\n';
  return kExitOk;
}

int cmd_validate(const CliConfig& config, std::istream& in, std::ostream& out) {
  PathReport report = validate_pathlike(load_instance(config, in));
  out << "is_path_like=" << bool_str(report.is_path_like)
      << " max_abs_coeff=" << report.max_abs_coeff << " num_rows=" << report.num_rows
      << " num_cols=" << report.num_cols;
  if (report.offending_column) out << " offending_column=" << *report.offending_column;
  out << '\n';
  return report.is_path_like ? kExitOk : kExitNegative;
}

std::vector<Integer> load_objective(const std::string& path, int num_cols) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open objective '" + path + "'");
  std::vector<Integer> objective;
  std::string line;
  while (std::getline(file, line)) {
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) objective.push_back(parse_integer(token, "objective"));
  }
  if (static_cast<int>(objective.size()) != num_cols) {
    throw ParseError("objective has " + std::to_string(objective.size()) + " entries, instance has " +
                     std::to_string(num_cols) + " columns");
  }
  return objective;
}

int cmd_solve(const CliConfig& config, std::istream& in, std::ostream& out) {
  IpInstance instance = load_instance(config, in);
  SolveResult result;
  if (config.objective_path.empty()) {
    result = solve_feasibility(instance, config.limits);
  } else {
    std::vector<Integer> objective = load_objective(config.objective_path, instance.num_cols());
    result = minimize(instance, objective, config.limits);
  }
  out << "status=" << to_string(result.status);
  if (result.objective_value) out << " objective_value=" << result.objective_value->get_str();
  if (result.witness) out << " witness=" << join(*result.witness);
  out << '\n';
  return status_exit(result.status);
}

std::string assignment_literals(Assignment assignment, int n) {
  std::string s;
  for (int v = 1; v <= n; ++v) {
    if (v > 1) s += ',';
    s += std::to_string(assignment.value_of(v) ? v : -v);
  }
  return s;
}

int cmd_extract(const CliConfig& config, std::istream& in, std::ostream& out) {
  IpInstance instance = load_instance(config, in);
  ReductionMap map = map_from_meta(instance);
  if (map.trivial) {
    out << "status=feasible trivial=true mask=0 assignment="
        << assignment_literals(Assignment{0}, map.n) << '\n';
    return kExitOk;
  }
  if (!map.final_restore || map.final_x < 0) {
    throw UsageError("instance was reduced with --no-final-restore; extraction is disabled");
  }
  Integer value;
  if (!config.value.empty()) {
    value = parse_integer(config.value, "--value");
  } else {
    SolveResult result = solve_feasibility(instance, config.limits);
    if (result.status != SolveStatus::kFeasible) {
      out << "status=" << to_string(result.status) << '\n';
      return status_exit(result.status);
    }
    value = (*result.witness)[map.final_x];
  }
  Assignment assignment = extract_assignment(value, map);
  out << "status=feasible trivial=false final_x=" << value.get_str()
      << " mask=" << assignment.mask
      << " assignment=" << assignment_literals(assignment, map.n) << '\n';
  return kExitOk;
}

int cmd_oracle(const CliConfig& config, std::istream& in, std::ostream& out) {
  CnfFormula formula = load_formula(config, in);
  std::vector<Assignment> sat = enumerate_satisfying(formula);
  std::string masks;
  for (std::size_t i = 0; i < sat.size(); ++i) {
    if (i > 0) masks += ',';
    masks += std::to_string(sat[i].mask);
  }
  out << "satisfiable=" << bool_str(!sat.empty()) << " sat_count=" << sat.size()
      << " all_zero=" << bool_str(all_zero_satisfies(formula)) << " masks=" << masks << '\n';
  return sat.empty() ? kExitNegative : kExitOk;
}

int cmd_roundtrip(const CliConfig& config, std::istream& in, std::ostream& out) {
  if (config.no_final_restore) {
    throw UsageError("roundtrip needs the final restore block; drop --no-final-restore");
  }
  RoundtripReport report = roundtrip(load_formula(config, in), config.limits);
  if (report.status == SolveStatus::kResourceExceeded) {
    out << "status=resource_exceeded\n";
    return kExitResource;
  }
  out << "equal=" << bool_str(report.equal) << " sat_count=" << report.sat_count
      << " ip_set_size=" << report.ip_set_size << " trivial=" << bool_str(report.trivial)
      << '\n';
  return report.equal ? kExitOk : kExitNegative;
}

int cmd_gen_subsetsum(const CliConfig& config, std::ostream& out) {
  std::vector<Integer> items;
  Integer target;
  if (!config.items.empty()) {
    for (const std::string& token : config.items) items.push_back(parse_integer(token, "--items"));
    if (config.target.empty()) throw UsageError("--items requires --target");
    target = parse_integer(config.target, "--target");
  } else {
    if (!config.seed) throw UsageError("gen-subsetsum needs --items/--target or --seed");
    if (config.count < 1 || config.max_value < 1) {
      throw UsageError("--count and --max-value must be positive");
    }
    std::mt19937_64 rng(*config.seed);
    std::uniform_int_distribution<int> value(1, config.max_value);
    long sum = 0;
    for (int i = 0; i < config.count; ++i) {
      items.emplace_back(value(rng));
      sum += items.back().get_si();
    }
    target = config.target.empty()
                 ? Integer(std::uniform_int_distribution<long>(0, sum)(rng))
                 : parse_integer(config.target, "--target");
  }
  IpInstance instance = gen_subsetsum(items, target);
  if (config.output.empty()) {
    serialize(instance, out);
  } else {
    write_output(config.output, serialize(instance));
    out << "rows=" << instance.num_rows() << " cols=" << instance.num_cols()
        << " target=" << target.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_simulate(const CliConfig& config, std::istream& in, std::ostream& out) {
  SetTrace trace = simulate_sets(load_formula(config, in));
  out << "codes[0]=" << join(trace.codes[0]) << '\n';
  for (std::size_t i = 0; i < trace.scaled.size(); ++i) {
    out << "scaled[" << i + 1 << "]=" << join(trace.scaled[i]) << '\n';
    out << "checked[" << i + 1 << "]=" << join(trace.checked[i]) << '\n';
    out << "codes[" << i + 1 << "]=" << join(trace.codes[i + 1]) << '\n';
  }
  return kExitOk;
}

int dispatch(const CliConfig& config, std::istream& in, std::ostream& out) {
  const std::string& c = config.command;
  if (c == "reduce") return cmd_reduce(config, in, out);
  if (c == "validate") return cmd_validate(config, in, out);
  if (c == "solve") return cmd_solve(config, in, out);
  if (c == "extract") return cmd_extract(config, in, out);
  if (c == "oracle") return cmd_oracle(config, in, out);
  if (c == "roundtrip") return cmd_roundtrip(config, in, out);
  if (c == "gen-subsetsum") return cmd_gen_subsetsum(config, out);
  if (c == "simulate") return cmd_simulate(config, in, out);
  throw UsageError("unknown command '" + c + "'");
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CliConfig config;
  CLI::App app{"Compile 3-SAT into path-like integer programs and solve them", "pathilp"};
  app.require_subcommand(1);

  std::size_t max_states = config.limits.max_states_per_layer;
  std::uint64_t max_transitions = config.limits.max_transitions_total;
  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", config.input, std::string(what) + " ('-' for standard input)");
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-states", max_states, "State cap per DP layer")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-transitions", max_transitions, "Total transition cap")
        ->check(CLI::PositiveNumber);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("-v,--verbose", config.verbosity, "Diagnostics on standard error");
  };

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Compile a DIMACS formula to PATHILP v1");
  add_input(reduce_cmd, "DIMACS CNF file");
  reduce_cmd->add_option("-o,--output", config.output, "Write the instance here");
  reduce_cmd->add_flag("--no-final-restore", config.no_final_restore,
                       "Skip the restore rows of the last clause (disables extraction)");

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check the path-like property");
  add_input(validate_cmd, "PATHILP file");

  CLI::App* solve_cmd = app.add_subcommand("solve", "Decide feasibility or minimize");
  add_input(solve_cmd, "PATHILP file");
  add_limits(solve_cmd);
  solve_cmd->add_option("--objective", config.objective_path,
                        "File with one integer per column");

  CLI::App* extract_cmd = app.add_subcommand("extract", "Decode a satisfying assignment");
  add_input(extract_cmd, "PATHILP file written by reduce");
  add_limits(extract_cmd);
  extract_cmd->add_option("--value", config.value, "Use this value of the final column");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force satisfying assignments");
  add_input(oracle_cmd, "DIMACS CNF file");

  CLI::App* roundtrip_cmd =
      app.add_subcommand("roundtrip", "Compare decoded IP solutions with brute force");
  add_input(roundtrip_cmd, "DIMACS CNF file");
  add_limits(roundtrip_cmd);
  roundtrip_cmd->add_flag("--no-final-restore", config.no_final_restore, "Rejected");

  CLI::App* subset_cmd = app.add_subcommand("gen-subsetsum", "Emit a subset-sum instance");
  subset_cmd->add_option("--items", config.items, "Comma-separated positive items")
      ->delimiter(',');
  subset_cmd->add_option("--target", config.target, "Target sum");
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = subset_cmd->add_option("--seed", seed, "Random instance seed");
  subset_cmd->add_option("--count", config.count, "Random item count");
  subset_cmd->add_option("--max-value", config.max_value, "Largest random item");
  subset_cmd->add_option("-o,--output", config.output, "Write the instance here");

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Print the candidate set trace");
  add_input(simulate_cmd, "DIMACS CNF file");

  for (CLI::App* sub : app.get_subcommands({})) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pathilp: " << e.what() << '\n';
    return kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.limits.max_states_per_layer = max_states;
  config.limits.max_transitions_total = max_transitions;
  if (seed_opt->count() > 0) config.seed = seed;

  try {
    if (config.verbosity > 0) err << "pathilp: running " << config.command << '\n';
    return dispatch(config, in, out);
  } catch (const UsageError& e) {
    err << "pathilp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "pathilp: " << e.what() << '\n';
    out << "status=resource_exceeded\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "pathilp: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "pathilp: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace pathilp
