// Copyright 2026 The dmlab Authors
//
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dmlab/errors.hpp"
#include "dmlab/feasibility.hpp"
#include "dmlab/graphs.hpp"
#include "dmlab/json_io.hpp"
#include "dmlab/lab.hpp"

namespace dmlab::cli {

namespace {

// Text mode is a rendering of the JSON document: a headline, then one
// "key: value" line per top-level field.
std::string render_value(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    const bool nested = !v.empty() && v.front().is_array();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (nested) {
        if (i) out += ' ';
        out += '{' + render_value(v[i]) + '}';
      } else {
        if (i) out += ',';
        out += render_value(v[i]);
      }
    }
    return out;
  }
  if (v.is_object()) {
    std::string out;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!out.empty()) out += ' ';
      out += it.key() + '=' + render_value(it.value());
    }
    return out;
  }
  return v.dump();
}

void render_fields(std::ostream& out, const Json& doc) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    out << it.key() << ": " << render_value(it.value()) << '\n';
  }
}

void render_rows(std::ostream& out, const char* title, const Json& rows) {
  out << title << ": " << rows.size() << '\n';
  for (const auto& row : rows) {
    out << "  n=" << row["n"].get<Label>() << " k=" << row["k"].get<Label>()
        << " sizes=(" << render_value(row["sizes"]) << ")"
        << " verdict=" << row["verdict"].get<std::string>()
        << " oracle=" << row["oracle"].get<std::string>()
        << " agree=" << (row["agree"].get<bool>() ? "yes" : "no") << '\n';
  }
}

void emit(const CliConfig& config, const Json& doc, const std::string& headline,
          std::ostream& out, bool sweep_layout = false) {
  if (config.format == Format::kJson) {
    out << doc.dump(2) << '\n';
    return;
  }
  out << headline << '\n';
  if (!sweep_layout) {
    render_fields(out, doc);
    return;
  }
  out << "config: " << render_value(doc["config"]) << '\n';
  out << "totals: " << render_value(doc["totals"]) << '\n';
  render_rows(out, "mismatches", doc["mismatches"]);
  render_rows(out, "counterexample_candidates", doc["counterexample_candidates"]);
  render_rows(out, "rows", doc["rows"]);
}

Json optional_json_constant(const MagicCheck& check) {
  return check.constant ? Json(*check.constant) : Json(nullptr);
}

Instance instance_from(const CliConfig& config) {
  if (config.sizes.empty()) throw InvalidInputError("--sizes is required");
  if (config.k && *config.k != static_cast<Label>(config.sizes.size())) {
    throw InvalidInputError("--k is " + std::to_string(*config.k) + " but " +
                            std::to_string(config.sizes.size()) + " sizes were given");
  }
  return Instance(config.n, config.sizes);
}

int run_check(const CliConfig& config, std::ostream& out) {
  const Instance inst = instance_from(config);
  const Verdict v = feasibility(inst);
  const std::string headline =
      (v.infeasible() ? "infeasible: " : v.proven() ? "feasible: " : "conjectured feasible: ") +
      v.reason;
  emit(config, check_document(inst, v), headline, out);
  return v.infeasible() ? kExitNegative : kExitOk;
}

int solve_exit(const SolveResult& result) {
  switch (result.status) {
    case SolveStatus::kSolved:
      return kExitOk;
    case SolveStatus::kProvenInfeasible:
      return kExitNegative;
    case SolveStatus::kBudgetExhausted:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

std::string solve_headline(const Instance& inst, const SolveResult& result) {
  switch (result.status) {
    case SolveStatus::kSolved:
      return "solved: " + std::to_string(inst.k()) + " blocks of sum " +
             std::to_string(*result.verdict.magic_sum) + " (" + result.stats.method + ")";
    case SolveStatus::kProvenInfeasible:
      return "infeasible: " + (result.verdict.infeasible()
                                   ? result.verdict.reason
                                   : std::string("exact search exhausted"));
    case SolveStatus::kBudgetExhausted:
      return "inconclusive: search budget exhausted";
  }
  return "";
}

int run_solve(const CliConfig& config, std::ostream& out) {
  const Instance inst = instance_from(config);
  const SolveResult result = solve(inst, config.search);
  emit(config, solve_document(inst, result), solve_headline(inst, result), out);
  return solve_exit(result);
}

int run_label(const CliConfig& config, std::ostream& out) {
  const Instance inst = instance_from(config);
  const SolveResult result = solve(inst, config.search);
  Json doc = solve_document(inst, result);
  std::string headline = solve_headline(inst, result);
  if (result.status == SolveStatus::kSolved) {
    const auto g = labeling_from_partition(*result.partition);
    const MagicCheck check = verify_distance_magic(g);
    Json parts = Json::array();
    const auto labels = g.parts();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      parts.push_back({{"part", i + 1}, {"size", g.sizes()[i]}, {"labels", labels[i]}});
    }
    doc["parts"] = std::move(parts);
    doc["magic_check"] = magic_check_to_json(check);
    doc["graph_constant"] = optional_json_constant(check);
    headline = "distance magic labeling of K_{" + render_value(Json(inst.sizes())) +
               "} with constant " + render_value(doc["graph_constant"]);
  }
  if (config.format == Format::kText && doc.contains("parts")) {
    out << headline << '\n';
    for (const auto& part : doc["parts"]) {
      out << "V_" << part["part"].get<std::size_t>() << " (size "
          << part["size"].get<Label>() << "): " << render_value(part["labels"]) << '\n';
    }
    Json rest = doc;
    rest.erase("parts");
    render_fields(out, rest);
  } else {
    emit(config, doc, headline, out);
  }
  return solve_exit(result);
}

int run_verify(const CliConfig& config, std::istream& in, std::ostream& out) {
  Json input;
  try {
    if (config.input_path == "-") {
      input = Json::parse(in);
    } else {
      std::ifstream file(config.input_path);
      if (!file) throw InvalidInputError("cannot open " + config.input_path);
      input = Json::parse(file);
    }
  } catch (const Json::parse_error& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
  const Partition p = partition_from_json(input);
  const MagicCheck check = config.closed ? verify_closed_magic_cycle(p)
                                         : verify_distance_magic(labeling_from_partition(p));
  Json doc;
  doc["n"] = p.n();
  doc["k"] = p.k();
  doc["graph"] = config.closed ? "cycle_blowup_closed" : "complete_multipartite_open";
  const Json fields = magic_check_to_json(check);
  for (const auto& [key, value] : fields.items()) doc[key] = value;

  std::string headline;
  if (check.is_magic) {
    headline = "magic: constant " + std::to_string(*check.constant) +
               (check.degenerate ? " (degenerate: C_3 blow-up is complete)" : "");
  } else {
    headline = "not magic: vertices " + std::to_string(check.witness->u) + " and " +
               std::to_string(check.witness->v) + " see " +
               std::to_string(check.witness->sum_u) + " vs " +
               std::to_string(check.witness->sum_v);
  }
  emit(config, doc, headline, out);
  return check.is_magic ? kExitOk : kExitNegative;
}

int report_exit(const SweepReport& report) {
  if (!report.resolved()) return kExitInconclusive;
  return report.clean() ? kExitOk : kExitNegative;
}

std::string report_headline(const SweepReport& report) {
  const auto& t = report.totals;
  return "instances: " + std::to_string(t.rows) + ", mismatches: " +
         std::to_string(t.mismatches) + ", unresolved: " + std::to_string(t.budget) +
         ", counterexample candidates: " + std::to_string(t.counterexample_candidates);
}

int run_sweep(const CliConfig& config, std::ostream& out) {
  if (config.k_set.empty()) throw InvalidInputError("--k is required");
  const SweepReport report =
      sweep(config.n_max, config.k_set, config.min_part, config.budget, config.workers);
  emit(config, sweep_document(report), report_headline(report), out, true);
  return report_exit(report);
}

int run_symmetric(const CliConfig& config, std::ostream& out) {
  const SweepReport report = check_symmetric(config.max_total, config.budget, config.workers);
  emit(config, sweep_document(report), report_headline(report), out, true);
  return report_exit(report);
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int code = kExitUsage;
  try {
    config.search.validate();
    switch (config.command) {
      case Command::kCheck:
        code = run_check(config, buffer);
        break;
      case Command::kSolve:
        code = run_solve(config, buffer);
        break;
      case Command::kLabel:
        code = run_label(config, buffer);
        break;
      case Command::kVerify:
        code = run_verify(config, in, buffer);
        break;
      case Command::kSweep:
        code = run_sweep(config, buffer);
        break;
      case Command::kSymmetric:
        code = run_symmetric(config, buffer);
        break;
    }
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      err << "error: cannot write " << *config.output_path << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

int main_with_args(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{"Equitable partitions of [n] and distance magic labelings of complete "
               "multipartite graphs"};
  app.require_subcommand(1);
  CliConfig config;
  std::string format = "text";
  std::string output;
  std::int64_t plateau = -1;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", output, "Write to this file instead of stdout");
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Ground-set size")->required();
    sub->add_option("--k", config.k, "Number of blocks (defaults to the number of sizes)");
    sub->add_option("--sizes", config.sizes, "Comma-separated block sizes")
        ->required()
        ->delimiter(',');
    add_output(sub);
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--seed", config.search.seed, "PRNG seed (0 = deterministic greedy)");
    sub->add_option("--max-restarts", config.search.max_restarts);
    sub->add_option("--max-plateau-steps", plateau, "Default: 2n");
    sub->add_option("--node-budget", config.search.exact_node_budget);
    sub->add_option("--exact-cutoff", config.search.exact_cutoff_n,
                    "Largest n handed to the exact fallback");
  };

  auto* check = app.add_subcommand("check", "Decide feasibility from the prefix condition");
  add_instance(check);
  auto* solve_cmd = app.add_subcommand("solve", "Find an equitable partition");
  add_instance(solve_cmd);
  add_search(solve_cmd);
  auto* label = app.add_subcommand("label", "Solve and print the distance magic labeling");
  add_instance(label);
  add_search(label);
  auto* verify = app.add_subcommand("verify", "Check a partition (JSON) for the magic property");
  verify->add_option("--input", config.input_path, "JSON file, or - for stdin");
  verify->add_flag("--closed", config.closed, "Closed check on the C_k clique blow-up");
  add_output(verify);
  auto* sweep_cmd = app.add_subcommand("sweep", "Prefix condition vs. exact oracle");
  sweep_cmd->add_option("--nmax", config.n_max)->required();
  sweep_cmd->add_option("--k", config.k_set, "Comma-separated k values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--min-part", config.min_part);
  sweep_cmd->add_option("--budget", config.budget, "Node budget per instance");
  sweep_cmd->add_option("--workers", config.workers);
  add_output(sweep_cmd);
  auto* symmetric = app.add_subcommand("symmetric", "H_{m,p} criterion vs. exact oracle");
  symmetric->add_option("--max-total", config.max_total)->required();
  symmetric->add_option("--budget", config.budget);
  symmetric->add_option("--workers", config.workers);
  add_output(symmetric);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::pair<CLI::App*, Command> commands[] = {
      {check, Command::kCheck},      {solve_cmd, Command::kSolve},
      {label, Command::kLabel},      {verify, Command::kVerify},
      {sweep_cmd, Command::kSweep},  {symmetric, Command::kSymmetric}};
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  config.format = format == "json" ? Format::kJson : Format::kText;
  if (!output.empty()) config.output_path = output;
  if (plateau >= 0) config.search.max_plateau_steps = plateau;
  return run(config, in, out, err);
}

}  // namespace dmlab::cli
