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

#include "dmlab/json_io.hpp"

#include "dmlab/errors.hpp"

namespace dmlab {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json instance_fields(const Instance& inst) {
  Json doc;
  doc["n"] = inst.n();
  doc["k"] = inst.k();
  doc["sizes"] = inst.sizes();
  return doc;
}

Json row_to_json(const SweepRow& row) {
  Json doc = instance_fields(row.instance);
  doc["verdict"] = to_string(row.verdict.status);
  doc["predicted"] = row.predicted;
  doc["oracle"] = to_string(row.oracle);
  doc["nodes"] = row.nodes;
  doc["agree"] = row.agree;
  doc["witness"] = row.witness ? blocks_to_json(*row.witness) : Json(nullptr);
  return doc;
}

Json rows_to_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(row_to_json(row));
  return out;
}

}  // namespace

Json blocks_to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& block : p.blocks()) out.push_back(block);
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json doc;
  doc["status"] = to_string(v.status);
  doc["magic_sum"] = optional_json(v.magic_sum);
  doc["proven"] = v.proven();
  doc["failing_index"] = v.failure ? Json(v.failure->j) : Json(nullptr);
  doc["lhs"] = v.failure ? Json(v.failure->lhs) : Json(nullptr);
  doc["rhs"] = v.failure ? Json(v.failure->rhs) : Json(nullptr);
  doc["reason"] = v.reason;
  return doc;
}

Json magic_check_to_json(const MagicCheck& check) {
  Json doc;
  doc["is_magic"] = check.is_magic;
  doc["constant"] = optional_json(check.constant);
  if (check.witness) {
    doc["witness"] = {{"u", check.witness->u},
                      {"v", check.witness->v},
                      {"sum_u", check.witness->sum_u},
                      {"sum_v", check.witness->sum_v}};
  } else {
    doc["witness"] = nullptr;
  }
  doc["degenerate"] = check.degenerate;
  doc["cross_checked"] = check.cross_checked;
  return doc;
}

Json check_document(const Instance& inst, const Verdict& v) {
  Json doc = instance_fields(inst);
  Json verdict = verdict_to_json(v);
  for (auto& [key, value] : verdict.items()) {
    if (key != "proven") doc[key] = value;
  }
  doc["proven"] = v.proven();
  return doc;
}

Json solve_document(const Instance& inst, const SolveResult& result) {
  Json doc = instance_fields(inst);
  doc["status"] = to_string(result.status);
  doc["magic_sum"] = optional_json(result.verdict.magic_sum);
  doc["blocks"] = result.partition ? blocks_to_json(*result.partition) : Json(nullptr);
  doc["graph_constant"] = result.status == SolveStatus::kSolved
                              ? Json(total_sum(inst.n()) - *result.verdict.magic_sum)
                              : Json(nullptr);
  doc["stats"] = {{"method", result.stats.method},
                  {"nodes", result.stats.nodes},
                  {"swaps", result.stats.swaps},
                  {"restarts", result.stats.restarts}};
  doc["verdict"] = verdict_to_json(result.verdict);
  return doc;
}

Json sweep_document(const SweepReport& report) {
  const auto& c = report.config;
  const bool symmetric = c.kind == SweepConfig::Kind::kSymmetric;
  Json config;
  config["kind"] = symmetric ? "symmetric" : "prefix_condition";
  if (symmetric) {
    config["max_total"] = c.max_total;
  } else {
    config["n_max"] = c.n_max;
    config["k_set"] = c.k_set;
    config["min_part"] = c.min_part;
  }
  config["budget"] = c.budget;

  const auto& t = report.totals;
  Json doc;
  doc["config"] = std::move(config);
  doc["totals"] = {{"rows", t.rows},
                   {"predicted_feasible", t.predicted_feasible},
                   {"found", t.found},
                   {"not_found", t.not_found},
                   {"budget", t.budget},
                   {"mismatches", t.mismatches},
                   {"counterexample_candidates", t.counterexample_candidates}};
  doc["mismatches"] = rows_to_json(report.mismatches);
  doc["counterexample_candidates"] = rows_to_json(report.counterexample_candidates);
  doc["rows"] = rows_to_json(report.rows);
  return doc;
}

Partition partition_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidInputError("expected a JSON object");
  const auto it = doc.find("blocks");
  if (it == doc.end() || !it->is_array()) {
    throw InvalidInputError("document has no \"blocks\" array");
  }
  std::vector<std::vector<Label>> blocks;
  Label count = 0;
  for (const auto& block : *it) {
    if (!block.is_array()) throw InvalidInputError("each block must be an array");
    auto& out = blocks.emplace_back();
    for (const auto& x : block) {
      if (!x.is_number_integer()) throw InvalidInputError("labels must be integers");
      out.push_back(x.get<Label>());
      ++count;
    }
  }
  Label n = count;
  if (auto nit = doc.find("n"); nit != doc.end() && !nit->is_null()) {
    if (!nit->is_number_integer()) throw InvalidInputError("\"n\" must be an integer");
    n = nit->get<Label>();
  }
  return Partition::from_blocks(n, std::move(blocks));
}

}  // namespace dmlab
