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

#include "dmlab/lab.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

#include "dmlab/errors.hpp"

namespace dmlab {

namespace {

void extend(Label remaining, Label slots, Label floor, std::vector<Label>& prefix,
            std::vector<std::vector<Label>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  // The last slot takes everything; earlier slots leave room for the rest.
  for (Label p = floor; p * slots <= remaining; ++p) {
    if (slots == 1 && p != remaining) continue;
    prefix.push_back(p);
    extend(remaining - p, slots - 1, p, prefix, out);
    prefix.pop_back();
  }
}

struct Task {
  Instance instance;
  bool predicted;
};

// Runs the oracle over tasks on `workers` threads; row i always belongs to
// task i, so the output does not depend on scheduling.
std::vector<SweepRow> run_tasks(const std::vector<Task>& tasks, std::int64_t budget,
                                unsigned workers) {
  std::vector<std::optional<SweepRow>> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      SweepRow row{task.instance, feasibility(task.instance), task.predicted,
                   ExactStatus::kNotFound, 0, false, std::nullopt};
      if (!task.instance.magic_sum()) {
        row.oracle = ExactStatus::kNotFound;
      } else {
        auto exact = solve_exact(task.instance, budget);
        row.oracle = exact.status;
        row.nodes = exact.nodes;
        row.witness = std::move(exact.partition);
      }
      row.agree = row.oracle != ExactStatus::kBudgetExhausted &&
                  row.predicted == (row.oracle == ExactStatus::kFound);
      rows[i] = std::move(row);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, tasks.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  std::vector<SweepRow> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(std::move(*row));
  return out;
}

SweepReport assemble(SweepConfig config, std::vector<SweepRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return a.instance < b.instance;
  });
  SweepReport report;
  report.config = std::move(config);
  for (const auto& row : rows) {
    ++report.totals.rows;
    if (row.predicted) ++report.totals.predicted_feasible;
    switch (row.oracle) {
      case ExactStatus::kFound:
        ++report.totals.found;
        break;
      case ExactStatus::kNotFound:
        ++report.totals.not_found;
        break;
      case ExactStatus::kBudgetExhausted:
        ++report.totals.budget;
        break;
    }
    if (!row.agree) report.mismatches.push_back(row);
    if (report.config.kind == SweepConfig::Kind::kPrefixCondition && row.instance.k() >= 5 &&
        row.predicted && row.oracle == ExactStatus::kNotFound) {
      report.counterexample_candidates.push_back(row);
    }
  }
  report.totals.mismatches = static_cast<std::int64_t>(report.mismatches.size());
  report.totals.counterexample_candidates =
      static_cast<std::int64_t>(report.counterexample_candidates.size());
  report.rows = std::move(rows);
  return report;
}

}  // namespace

std::vector<std::vector<Label>> enumerate_size_sequences(Label n, Label k, Label min_part) {
  std::vector<std::vector<Label>> out;
  if (n < 1 || k < 1) return out;
  std::vector<Label> prefix;
  prefix.reserve(static_cast<std::size_t>(k));
  extend(n, k, std::max<Label>(min_part, 1), prefix, out);
  return out;
}

SweepReport sweep(Label n_max, std::vector<Label> k_set, Label min_part,
                  std::int64_t budget, unsigned workers) {
  if (n_max < 1 || min_part < 1 || budget < 0) {
    throw InvalidInputError("sweep bounds must be positive");
  }
  const std::set<Label> ks(k_set.begin(), k_set.end());
  if (ks.empty() || *ks.begin() < 1) throw InvalidInputError("k values must be positive");

  std::vector<Task> tasks;
  for (Label n = 1; n <= n_max; ++n) {
    for (Label k : ks) {
      if (!magic_sum(n, k)) continue;
      for (auto& sizes : enumerate_size_sequences(n, k, min_part)) {
        Instance inst(n, std::move(sizes));
        const bool predicted = feasibility(inst).predicts_feasible();
        tasks.push_back(Task{std::move(inst), predicted});
      }
    }
  }

  SweepConfig config;
  config.kind = SweepConfig::Kind::kPrefixCondition;
  config.n_max = n_max;
  config.k_set.assign(ks.begin(), ks.end());
  config.min_part = min_part;
  config.budget = budget;
  config.workers = workers;
  return assemble(std::move(config), run_tasks(tasks, budget, workers));
}

bool symmetric_criterion(Label m, Label p) {
  if (m == 1) return false;
  return m % 2 == 0 || p % 2 == 1;
}

SweepReport check_symmetric(Label max_total, std::int64_t budget, unsigned workers) {
  if (max_total < 2 || budget < 0) throw InvalidInputError("max_total must be >= 2");
  std::vector<Task> tasks;
  for (Label m = 1; 2 * m <= max_total; ++m) {
    for (Label p = 2; m * p <= max_total; ++p) {
      tasks.push_back(Task{Instance(m * p, std::vector<Label>(static_cast<std::size_t>(p), m)),
                           symmetric_criterion(m, p)});
    }
  }
  SweepConfig config;
  config.kind = SweepConfig::Kind::kSymmetric;
  config.max_total = max_total;
  config.min_part = 1;
  config.budget = budget;
  config.workers = workers;
  return assemble(std::move(config), run_tasks(tasks, budget, workers));
}

}  // namespace dmlab
