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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dmlab/solver.hpp"

namespace dmlab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // infeasible, not magic, or sweep mismatch
  kExitUsage = 2,
  kExitInconclusive = 3,
};

enum class Command { kCheck, kSolve, kLabel, kVerify, kSweep, kSymmetric };
enum class Format { kText, kJson };

struct CliConfig {
  Command command = Command::kCheck;
  Label n = 0;
  std::optional<Label> k;
  std::vector<Label> sizes;
  SearchParams search;
  Format format = Format::kText;
  std::optional<std::string> output_path;

  // verify
  std::string input_path = "-";
  bool closed = false;

  // sweep / symmetric
  Label n_max = 0;
  std::vector<Label> k_set;
  Label min_part = 2;
  Label max_total = 0;
  std::int64_t budget = 100'000'000;
  unsigned workers = 1;
};

// Parses argv-style arguments (without the program name) and runs the
// command. Returns the process exit code.
int main_with_args(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err);

// Runs an already parsed configuration.
int run(const CliConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dmlab::cli
