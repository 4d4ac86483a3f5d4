// Copyright 2026 The Lexiscribe Authors
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

#include <filesystem>
#include <string>
#include <vector>

#include "lexiscribe/config.hpp"
#include "lexiscribe/report.hpp"

namespace lexiscribe::pipeline {

/// One skipped document/provider pair under fail-soft evaluation.
struct EvalIssue {
  std::string document_id;
  std::string provider_id;
  std::string message;
};

struct EvalOutcome {
  report::EvaluationReport report;
  std::vector<EvalIssue> issues;  // empty on a clean run
};

std::string tool_version();

/// Runs the whole evaluation: manifest -> normalize -> align -> metrics
/// -> aggregation -> costing, over a bounded worker pool of
/// cfg.parallelism threads. Work distribution never affects results:
/// outputs are assembled in manifest/provider order from per-task slots.
///
/// Fail-soft by default: a failing document/provider pair becomes an
/// EvalIssue and the rest of the batch continues. With cfg.strict the
/// first failure aborts the run by throwing.
EvalOutcome evaluate(const config::RunConfig& cfg);

/// Writes report.json, table.txt, histogram.csv and histogram.svg into
/// out_dir. Each file is written to a temp name and renamed, so readers
/// never observe a half-written report.
void write_outputs(const report::EvaluationReport& rep, const std::filesystem::path& out_dir);

}  // namespace lexiscribe::pipeline
