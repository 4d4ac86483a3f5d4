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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lexiscribe/metrics.hpp"
#include "lexiscribe/rational.hpp"

namespace lexiscribe::report {

inline constexpr int kSchemaVersion = 1;

/// Everything evaluated for one provider. Corpus keys are "judgement",
/// "commission" and "all"; a key is present only when at least one
/// document of that corpus was evaluated for the provider.
struct ProviderReport {
  std::string provider_id;
  std::map<std::string, metrics::CorpusStats> by_corpus;
  std::vector<metrics::DocumentMetrics> documents;  // sorted by document id
  Rational minutes;                                 // audio minutes evaluated
  std::optional<Rational> cost_usd;                 // absent without a pricing entry
};

/// The complete, self-contained evaluation record. Renderers only project
/// fields out of it; nothing is recomputed at render time.
struct EvaluationReport {
  int schema_version = kSchemaVersion;
  std::string tool_version;
  std::string generated_at;  // ISO 8601 UTC; the only field exempt from determinism
  nlohmann::json config_echo = nlohmann::json::object();
  std::vector<ProviderReport> providers;  // sorted by provider id
};

/// Fixed-width text table for one corpus selection ("judgement",
/// "commission" or "all"): micro block with pooled Ins./Del./Subst./WER/
/// #Words per provider, then a macro block of per-document means.
/// Throws MissingSelectionError when no provider carries the selection.
std::string render_table(const EvaluationReport& report, const std::string& selection);

/// All selections present in the report, concatenated.
std::string render_all_tables(const EvaluationReport& report);

/// CSV with header provider,bin_lower,bin_upper,count,ratio; one row per
/// provider per bin of the provider's "all" histogram.
std::string render_histogram_csv(const EvaluationReport& report);

/// Static grouped bar chart: one group per distance bin, one bar per
/// provider, ratio of substitutions on the y axis in [0, 1].
std::string render_histogram_svg(const EvaluationReport& report);

nlohmann::json to_json(const EvaluationReport& report);
EvaluationReport from_json(const nlohmann::json& j);

/// Writes the schema-versioned JSON export atomically (temp file+rename).
void export_json(const EvaluationReport& report, const std::filesystem::path& path);

/// Reads an export back. Throws VersionError on a schema mismatch and
/// IoError when the file is unreadable or not JSON.
EvaluationReport import_json(const std::filesystem::path& path);

/// Structural equality via the JSON form; used by round-trip tests.
bool reports_equal(const EvaluationReport& a, const EvaluationReport& b);

}  // namespace lexiscribe::report
