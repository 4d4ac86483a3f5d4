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

#include "lexiscribe/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <ctime>
#include <fstream>
#include <optional>
#include <set>
#include <thread>

#include "lexiscribe/aligner.hpp"
#include "lexiscribe/corpus.hpp"
#include "lexiscribe/errors.hpp"
#include "lexiscribe/metrics.hpp"
#include "lexiscribe/normalizer.hpp"
#include "lexiscribe/sonnex.hpp"

namespace lexiscribe::pipeline {

namespace {

std::string iso_utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

struct Task {
  const DocumentEntry* document = nullptr;
  std::string provider;
  std::string hypothesis_path;
};

struct TaskResult {
  std::optional<metrics::DocumentMetrics> metrics;
  std::optional<EvalIssue> issue;
};

TaskResult run_task(const Task& task, const config::RunConfig& cfg,
                    const sonnex::RuleSet& rules) {
  TaskResult result;
  try {
    std::string ref_text = read_transcript(task.document->reference_path);
    std::string hyp_text = read_transcript(task.hypothesis_path);
    auto [ref_tokens, hyp_tokens] = normalize_pair(ref_text, hyp_text, cfg.normalizer);
    AlignmentResult alignment = align(ref_tokens, hyp_tokens);
    metrics::DocumentMetrics doc;
    doc.document_id = task.document->id;
    doc.provider = task.provider;
    doc.wer = metrics::compute_wer(alignment);
    doc.substitutions = metrics::substitution_records(alignment, rules);
    result.metrics = std::move(doc);
  } catch (const Error& e) {
    result.issue = EvalIssue{task.document->id, task.provider, e.what()};
  }
  return result;
}

nlohmann::json config_echo(const config::RunConfig& cfg, const sonnex::RuleSet& rules,
                           const std::vector<std::string>& providers) {
  // Deliberately excludes parallelism and output paths: neither may
  // influence results, so neither belongs in the reproducibility record.
  return nlohmann::json{
      {"manifest", cfg.manifest_path},
      {"providers", providers},
      {"bin_width", cfg.bin_width.to_decimal_string(6)},
      {"ruleset_version", rules.version()},
      {"normalizer",
       {{"lowercase", cfg.normalizer.lowercase},
        {"strip_punctuation", cfg.normalizer.strip_punctuation},
        {"split_clitics", cfg.normalizer.split_clitics},
        {"unicode_form", cfg.normalizer.unicode_form},
        {"number_policy", cfg.normalizer.number_policy}}}};
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IoError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::string tool_version() { return "0.1.0"; }

EvalOutcome evaluate(const config::RunConfig& cfg) {
  if (cfg.manifest_path.empty())
    throw ConfigError("no manifest configured; set manifest= in the config or pass --manifest");

  CorpusManifest manifest = load_manifest(cfg.manifest_path);
  sonnex::RuleSet rules = sonnex::RuleSet::load(
      cfg.rules_path.empty() ? sonnex::default_rules_path() : cfg.rules_path,
      cfg.exceptions_path.empty() ? sonnex::default_exceptions_path() : cfg.exceptions_path);

  std::vector<std::string> providers = cfg.providers;
  if (providers.empty()) providers = manifest.providers;
  std::sort(providers.begin(), providers.end());
  providers.erase(std::unique(providers.begin(), providers.end()), providers.end());

  // Task list in manifest x provider order; results land in per-task
  // slots, so scheduling cannot reorder anything downstream.
  std::vector<Task> tasks;
  for (const DocumentEntry& doc : manifest.documents) {
    for (const std::string& provider : providers) {
      auto it = doc.hypothesis_paths.find(provider);
      if (it == doc.hypothesis_paths.end()) continue;  // "not evaluated", by contract
      tasks.push_back(Task{&doc, provider, it->second});
    }
  }

  std::vector<TaskResult> results(tasks.size());
  int degree = std::max(1, std::min<int>(cfg.parallelism, static_cast<int>(tasks.size())));
  if (degree <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_task(tasks[i], cfg, rules);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        results[i] = run_task(tasks[i], cfg, rules);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(degree);
    for (int t = 0; t < degree; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  EvalOutcome outcome;
  for (const TaskResult& r : results)
    if (r.issue) outcome.issues.push_back(*r.issue);
  if (cfg.strict && !outcome.issues.empty()) {
    const EvalIssue& first = outcome.issues.front();
    throw Error("evaluation failed (strict): " + first.document_id + "/" + first.provider_id +
                ": " + first.message);
  }

  report::EvaluationReport& rep = outcome.report;
  rep.schema_version = report::kSchemaVersion;
  rep.tool_version = tool_version();
  rep.generated_at = iso_utc_now();
  rep.config_echo = config_echo(cfg, rules, providers);

  for (const std::string& provider : providers) {
    report::ProviderReport pr;
    pr.provider_id = provider;

    std::vector<metrics::DocumentMetrics> judgement_docs, commission_docs;
    Duration total;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].provider != provider || !results[i].metrics) continue;
      pr.documents.push_back(*results[i].metrics);
      total = total + tasks[i].document->duration;
      if (tasks[i].document->corpus_tag == CorpusTag::kJudgement)
        judgement_docs.push_back(*results[i].metrics);
      else
        commission_docs.push_back(*results[i].metrics);
    }
    pr.minutes = total.minutes();

    if (!judgement_docs.empty())
      pr.by_corpus["judgement"] = metrics::aggregate(judgement_docs, cfg.bin_width);
    if (!commission_docs.empty())
      pr.by_corpus["commission"] = metrics::aggregate(commission_docs, cfg.bin_width);
    if (!pr.documents.empty())
      pr.by_corpus["all"] = metrics::aggregate(pr.documents, cfg.bin_width);

    auto pricing = cfg.pricing.find(provider);
    if (pricing != cfg.pricing.end())
      pr.cost_usd = costing::estimate_cost(pr.minutes, pricing->second);

    rep.providers.push_back(std::move(pr));
  }
  return outcome;
}

void write_outputs(const report::EvaluationReport& rep, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  report::export_json(rep, out_dir / "report.json");
  write_text_atomic(out_dir / "table.txt", report::render_all_tables(rep));
  write_text_atomic(out_dir / "histogram.csv", report::render_histogram_csv(rep));
  write_text_atomic(out_dir / "histogram.svg", report::render_histogram_svg(rep));
}

}  // namespace lexiscribe::pipeline
