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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexiscribe/asr_client.hpp"
#include "lexiscribe/config.hpp"
#include "lexiscribe/corpus.hpp"
#include "lexiscribe/costing.hpp"
#include "lexiscribe/errors.hpp"
#include "lexiscribe/pipeline.hpp"
#include "lexiscribe/report.hpp"
#include "lexiscribe/sonnex.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEvalError = 1;
constexpr int kExitConfigError = 2;

using lexiscribe::Rational;

struct GlobalOptions {
  std::string config_path;  // --config flag, else LEXISCRIBE_CONFIG
};

lexiscribe::config::RunConfig load_run_config(const GlobalOptions& global) {
  std::string path = global.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("LEXISCRIBE_CONFIG")) path = env;
  }
  if (path.empty()) return lexiscribe::config::default_config();
  return lexiscribe::config::load_config(path);
}

// Flag overrides shared by eval/cost/fetch.
struct CommonOverrides {
  std::string manifest;
  std::vector<std::string> providers;
  std::string rules_path;
  std::string exceptions_path;
};

void apply_common(const CommonOverrides& ov, lexiscribe::config::RunConfig& cfg) {
  if (!ov.manifest.empty()) cfg.manifest_path = ov.manifest;
  if (!ov.providers.empty()) cfg.providers = ov.providers;
  if (!ov.rules_path.empty()) cfg.rules_path = ov.rules_path;
  if (!ov.exceptions_path.empty()) cfg.exceptions_path = ov.exceptions_path;
}

int cmd_eval(const lexiscribe::config::RunConfig& cfg) {
  lexiscribe::pipeline::EvalOutcome outcome = lexiscribe::pipeline::evaluate(cfg);
  lexiscribe::pipeline::write_outputs(outcome.report, cfg.output_dir);

  std::cout << lexiscribe::report::render_all_tables(outcome.report);
  for (const auto& provider : outcome.report.providers) {
    if (provider.cost_usd) {
      std::cout << "estimated cost " << provider.provider_id << ": "
                << lexiscribe::costing::format_usd(*provider.cost_usd) << " USD\n";
    }
  }
  std::cout << "outputs written to " << cfg.output_dir << "\n";

  if (!outcome.issues.empty()) {
    std::cerr << outcome.issues.size() << " document/provider pair(s) skipped:\n";
    for (const auto& issue : outcome.issues)
      std::cerr << "  " << issue.document_id << "/" << issue.provider_id << ": " << issue.message
                << "\n";
    return kExitEvalError;
  }
  return kExitOk;
}

int cmd_phonemize(const lexiscribe::config::RunConfig& cfg, const std::string& word) {
  if (word.empty()) {
    std::cerr << "error: phonemize needs a non-empty word\n";
    return kExitConfigError;
  }
  auto rules = lexiscribe::sonnex::RuleSet::load(
      cfg.rules_path.empty() ? lexiscribe::sonnex::default_rules_path() : cfg.rules_path,
      cfg.exceptions_path.empty() ? lexiscribe::sonnex::default_exceptions_path()
                                  : cfg.exceptions_path);
  std::cout << rules.phonemize(word).joined() << "\n";
  return kExitOk;
}

int cmd_cost(const lexiscribe::config::RunConfig& cfg, const std::string& minutes_text,
             const std::string& provider) {
  Rational minutes(0);
  if (!minutes_text.empty()) {
    minutes = Rational::from_decimal_string(minutes_text);
  } else if (!cfg.manifest_path.empty()) {
    lexiscribe::CorpusManifest manifest = lexiscribe::load_manifest(cfg.manifest_path);
    minutes = lexiscribe::sum_durations(manifest).minutes();
  } else {
    throw lexiscribe::ConfigError("cost needs --minutes or a manifest");
  }
  auto pricing = cfg.pricing.find(provider);
  if (pricing == cfg.pricing.end())
    throw lexiscribe::ConfigError("no pricing for provider '" + provider + "'");
  Rational cost = lexiscribe::costing::estimate_cost(minutes, pricing->second);
  std::cout << lexiscribe::costing::format_usd(cost) << " USD\n";
  return kExitOk;
}

int cmd_fetch(const lexiscribe::config::RunConfig& cfg, const std::string& run_dir,
              const std::string& adapter_name, const std::string& base_url) {
  if (cfg.manifest_path.empty())
    throw lexiscribe::ConfigError("fetch needs a manifest (config manifest= or --manifest)");
  lexiscribe::CorpusManifest manifest = lexiscribe::load_manifest(cfg.manifest_path);

  std::unique_ptr<lexiscribe::asr::TranscriptAdapter> adapter;
  if (adapter_name == "filesystem") {
    adapter = std::make_unique<lexiscribe::asr::FilesystemAdapter>();
  } else if (adapter_name == "http") {
    if (base_url.empty())
      throw lexiscribe::ConfigError("the http adapter needs --base-url");
    adapter = std::make_unique<lexiscribe::asr::HttpAdapter>(base_url);
  } else {
    throw lexiscribe::ConfigError("unknown adapter '" + adapter_name +
                                  "' (expected filesystem or http)");
  }

  std::vector<std::string> providers =
      cfg.providers.empty() ? manifest.providers : cfg.providers;
  lexiscribe::asr::JobStore store{run_dir};
  lexiscribe::asr::RetryPolicy policy;
  int failed = 0;
  for (const auto& doc : manifest.documents) {
    for (const auto& provider : providers) {
      if (adapter_name == "filesystem" && !doc.hypothesis_paths.count(provider)) continue;
      std::string job_id = lexiscribe::asr::JobStore::job_id_for(doc.id, provider);
      lexiscribe::asr::TranscriptionJob job;
      try {
        job = store.submit(doc, provider, *adapter);
        if (!job.terminal()) job = store.poll_until_done(job_id, *adapter, policy);
      } catch (const lexiscribe::DuplicateJobError&) {
        job = store.jobs().at(job_id);  // already terminal from an earlier run
      } catch (const lexiscribe::AdapterUnavailableError& e) {
        std::cerr << job_id << ": " << e.what() << "\n";
        ++failed;
        continue;
      }
      std::cout << job_id << ": " << lexiscribe::asr::to_string(job.state)
                << " (attempts: " << job.attempts << ")\n";
      if (job.state == lexiscribe::asr::JobState::kFailed) {
        std::cerr << job_id << ": " << job.error << "\n";
        ++failed;
      }
    }
  }
  return failed == 0 ? kExitOk : kExitEvalError;
}

int cmd_report(const std::string& from_path, const std::string& out_dir) {
  lexiscribe::report::EvaluationReport rep =
      lexiscribe::report::import_json(from_path);
  lexiscribe::pipeline::write_outputs(rep, out_dir);
  std::cout << lexiscribe::report::render_all_tables(rep);
  std::cout << "outputs written to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexiscribe: transcript evaluation toolkit for French legal ASR"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--config", global.config_path,
                 "Run config file (TOML); falls back to $LEXISCRIBE_CONFIG");

  CommonOverrides common;
  std::string output_dir;
  int parallelism = 0;
  std::string bin_width_text;
  bool strict = false;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate hypothesis transcripts against references");
  eval->add_option("--manifest", common.manifest, "Corpus manifest file");
  eval->add_option("--provider", common.providers, "Provider id to evaluate (repeatable)");
  eval->add_option("--out", output_dir, "Output directory");
  eval->add_option("--parallelism", parallelism, "Worker pool size")->check(CLI::Range(1, 256));
  eval->add_option("--bin-width", bin_width_text, "Histogram bin width (decimal)");
  eval->add_option("--rules", common.rules_path, "Rule table path");
  eval->add_option("--exceptions", common.exceptions_path, "Exception lexicon path");
  eval->add_flag("--strict", strict, "Abort on the first document error");

  std::string word;
  CLI::App* phonemize = app.add_subcommand("phonemize", "Print the phonemization of one word");
  phonemize->add_option("word", word, "Word to phonemize")->required();
  phonemize->add_option("--rules", common.rules_path, "Rule table path");
  phonemize->add_option("--exceptions", common.exceptions_path, "Exception lexicon path");

  std::string minutes_text;
  std::string provider;
  CLI::App* cost = app.add_subcommand("cost", "Estimate transcription cost");
  cost->add_option("--minutes", minutes_text, "Audio minutes (decimal)");
  cost->add_option("--manifest", common.manifest, "Derive minutes from this manifest");
  cost->add_option("--provider", provider, "Provider id")->required();

  std::string run_dir = "run";
  std::string adapter_name = "filesystem";
  std::string base_url;
  CLI::App* fetch = app.add_subcommand("fetch", "Fetch hypothesis transcripts via an adapter");
  fetch->add_option("--manifest", common.manifest, "Corpus manifest file");
  fetch->add_option("--provider", common.providers, "Provider id (repeatable)");
  fetch->add_option("--run-dir", run_dir, "Job journal directory");
  fetch->add_option("--adapter", adapter_name, "filesystem or http");
  fetch->add_option("--base-url", base_url, "Mock service base URL for the http adapter");

  std::string from_path;
  CLI::App* rerender = app.add_subcommand("report", "Re-render outputs from a report.json");
  rerender->add_option("--from", from_path, "Existing report.json")->required();
  rerender->add_option("--out", output_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return kExitConfigError;
  }

  try {
    lexiscribe::config::RunConfig cfg = load_run_config(global);
    apply_common(common, cfg);
    if (!output_dir.empty()) cfg.output_dir = output_dir;
    if (parallelism > 0) cfg.parallelism = parallelism;
    if (strict) cfg.strict = true;
    if (!bin_width_text.empty()) {
      cfg.bin_width = Rational::from_decimal_string(bin_width_text);
      if (!(Rational(0) < cfg.bin_width))
        throw lexiscribe::ConfigError("bin width must be positive");
    }

    if (eval->parsed()) return cmd_eval(cfg);
    if (phonemize->parsed()) return cmd_phonemize(cfg, word);
    if (cost->parsed()) return cmd_cost(cfg, minutes_text, provider);
    if (fetch->parsed()) return cmd_fetch(cfg, run_dir, adapter_name, base_url);
    if (rerender->parsed()) return cmd_report(from_path, output_dir.empty() ? "out" : output_dir);
    std::cerr << "error: no subcommand\n";
    return kExitConfigError;
  } catch (const lexiscribe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const lexiscribe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEvalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEvalError;
  }
}
