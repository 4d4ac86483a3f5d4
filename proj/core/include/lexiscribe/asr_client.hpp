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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lexiscribe/corpus.hpp"

namespace lexiscribe::asr {

enum class JobState { kPending, kRunning, kSucceeded, kFailed };

std::string to_string(JobState state);
JobState job_state_from_string(const std::string& text);

/// One transcription request for a document/provider pair.
struct TranscriptionJob {
  std::string job_id;  // "<document_id>:<provider_id>"
  std::string document_id;
  std::string provider_id;
  JobState state = JobState::kPending;
  int attempts = 0;
  std::string remote_id;         // adapter-side handle
  std::string transcript_path;   // set once Succeeded
  std::string error;             // set when Failed (or last transient cause)

  bool terminal() const { return state == JobState::kSucceeded || state == JobState::kFailed; }
};

struct AdapterStatus {
  JobState state = JobState::kRunning;
  std::string message;
};

/// Minimal submit/status/fetch contract over a transcript source. Real
/// cloud integrations plug in here; the toolkit itself ships a local-file
/// adapter and an HTTP mock. Implementations must tolerate concurrent
/// calls for distinct remote ids.
class TranscriptAdapter {
 public:
  virtual ~TranscriptAdapter() = default;
  virtual std::string name() const = 0;
  /// Starts a job and returns the adapter-side handle.
  /// Throws AdapterUnavailableError when the source cannot be reached.
  virtual std::string start(const DocumentEntry& document, const std::string& provider_id) = 0;
  virtual AdapterStatus status(const std::string& remote_id) = 0;
  /// Returns the transcript text of a Succeeded job.
  virtual std::string fetch(const std::string& remote_id) = 0;
};

/// Serves transcripts that already exist on disk (the manifest's
/// hypothesis paths). start() resolves instantly, so jobs typically
/// succeed on the first attempt.
class FilesystemAdapter : public TranscriptAdapter {
 public:
  std::string name() const override { return "filesystem"; }
  std::string start(const DocumentEntry& document, const std::string& provider_id) override;
  AdapterStatus status(const std::string& remote_id) override;
  std::string fetch(const std::string& remote_id) override;
};

/// Test double with a programmable status sequence. Each status() call
/// consumes one step; the last step repeats forever. Steps marked
/// unavailable throw AdapterUnavailableError instead of returning.
class ScriptedAdapter : public TranscriptAdapter {
 public:
  struct Step {
    bool unavailable = false;
    JobState state = JobState::kRunning;
  };

  ScriptedAdapter(std::vector<Step> steps, std::string transcript);

  std::string name() const override { return "scripted"; }
  std::string start(const DocumentEntry& document, const std::string& provider_id) override;
  AdapterStatus status(const std::string& remote_id) override;
  std::string fetch(const std::string& remote_id) override;

  int status_calls() const { return status_calls_; }

 private:
  std::vector<Step> steps_;
  std::string transcript_;
  int status_calls_ = 0;
  std::mutex mutex_;
};

/// Speaks the documented mock protocol: POST /jobs, GET /jobs/{id},
/// GET /jobs/{id}/transcript. Network failures surface as
/// AdapterUnavailableError, which the retry loop treats as transient.
class HttpAdapter : public TranscriptAdapter {
 public:
  explicit HttpAdapter(std::string base_url);
  ~HttpAdapter() override;

  std::string name() const override { return "http"; }
  std::string start(const DocumentEntry& document, const std::string& provider_id) override;
  AdapterStatus status(const std::string& remote_id) override;
  std::string fetch(const std::string& remote_id) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Exponential backoff: wait min(base * factor^k, cap) before retry k+2.
struct RetryPolicy {
  std::chrono::milliseconds base{1000};
  double factor = 2.0;
  std::chrono::milliseconds cap{8000};
  int max_attempts = 4;

  std::chrono::milliseconds backoff(int retry_index) const;
};

/// Injection point so tests can record waits instead of sleeping.
using Sleeper = std::function<void(std::chrono::milliseconds)>;
Sleeper real_sleeper();

/// Persistent job registry for one run directory. Every state transition
/// is appended to jobs.jsonl and flushed before anything acts on it, so
/// reloading after a crash reproduces the map exactly and terminal states
/// are never lost. Writes serialize through one mutex (single-writer
/// journal); jobs for distinct documents may be driven concurrently.
class JobStore {
 public:
  explicit JobStore(std::filesystem::path run_directory);

  const std::filesystem::path& run_directory() const { return dir_; }
  std::map<std::string, TranscriptionJob> jobs() const;

  static std::string job_id_for(const std::string& document_id, const std::string& provider_id);

  /// Registers and starts a job, then gives the adapter one immediate
  /// status/fetch cycle (attempt 1). Throws DuplicateJobError when the
  /// document/provider pair already reached a terminal state.
  TranscriptionJob submit(const DocumentEntry& document, const std::string& provider_id,
                          TranscriptAdapter& adapter);

  /// Drives a job to a terminal state under the retry policy, waiting
  /// between attempts via the sleeper. A job that exhausts its attempts
  /// is Failed with the cause recorded. Terminal jobs return unchanged.
  TranscriptionJob poll_until_done(const std::string& job_id, TranscriptAdapter& adapter,
                                   const RetryPolicy& policy, const Sleeper& sleep = real_sleeper());

 private:
  void commit(const TranscriptionJob& job);
  void attempt_once(TranscriptionJob& job, TranscriptAdapter& adapter);
  std::filesystem::path transcript_file(const TranscriptionJob& job) const;

  std::filesystem::path dir_;
  std::filesystem::path journal_path_;
  std::map<std::string, TranscriptionJob> jobs_;
  mutable std::mutex mutex_;
};

}  // namespace lexiscribe::asr
