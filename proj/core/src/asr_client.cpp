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

#include "lexiscribe/asr_client.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "lexiscribe/errors.hpp"

namespace lexiscribe::asr {

namespace {

std::string read_file_raw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
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

std::string sanitize_component(const std::string& text) {
  std::string out;
  for (char c : text) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '-' || c == '_' || c == '.';
    out.push_back(keep ? c : '_');
  }
  return out;
}

nlohmann::json job_to_json(const TranscriptionJob& job) {
  return nlohmann::json{{"job_id", job.job_id},
                        {"document_id", job.document_id},
                        {"provider_id", job.provider_id},
                        {"state", to_string(job.state)},
                        {"attempts", job.attempts},
                        {"remote_id", job.remote_id},
                        {"transcript_path", job.transcript_path},
                        {"error", job.error}};
}

TranscriptionJob job_from_json(const nlohmann::json& j) {
  TranscriptionJob job;
  job.job_id = j.at("job_id").get<std::string>();
  job.document_id = j.at("document_id").get<std::string>();
  job.provider_id = j.at("provider_id").get<std::string>();
  job.state = job_state_from_string(j.at("state").get<std::string>());
  job.attempts = j.at("attempts").get<int>();
  job.remote_id = j.value("remote_id", "");
  job.transcript_path = j.value("transcript_path", "");
  job.error = j.value("error", "");
  return job;
}

}  // namespace

std::string to_string(JobState state) {
  switch (state) {
    case JobState::kPending: return "pending";
    case JobState::kRunning: return "running";
    case JobState::kSucceeded: return "succeeded";
    case JobState::kFailed: return "failed";
  }
  return "pending";
}

JobState job_state_from_string(const std::string& text) {
  if (text == "pending") return JobState::kPending;
  if (text == "running") return JobState::kRunning;
  if (text == "succeeded") return JobState::kSucceeded;
  if (text == "failed") return JobState::kFailed;
  throw IoError("unknown job state '" + text + "'");
}

// ---------------------------------------------------------------------------
// FilesystemAdapter

std::string FilesystemAdapter::start(const DocumentEntry& document,
                                     const std::string& provider_id) {
  auto it = document.hypothesis_paths.find(provider_id);
  if (it == document.hypothesis_paths.end())
    throw AdapterUnavailableError("document '" + document.id + "' has no hypothesis for provider '" +
                                  provider_id + "'");
  return it->second;
}

AdapterStatus FilesystemAdapter::status(const std::string& remote_id) {
  std::error_code ec;
  if (!std::filesystem::exists(remote_id, ec) || ec)
    return {JobState::kFailed, "transcript file missing: " + remote_id};
  if (std::filesystem::file_size(remote_id, ec) == 0 || ec)
    return {JobState::kFailed, "transcript file empty: " + remote_id};
  return {JobState::kSucceeded, ""};
}

std::string FilesystemAdapter::fetch(const std::string& remote_id) {
  return read_file_raw(remote_id);
}

// ---------------------------------------------------------------------------
// ScriptedAdapter

ScriptedAdapter::ScriptedAdapter(std::vector<Step> steps, std::string transcript)
    : steps_(std::move(steps)), transcript_(std::move(transcript)) {
  if (steps_.empty()) steps_.push_back(Step{false, JobState::kSucceeded});
}

std::string ScriptedAdapter::start(const DocumentEntry& document, const std::string& provider_id) {
  return "scripted:" + document.id + ":" + provider_id;
}

AdapterStatus ScriptedAdapter::status(const std::string&) {
  std::lock_guard<std::mutex> lock(mutex_);
  std::size_t index = std::min(static_cast<std::size_t>(status_calls_), steps_.size() - 1);
  ++status_calls_;
  const Step& step = steps_[index];
  if (step.unavailable) throw AdapterUnavailableError("scripted adapter unavailable");
  return {step.state, step.state == JobState::kFailed ? "scripted failure" : ""};
}

std::string ScriptedAdapter::fetch(const std::string&) { return transcript_; }

// ---------------------------------------------------------------------------
// HttpAdapter

struct HttpAdapter::Impl {
  explicit Impl(const std::string& base) : client(base) {
    client.set_connection_timeout(2, 0);
    client.set_read_timeout(5, 0);
  }
  httplib::Client client;
};

HttpAdapter::HttpAdapter(std::string base_url) : impl_(std::make_unique<Impl>(base_url)) {}
HttpAdapter::~HttpAdapter() = default;

std::string HttpAdapter::start(const DocumentEntry& document, const std::string& provider_id) {
  nlohmann::json body{{"document_id", document.id}, {"provider_id", provider_id}};
  auto res = impl_->client.Post("/jobs", body.dump(), "application/json");
  if (!res) throw AdapterUnavailableError("POST /jobs failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw AdapterUnavailableError("POST /jobs returned status " + std::to_string(res->status));
  try {
    return nlohmann::json::parse(res->body).at("job_id").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw AdapterUnavailableError(std::string("bad /jobs response: ") + e.what());
  }
}

AdapterStatus HttpAdapter::status(const std::string& remote_id) {
  auto res = impl_->client.Get("/jobs/" + remote_id);
  if (!res)
    throw AdapterUnavailableError("GET /jobs/" + remote_id +
                                  " failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw AdapterUnavailableError("GET /jobs/" + remote_id + " returned status " +
                                  std::to_string(res->status));
  try {
    auto parsed = nlohmann::json::parse(res->body);
    AdapterStatus st;
    st.state = job_state_from_string(parsed.at("state").get<std::string>());
    st.message = parsed.value("message", "");
    return st;
  } catch (const nlohmann::json::exception& e) {
    throw AdapterUnavailableError(std::string("bad job status response: ") + e.what());
  }
}

std::string HttpAdapter::fetch(const std::string& remote_id) {
  auto res = impl_->client.Get("/jobs/" + remote_id + "/transcript");
  if (!res)
    throw AdapterUnavailableError("GET transcript failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw AdapterUnavailableError("GET transcript returned status " + std::to_string(res->status));
  return res->body;
}

// ---------------------------------------------------------------------------
// RetryPolicy

std::chrono::milliseconds RetryPolicy::backoff(int retry_index) const {
  if (retry_index < 0) retry_index = 0;
  double wait = static_cast<double>(base.count()) * std::pow(factor, retry_index);
  double capped = std::min(wait, static_cast<double>(cap.count()));
  return std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(capped)));
}

Sleeper real_sleeper() {
  return [](std::chrono::milliseconds ms) { std::this_thread::sleep_for(ms); };
}

// ---------------------------------------------------------------------------
// JobStore

JobStore::JobStore(std::filesystem::path run_directory) : dir_(std::move(run_directory)) {
  std::filesystem::create_directories(dir_);
  std::filesystem::create_directories(dir_ / "transcripts");
  journal_path_ = dir_ / "jobs.jsonl";
  if (!std::filesystem::exists(journal_path_)) return;

  std::ifstream in(journal_path_);
  if (!in) throw IoError("cannot read job journal " + journal_path_.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      TranscriptionJob job = job_from_json(nlohmann::json::parse(line));
      jobs_[job.job_id] = std::move(job);  // later transitions win
    } catch (const nlohmann::json::exception& e) {
      throw IoError("job journal " + journal_path_.string() + ":" + std::to_string(line_no) +
                    " is corrupt: " + e.what());
    }
  }
}

std::map<std::string, TranscriptionJob> JobStore::jobs() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return jobs_;
}

std::string JobStore::job_id_for(const std::string& document_id, const std::string& provider_id) {
  return document_id + ":" + provider_id;
}

void JobStore::commit(const TranscriptionJob& job) {
  std::lock_guard<std::mutex> lock(mutex_);
  std::ofstream out(journal_path_, std::ios::app);
  if (!out) throw IoError("cannot append to job journal " + journal_path_.string());
  out << job_to_json(job).dump() << '\n';
  out.flush();
  if (!out) throw IoError("short write to job journal " + journal_path_.string());
  jobs_[job.job_id] = job;
}

std::filesystem::path JobStore::transcript_file(const TranscriptionJob& job) const {
  return dir_ / "transcripts" /
         (sanitize_component(job.document_id) + "__" + sanitize_component(job.provider_id) +
          ".txt");
}

void JobStore::attempt_once(TranscriptionJob& job, TranscriptAdapter& adapter) {
  job.attempts += 1;
  if (job.remote_id.empty()) {
    job.error = "job has no remote handle; submit it again";
    return;
  }
  AdapterStatus st;
  try {
    st = adapter.status(job.remote_id);
  } catch (const AdapterUnavailableError& e) {
    job.error = e.what();  // transient; retry loop decides what happens next
    return;
  }
  switch (st.state) {
    case JobState::kSucceeded: {
      std::string text;
      try {
        text = adapter.fetch(job.remote_id);
      } catch (const AdapterUnavailableError& e) {
        job.error = e.what();
        return;
      }
      if (text.empty()) {
        job.state = JobState::kFailed;
        job.error = "provider returned an empty transcript";
        return;
      }
      std::filesystem::path path = transcript_file(job);
      write_file_atomic(path, text);
      job.transcript_path = path.string();
      job.state = JobState::kSucceeded;
      job.error.clear();
      return;
    }
    case JobState::kFailed:
      job.state = JobState::kFailed;
      job.error = st.message.empty() ? "provider reported failure" : st.message;
      return;
    case JobState::kRunning:
      job.state = JobState::kRunning;
      return;
    case JobState::kPending:
      return;
  }
}

TranscriptionJob JobStore::submit(const DocumentEntry& document, const std::string& provider_id,
                                  TranscriptAdapter& adapter) {
  TranscriptionJob job;
  job.job_id = job_id_for(document.id, provider_id);
  job.document_id = document.id;
  job.provider_id = provider_id;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = jobs_.find(job.job_id);
    if (it != jobs_.end() && it->second.terminal())
      throw DuplicateJobError("job '" + job.job_id + "' already finished as " +
                              to_string(it->second.state));
    if (it != jobs_.end()) job = it->second;  // resume a pending job
  }
  if (job.remote_id.empty()) {
    commit(job);  // journal the registration before contacting the adapter
    try {
      job.remote_id = adapter.start(document, provider_id);
    } catch (const AdapterUnavailableError& e) {
      job.error = e.what();
      commit(job);
      throw;
    }
    commit(job);
  }
  attempt_once(job, adapter);
  commit(job);
  return job;
}

TranscriptionJob JobStore::poll_until_done(const std::string& job_id, TranscriptAdapter& adapter,
                                           const RetryPolicy& policy, const Sleeper& sleep) {
  TranscriptionJob job;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = jobs_.find(job_id);
    if (it == jobs_.end()) throw Error("unknown job id '" + job_id + "'");
    job = it->second;
  }
  if (job.terminal()) return job;

  while (!job.terminal() && job.attempts < policy.max_attempts) {
    sleep(policy.backoff(job.attempts - 1));
    attempt_once(job, adapter);
    commit(job);
  }
  if (!job.terminal()) {
    job.state = JobState::kFailed;
    std::string cause = job.error.empty() ? "job still not finished" : job.error;
    job.error =
        "max attempts exceeded (" + std::to_string(policy.max_attempts) + "): " + cause;
    commit(job);
  }
  return job;
}

}  // namespace lexiscribe::asr
