// Copyright 2026 The DocEdit Tools Authors.
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

// Model backends. A backend maps a Prompt to response text; the live
// backend speaks JSON over HTTP, the mock backend replays recorded
// responses keyed by PromptFingerprint.
//
// Secrets: the API key is looked up in the environment at request time
// under the variable named by BackendConfig::api_key_env. It is never
// stored in BackendConfig and never written by DescribeConfig.

#ifndef DOCEDIT_BACKEND_H_
#define DOCEDIT_BACKEND_H_

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "docedit/prompts.h"

namespace docedit {

enum class BackendMode { kLive, kMock };

struct BackendConfig {
  std::string endpoint;  // scheme://host[:port]/path
  std::string model_name;
  std::string api_key_env = "DOCEDIT_API_KEY";
  std::chrono::milliseconds timeout{60'000};
  int max_retries = 3;  // attempts in total, including the first
  std::chrono::milliseconds backoff_initial{1'000};
  int max_concurrency = 4;
  BackendMode mode = BackendMode::kMock;
  std::filesystem::path fixtures;  // mock mode only
};

// Parses `key = value` lines; `#` starts a comment, `[section]` lines and
// surrounding quotes are ignored. Keys: endpoint, model, api_key_env,
// timeout_seconds, max_retries, backoff_initial_ms, max_concurrency, mode,
// fixtures. A relative fixtures path is resolved against `base_dir`.
// Throws Error(kSchemaError), including for any key that would carry a
// secret inline.
BackendConfig ParseBackendConfig(std::string_view text, const std::filesystem::path& base_dir = {});
BackendConfig LoadBackendConfig(const std::filesystem::path& path);

// One-line human-readable summary. Safe to log.
std::string DescribeConfig(const BackendConfig& config);

class LmmBackend {
 public:
  virtual ~LmmBackend() = default;

  // Must be safe to call from several threads at once.
  virtual std::string Complete(const Prompt& prompt) = 0;
};

class MockBackend : public LmmBackend {
 public:
  explicit MockBackend(std::map<std::string, std::string> fixtures)
      : fixtures_(std::move(fixtures)) {}

  // JSON object mapping fingerprint -> response text.
  // Throws Error(kIoError / kSchemaError).
  static MockBackend FromFile(const std::filesystem::path& path);

  // Throws Error(kFixtureMiss).
  std::string Complete(const Prompt& prompt) override;

  const std::map<std::string, std::string>& fixtures() const { return fixtures_; }

 private:
  std::map<std::string, std::string> fixtures_;
};

// Wraps another backend and remembers every exchange, so a live session can
// be replayed later through MockBackend.
class RecordingBackend : public LmmBackend {
 public:
  explicit RecordingBackend(LmmBackend* inner) : inner_(inner) {}

  std::string Complete(const Prompt& prompt) override;

  std::map<std::string, std::string> fixtures() const;

  // Serialized form read by MockBackend::FromFile.
  std::string FixturesJson() const;

 private:
  LmmBackend* inner_;
  mutable std::mutex mu_;
  std::map<std::string, std::string> fixtures_;
};

// POSTs {model, text, image (base64 PNG), temperature, max_tokens} and reads
// the reply from `text`, OpenAI-style `choices` or Gemini-style
// `candidates`. 429, 5xx and transport failures are retried with
// exponential backoff; 401/403 fail at once with kAuthError.
class HttpBackend : public LmmBackend {
 public:
  explicit HttpBackend(BackendConfig config);
  ~HttpBackend() override;

  // Throws Error(kAuthError / kNetworkError / kTimeout).
  std::string Complete(const Prompt& prompt) override;

 private:
  struct Gate;

  BackendConfig config_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;
  std::unique_ptr<Gate> gate_;
};

// Live or mock according to config.mode. Mock mode loads the fixture file
// and never opens a socket.
std::unique_ptr<LmmBackend> MakeBackend(const BackendConfig& config);

// Reads the response text out of a provider reply body.
// Throws Error(kNetworkError) when no known shape matches.
std::string ParseCompletionBody(std::string_view body);

}  // namespace docedit

#endif  // DOCEDIT_BACKEND_H_
