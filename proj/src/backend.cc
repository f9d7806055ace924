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

#include "docedit/backend.h"

#include <httplib.h>

#include <condition_variable>
#include <cstdlib>
#include <thread>

#include "docedit/digest.h"
#include "docedit/error.h"
#include "docedit/image.h"
#include "docedit/io.h"
#include "docedit/strings.h"
#include "json.hpp"

namespace docedit {
namespace {

using json = nlohmann::json;

long ParseInteger(std::string_view key, std::string_view value, long min_value) {
  const std::string text(value);
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || v < min_value) {
    throw Error(ErrorCode::kSchemaError, "config key '" + std::string(key) +
                                             "' needs an integer >= " + std::to_string(min_value));
  }
  return v;
}

std::string_view Unquote(std::string_view v) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    return v.substr(1, v.size() - 2);
  }
  return v;
}

bool IsSecretKey(std::string_view key) {
  const std::string lower = AsciiLower(key);
  return lower == "api_key" || lower == "apikey" || lower == "token" || lower == "password" ||
         lower == "secret" || lower == "authorization";
}

bool Retryable(int status) { return status == 429 || status >= 500; }

}  // namespace

BackendConfig ParseBackendConfig(std::string_view text, const std::filesystem::path& base_dir) {
  BackendConfig config;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty() || line.front() == '[') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kSchemaError,
                  "config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = AsciiLower(Trim(line.substr(0, eq)));
    const std::string_view value = Unquote(Trim(line.substr(eq + 1)));

    if (IsSecretKey(key)) {
      throw Error(ErrorCode::kSchemaError,
                  "config line " + std::to_string(line_no) + ": '" + key +
                      "' is not accepted; name an environment variable with api_key_env");
    }
    if (key == "endpoint") {
      config.endpoint = std::string(value);
    } else if (key == "model" || key == "model_name") {
      config.model_name = std::string(value);
    } else if (key == "api_key_env") {
      config.api_key_env = std::string(value);
    } else if (key == "timeout_seconds" || key == "timeout") {
      config.timeout = std::chrono::seconds(ParseInteger(key, value, 1));
    } else if (key == "max_retries") {
      config.max_retries = static_cast<int>(ParseInteger(key, value, 1));
    } else if (key == "backoff_initial_ms") {
      config.backoff_initial = std::chrono::milliseconds(ParseInteger(key, value, 0));
    } else if (key == "max_concurrency") {
      config.max_concurrency = static_cast<int>(ParseInteger(key, value, 1));
    } else if (key == "mode") {
      const std::string mode = AsciiLower(value);
      if (mode == "live") {
        config.mode = BackendMode::kLive;
      } else if (mode == "mock") {
        config.mode = BackendMode::kMock;
      } else {
        throw Error(ErrorCode::kSchemaError, "config mode must be 'live' or 'mock'");
      }
    } else if (key == "fixtures") {
      std::filesystem::path p{std::string(value)};
      config.fixtures = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    } else {
      throw Error(ErrorCode::kSchemaError,
                  "config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return config;
}

BackendConfig LoadBackendConfig(const std::filesystem::path& path) {
  return ParseBackendConfig(ReadFile(path), path.parent_path());
}

std::string DescribeConfig(const BackendConfig& config) {
  std::string out = config.mode == BackendMode::kLive ? "live" : "mock";
  if (config.mode == BackendMode::kLive) {
    out += " endpoint=" + config.endpoint + " model=" + config.model_name +
           " key_env=" + config.api_key_env +
           " timeout_ms=" + std::to_string(config.timeout.count()) +
           " attempts=" + std::to_string(config.max_retries) +
           " concurrency=" + std::to_string(config.max_concurrency);
  } else {
    out += " fixtures=" + config.fixtures.string();
  }
  return out;
}

MockBackend MockBackend::FromFile(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaError, path.string() + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kSchemaError, path.string() + ": fixtures must be a JSON object");
  }
  std::map<std::string, std::string> fixtures;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string()) {
      throw Error(ErrorCode::kSchemaError, path.string() + ": fixture " + key + " is not a string");
    }
    fixtures.emplace(key, value.get<std::string>());
  }
  return MockBackend(std::move(fixtures));
}

std::string MockBackend::Complete(const Prompt& prompt) {
  const std::string key = PromptFingerprint(prompt);
  auto it = fixtures_.find(key);
  if (it == fixtures_.end()) throw Error(ErrorCode::kFixtureMiss, "no fixture for prompt " + key);
  return it->second;
}

std::string RecordingBackend::Complete(const Prompt& prompt) {
  std::string response = inner_->Complete(prompt);
  const std::string key = PromptFingerprint(prompt);
  std::lock_guard<std::mutex> lock(mu_);
  fixtures_[key] = response;
  return response;
}

std::map<std::string, std::string> RecordingBackend::fixtures() const {
  std::lock_guard<std::mutex> lock(mu_);
  return fixtures_;
}

std::string RecordingBackend::FixturesJson() const {
  json doc = json::object();
  for (const auto& [key, value] : fixtures()) doc[key] = value;
  return doc.dump(2) + "\n";
}

// Bounds in-flight requests; waiters are admitted in no particular order.
struct HttpBackend::Gate {
  explicit Gate(int limit) : free(limit) {}

  void Acquire() {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return free > 0; });
    --free;
  }
  void Release() {
    {
      std::lock_guard<std::mutex> lock(mu);
      ++free;
    }
    cv.notify_one();
  }

  std::mutex mu;
  std::condition_variable cv;
  int free;
};

HttpBackend::HttpBackend(BackendConfig config)
    : config_(std::move(config)), gate_(std::make_unique<Gate>(std::max(1, config_.max_concurrency))) {
  const std::size_t scheme = config_.endpoint.find("://");
  if (scheme == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint must look like scheme://host/path");
  }
  const std::size_t slash = config_.endpoint.find('/', scheme + 3);
  origin_ = config_.endpoint.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : config_.endpoint.substr(slash);
}

HttpBackend::~HttpBackend() = default;

std::string HttpBackend::Complete(const Prompt& prompt) {
  const char* key = std::getenv(config_.api_key_env.c_str());
  if (key == nullptr || *key == '\0') {
    throw Error(ErrorCode::kAuthError,
                "environment variable " + config_.api_key_env + " is not set");
  }

  json request = {{"model", config_.model_name},
                  {"text", prompt.text},
                  {"temperature", prompt.params.temperature},
                  {"max_tokens", prompt.params.max_tokens}};
  if (prompt.image) request["image"] = Base64Encode(EncodePng(*prompt.image));
  const std::string body = request.dump();
  const httplib::Headers headers = {{"Authorization", std::string("Bearer ") + key}};

  gate_->Acquire();
  struct Releaser {
    Gate* gate;
    ~Releaser() { gate->Release(); }
  } releaser{gate_.get()};

  httplib::Client client(origin_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  std::chrono::milliseconds backoff = config_.backoff_initial;
  std::string last_failure;
  bool last_was_timeout = false;
  const int attempts = std::max(1, config_.max_retries);
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    const auto started = std::chrono::steady_clock::now();
    httplib::Result result = client.Post(path_, headers, body, "application/json");
    if (!result) {
      const httplib::Error err = result.error();
      const auto elapsed = std::chrono::steady_clock::now() - started;
      last_was_timeout = err == httplib::Error::ConnectionTimeout ||
                         (err == httplib::Error::Read && elapsed >= config_.timeout);
      last_failure = httplib::to_string(err);
      continue;
    }
    const int status = result->status;
    if (status == 401 || status == 403) {
      throw Error(ErrorCode::kAuthError, "endpoint rejected credentials (HTTP " +
                                             std::to_string(status) + ")");
    }
    if (status >= 200 && status < 300) return ParseCompletionBody(result->body);
    last_was_timeout = false;
    last_failure = "HTTP " + std::to_string(status);
    if (!Retryable(status)) break;
  }
  throw Error(last_was_timeout ? ErrorCode::kTimeout : ErrorCode::kNetworkError,
              "request to " + origin_ + path_ + " failed: " + last_failure);
}

std::string ParseCompletionBody(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kNetworkError, std::string("reply is not JSON: ") + e.what());
  }
  if (doc.is_object()) {
    if (auto it = doc.find("text"); it != doc.end() && it->is_string()) return it->get<std::string>();
    if (auto it = doc.find("choices"); it != doc.end() && it->is_array() && !it->empty()) {
      const json& first = (*it)[0];
      if (first.contains("message") && first["message"].contains("content") &&
          first["message"]["content"].is_string()) {
        return first["message"]["content"].get<std::string>();
      }
      if (first.contains("text") && first["text"].is_string()) return first["text"].get<std::string>();
    }
    if (auto it = doc.find("candidates"); it != doc.end() && it->is_array() && !it->empty()) {
      const json& content = (*it)[0].value("content", json::object());
      if (content.contains("parts") && content["parts"].is_array()) {
        std::string out;
        for (const json& part : content["parts"]) {
          if (part.contains("text") && part["text"].is_string()) out += part["text"].get<std::string>();
        }
        return out;
      }
    }
  }
  throw Error(ErrorCode::kNetworkError, "reply has no recognizable completion text");
}

std::unique_ptr<LmmBackend> MakeBackend(const BackendConfig& config) {
  if (config.mode == BackendMode::kMock) {
    if (config.fixtures.empty()) {
      return std::make_unique<MockBackend>(std::map<std::string, std::string>{});
    }
    return std::make_unique<MockBackend>(MockBackend::FromFile(config.fixtures));
  }
  return std::make_unique<HttpBackend>(config);
}

}  // namespace docedit
