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

#include <gtest/gtest.h>
#include <httplib.h>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "docedit/digest.h"
#include "docedit/error.h"
#include "docedit/io.h"
#include "fixture_corpus.h"
#include "json.hpp"

namespace docedit {
namespace {

using ::docedit::testing::TempDir;
using json = nlohmann::json;

constexpr char kKeyEnv[] = "DOCEDIT_BACKEND_TEST_KEY";
constexpr char kKeyValue[] = "test-secret-value-123";

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

TEST(BackendConfigTest, ParsesAllKeys) {
  const BackendConfig c = ParseBackendConfig(
      "# backend settings\n"
      "[backend]\n"
      "endpoint = \"http://127.0.0.1:8080/v1/complete\"\n"
      "model = gpt-vision   # trailing comment\n"
      "api_key_env = MY_KEY\n"
      "timeout_seconds = 30\n"
      "max_retries = 5\n"
      "backoff_initial_ms = 250\n"
      "max_concurrency = 2\n"
      "mode = LIVE\n"
      "fixtures = fx/fixtures.json\n",
      "/base");
  EXPECT_EQ(c.endpoint, "http://127.0.0.1:8080/v1/complete");
  EXPECT_EQ(c.model_name, "gpt-vision");
  EXPECT_EQ(c.api_key_env, "MY_KEY");
  EXPECT_EQ(c.timeout, std::chrono::seconds(30));
  EXPECT_EQ(c.max_retries, 5);
  EXPECT_EQ(c.backoff_initial, std::chrono::milliseconds(250));
  EXPECT_EQ(c.max_concurrency, 2);
  EXPECT_EQ(c.mode, BackendMode::kLive);
  EXPECT_EQ(c.fixtures, std::filesystem::path("/base/fx/fixtures.json"));
}

TEST(BackendConfigTest, DefaultsAndAbsoluteFixtures) {
  const BackendConfig c = ParseBackendConfig("fixtures = /abs/f.json", "/base");
  EXPECT_EQ(c.fixtures, std::filesystem::path("/abs/f.json"));
  EXPECT_EQ(c.mode, BackendMode::kMock);
  EXPECT_EQ(c.api_key_env, "DOCEDIT_API_KEY");
  EXPECT_EQ(c.max_retries, 3);
}

TEST(BackendConfigTest, SecretsAreNeverAccepted) {
  for (const char* key : {"api_key", "API_KEY", "apikey", "token", "password", "secret",
                          "authorization"}) {
    const std::string text = std::string(key) + " = " + kKeyValue;
    try {
      ParseBackendConfig(text);
      ADD_FAILURE() << key;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSchemaError);
      EXPECT_EQ(std::string(e.what()).find(kKeyValue), std::string::npos) << "secret echoed";
    }
  }
}

TEST(BackendConfigTest, Errors) {
  EXPECT_EQ(CodeOf([] { ParseBackendConfig("colour = blue"); }), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf([] { ParseBackendConfig("just words"); }), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf([] { ParseBackendConfig("max_retries = 0"); }), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf([] { ParseBackendConfig("timeout = 3s"); }), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf([] { ParseBackendConfig("mode = replay"); }), ErrorCode::kSchemaError);
}

TEST(BackendConfigTest, DescriptionNeverContainsKey) {
  ::setenv(kKeyEnv, kKeyValue, 1);
  BackendConfig c;
  c.mode = BackendMode::kLive;
  c.endpoint = "http://h/p";
  c.api_key_env = kKeyEnv;
  const std::string d = DescribeConfig(c);
  EXPECT_NE(d.find(kKeyEnv), std::string::npos);
  EXPECT_EQ(d.find(kKeyValue), std::string::npos);
}

TEST(MockBackendTest, LooksUpByFingerprint) {
  const Prompt p{"hello", std::nullopt, {}};
  MockBackend mock({{PromptFingerprint(p), "world"}});
  EXPECT_EQ(mock.Complete(p), "world");
  EXPECT_EQ(CodeOf([&] { mock.Complete({"other", std::nullopt, {}}); }), ErrorCode::kFixtureMiss);
}

class EchoBackend : public LmmBackend {
 public:
  std::string Complete(const Prompt& prompt) override { return "echo:" + prompt.text; }
};

TEST(RecordingBackendTest, RecordedFixturesReplayThroughMock) {
  EchoBackend echo;
  RecordingBackend recorder(&echo);
  const Prompt a{"a", std::nullopt, {}};
  const Prompt b{"b", RasterImage(3, 3), {}};
  EXPECT_EQ(recorder.Complete(a), "echo:a");
  EXPECT_EQ(recorder.Complete(b), "echo:b");
  EXPECT_EQ(recorder.fixtures().size(), 2u);

  TempDir dir("recording");
  WriteFileAtomic(dir.path() / "fx.json", recorder.FixturesJson());
  MockBackend mock = MockBackend::FromFile(dir.path() / "fx.json");
  EXPECT_EQ(mock.Complete(a), "echo:a");
  EXPECT_EQ(mock.Complete(b), "echo:b");
  EXPECT_EQ(recorder.FixturesJson(), recorder.FixturesJson());
}

TEST(MockBackendTest, FromFileErrors) {
  TempDir dir("mockfile");
  WriteFileAtomic(dir.path() / "list.json", "[1, 2]");
  WriteFileAtomic(dir.path() / "num.json", "{\"k\": 3}");
  WriteFileAtomic(dir.path() / "bad.json", "{");
  EXPECT_EQ(CodeOf([&] { MockBackend::FromFile(dir.path() / "list.json"); }), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf([&] { MockBackend::FromFile(dir.path() / "num.json"); }), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf([&] { MockBackend::FromFile(dir.path() / "bad.json"); }), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf([&] { MockBackend::FromFile(dir.path() / "none.json"); }), ErrorCode::kIoError);
}

TEST(MakeBackendTest, MockWithoutFixturesMissesEverything) {
  BackendConfig c;
  const std::unique_ptr<LmmBackend> b = MakeBackend(c);
  EXPECT_EQ(CodeOf([&] { b->Complete({"x", std::nullopt, {}}); }), ErrorCode::kFixtureMiss);
}

TEST(ParseCompletionBodyTest, Shapes) {
  EXPECT_EQ(ParseCompletionBody(R"({"text": "a"})"), "a");
  EXPECT_EQ(ParseCompletionBody(R"({"choices": [{"message": {"content": "b"}}]})"), "b");
  EXPECT_EQ(ParseCompletionBody(R"({"choices": [{"text": "c"}]})"), "c");
  EXPECT_EQ(ParseCompletionBody(R"({"candidates": [{"content": {"parts": [{"text": "d"}, {"text": "e"}]}}]})"),
            "de");
  EXPECT_EQ(CodeOf([] { ParseCompletionBody("not json"); }), ErrorCode::kNetworkError);
  EXPECT_EQ(CodeOf([] { ParseCompletionBody(R"({"other": 1})"); }), ErrorCode::kNetworkError);
}

// Local server whose handler is swapped per test.
class HttpBackendTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ::setenv(kKeyEnv, kKeyValue, 1);
    server_.Post("/v1/complete", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      const int now = ++in_flight_;
      int seen = max_in_flight_.load();
      while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
      }
      handler_(req, res);
      --in_flight_;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  void TearDown() override {
    server_.stop();
    thread_.join();
  }

  BackendConfig Config() const {
    BackendConfig c;
    c.mode = BackendMode::kLive;
    c.endpoint = "http://127.0.0.1:" + std::to_string(port_) + "/v1/complete";
    c.model_name = "test-model";
    c.api_key_env = kKeyEnv;
    c.timeout = std::chrono::milliseconds(2000);
    c.max_retries = 3;
    c.backoff_initial = std::chrono::milliseconds(5);
    return c;
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::function<void(const httplib::Request&, httplib::Response&)> handler_;
  std::atomic<int> requests_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
};

TEST_F(HttpBackendTest, RequestShapeAndAuthHeader) {
  json seen;
  std::string auth;
  handler_ = [&](const httplib::Request& req, httplib::Response& res) {
    seen = json::parse(req.body);
    auth = req.get_header_value("Authorization");
    res.set_content(R"({"text": "ok"})", "application/json");
  };
  HttpBackend backend(Config());
  RasterImage img(2, 2, kRed);
  EXPECT_EQ(backend.Complete({"describe", img, {}}), "ok");
  EXPECT_EQ(auth, std::string("Bearer ") + kKeyValue);
  EXPECT_EQ(seen["model"], "test-model");
  EXPECT_EQ(seen["text"], "describe");
  EXPECT_EQ(seen["temperature"], 0.0);
  EXPECT_EQ(seen["max_tokens"], 4000);
  EXPECT_EQ(seen["image"], Base64Encode(EncodePng(img)));
  EXPECT_EQ(seen.dump().find(kKeyValue), std::string::npos) << "key leaked into body";
}

TEST_F(HttpBackendTest, RetriesTransientFailures) {
  handler_ = [&](const httplib::Request&, httplib::Response& res) {
    if (requests_ < 3) {
      res.status = requests_ == 1 ? 503 : 429;
      return;
    }
    res.set_content(R"({"choices": [{"message": {"content": "third time"}}]})", "application/json");
  };
  HttpBackend backend(Config());
  EXPECT_EQ(backend.Complete({"x", std::nullopt, {}}), "third time");
  EXPECT_EQ(requests_, 3);
}

TEST_F(HttpBackendTest, GivesUpAfterMaxAttempts) {
  handler_ = [&](const httplib::Request&, httplib::Response& res) { res.status = 500; };
  HttpBackend backend(Config());
  EXPECT_EQ(CodeOf([&] { backend.Complete({"x", std::nullopt, {}}); }), ErrorCode::kNetworkError);
  EXPECT_EQ(requests_, 3);
}

TEST_F(HttpBackendTest, ClientErrorsAreNotRetried) {
  handler_ = [&](const httplib::Request&, httplib::Response& res) { res.status = 400; };
  HttpBackend backend(Config());
  EXPECT_EQ(CodeOf([&] { backend.Complete({"x", std::nullopt, {}}); }), ErrorCode::kNetworkError);
  EXPECT_EQ(requests_, 1);
}

TEST_F(HttpBackendTest, RejectedCredentialsFailFast) {
  handler_ = [&](const httplib::Request&, httplib::Response& res) { res.status = 401; };
  HttpBackend backend(Config());
  EXPECT_EQ(CodeOf([&] { backend.Complete({"x", std::nullopt, {}}); }), ErrorCode::kAuthError);
  EXPECT_EQ(requests_, 1);
}

TEST_F(HttpBackendTest, MissingKeyFailsBeforeAnyRequest) {
  handler_ = [&](const httplib::Request&, httplib::Response& res) { res.set_content("{}", "application/json"); };
  BackendConfig c = Config();
  c.api_key_env = "DOCEDIT_BACKEND_TEST_UNSET_KEY";
  ::unsetenv(c.api_key_env.c_str());
  HttpBackend backend(c);
  EXPECT_EQ(CodeOf([&] { backend.Complete({"x", std::nullopt, {}}); }), ErrorCode::kAuthError);
  ::setenv(c.api_key_env.c_str(), "", 1);
  EXPECT_EQ(CodeOf([&] { backend.Complete({"x", std::nullopt, {}}); }), ErrorCode::kAuthError);
  EXPECT_EQ(requests_, 0);
}

TEST_F(HttpBackendTest, SlowServerTimesOut) {
  handler_ = [&](const httplib::Request&, httplib::Response& res) {
    std::this_thread::sleep_for(std::chrono::milliseconds(600));
    res.set_content(R"({"text": "late"})", "application/json");
  };
  BackendConfig c = Config();
  c.timeout = std::chrono::milliseconds(150);
  c.max_retries = 2;
  HttpBackend backend(c);
  EXPECT_EQ(CodeOf([&] { backend.Complete({"x", std::nullopt, {}}); }), ErrorCode::kTimeout);
}

TEST_F(HttpBackendTest, UnreachableEndpointIsNetworkError) {
  BackendConfig c = Config();
  c.endpoint = "http://127.0.0.1:1/none";
  c.max_retries = 1;
  HttpBackend backend(c);
  const ErrorCode code = CodeOf([&] { backend.Complete({"x", std::nullopt, {}}); });
  EXPECT_TRUE(code == ErrorCode::kNetworkError || code == ErrorCode::kTimeout);
}

TEST_F(HttpBackendTest, ConcurrencyIsBounded) {
  handler_ = [&](const httplib::Request&, httplib::Response& res) {
    std::this_thread::sleep_for(std::chrono::milliseconds(30));
    res.set_content(R"({"text": "ok"})", "application/json");
  };
  BackendConfig c = Config();
  c.max_concurrency = 2;
  HttpBackend backend(c);
  std::vector<std::thread> threads;
  for (int i = 0; i < 6; ++i) {
    threads.emplace_back([&] { EXPECT_EQ(backend.Complete({"x", std::nullopt, {}}), "ok"); });
  }
  for (std::thread& t : threads) t.join();
  EXPECT_EQ(requests_, 6);
  EXPECT_LE(max_in_flight_, 2);
}

}  // namespace
}  // namespace docedit
