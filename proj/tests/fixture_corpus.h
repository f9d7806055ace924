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

// Synthetic corpus for pipeline tests: page images, gold HTML, a JSONL
// dataset and a fixture file recorded from a scripted responder, so that
// later runs go through the real MockBackend.

#ifndef DOCEDIT_TESTS_FIXTURE_CORPUS_H_
#define DOCEDIT_TESTS_FIXTURE_CORPUS_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "docedit/backend.h"
#include "docedit/pipeline.h"

namespace docedit::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Deterministic stand-in for a model: text-only prompts get an instruction,
// image prompts get a fenced HTML page. Both depend only on the prompt.
class ScriptedBackend : public LmmBackend {
 public:
  std::string Complete(const Prompt& prompt) override;
};

struct FixtureCorpus {
  std::filesystem::path dataset;   // dataset.jsonl
  std::filesystem::path fixtures;  // fixtures.json
};

// Writes `records` synthetic records into `dir` and records fixtures for
// every flag combination of the edit task plus the replicate task.
FixtureCorpus WriteFixtureCorpus(const std::filesystem::path& dir, int records);

// path relative to root -> file bytes, for every regular file below root.
std::map<std::string, std::string> SnapshotTree(const std::filesystem::path& root);

}  // namespace docedit::testing

#endif  // DOCEDIT_TESTS_FIXTURE_CORPUS_H_
