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

#ifndef DOCEDIT_ERROR_H_
#define DOCEDIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace docedit {

// Every failure raised by the library carries one of these codes so callers
// (and the CLI exit path) can branch without string matching.
enum class ErrorCode {
  kUnknownAction,
  kMalformedBody,
  kEmptyCorpus,
  kEmptyDocument,
  kNotNormalized,
  kEmptyRoi,
  kZeroProbability,
  kInvalidArgument,
  kTextTooLong,
  kBoxOutOfBounds,
  kNetworkError,
  kAuthError,
  kFixtureMiss,
  kTimeout,
  kNoHtmlFound,
  kIoError,
  kSchemaError,
  kNoHumanScores,
  kDegenerateMarginals,
  kConstantVector,
  kFormatError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace docedit

#endif  // DOCEDIT_ERROR_H_
