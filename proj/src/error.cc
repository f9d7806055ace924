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

#include "docedit/error.h"

namespace docedit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownAction: return "UnknownAction";
    case ErrorCode::kMalformedBody: return "MalformedBody";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kEmptyRoi: return "EmptyRoI";
    case ErrorCode::kZeroProbability: return "ZeroProbability";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTextTooLong: return "TextTooLong";
    case ErrorCode::kBoxOutOfBounds: return "BoxOutOfBounds";
    case ErrorCode::kNetworkError: return "NetworkError";
    case ErrorCode::kAuthError: return "AuthError";
    case ErrorCode::kFixtureMiss: return "FixtureMiss";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kNoHtmlFound: return "NoHtmlFound";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kNoHumanScores: return "NoHumanScores";
    case ErrorCode::kDegenerateMarginals: return "DegenerateMarginals";
    case ErrorCode::kConstantVector: return "ConstantVector";
    case ErrorCode::kFormatError: return "FormatError";
  }
  return "Unknown";
}

}  // namespace docedit
