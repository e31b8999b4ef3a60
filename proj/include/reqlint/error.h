// Copyright 2026 The reqlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REQLINT_ERROR_H_
#define REQLINT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace reqlint {

enum class ErrorKind {
  kUnknownCheckId,
  kDuplicateCheckId,
  kInvalidCheckDefinition,
  kSheetMismatch,
  kOverrideRejected,
  kChecklistKindMismatch,
  kTypeMismatch,
  kIncompleteSheet,
  kMalformedDocument,
  kFieldTypeError,
  kParseError,
  kSchemaVersionError,
  kHttpError,
  kAuthError,
  kRateLimited,
  kEmptyInput,
  kIoError,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind selects the CLI exit code and lets tests match on the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace reqlint

#endif  // REQLINT_ERROR_H_
