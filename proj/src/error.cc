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

#include "reqlint/error.h"

namespace reqlint {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownCheckId: return "UnknownCheckId";
    case ErrorKind::kDuplicateCheckId: return "DuplicateCheckId";
    case ErrorKind::kInvalidCheckDefinition: return "InvalidCheckDefinition";
    case ErrorKind::kSheetMismatch: return "SheetMismatch";
    case ErrorKind::kOverrideRejected: return "OverrideRejected";
    case ErrorKind::kChecklistKindMismatch: return "ChecklistKindMismatch";
    case ErrorKind::kTypeMismatch: return "TypeMismatch";
    case ErrorKind::kIncompleteSheet: return "IncompleteSheet";
    case ErrorKind::kMalformedDocument: return "MalformedDocument";
    case ErrorKind::kFieldTypeError: return "FieldTypeError";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kSchemaVersionError: return "SchemaVersionError";
    case ErrorKind::kHttpError: return "HttpError";
    case ErrorKind::kAuthError: return "AuthError";
    case ErrorKind::kRateLimited: return "RateLimited";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace reqlint
