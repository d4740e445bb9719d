// Copyright (c) 2026 The dfsurf Authors. All Rights Reserved.
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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dfsurf {

enum class ErrorCode {
  NotDivisible,
  UnboundVariable,
  ParseError,
  UnknownNode,
  RootArgument,
  MalformedTree,
  CochainNotReduced,
  FineConditionViolated,
  ConditionViolated,
  OverlapConflict,
  CongruenceFailure,
  NotCollapsible,
  InvalidMorphism,
  NotABroom,
  InvalidSpec,
  InvalidCenter,
  SyntaxError,
  ValidationError,
};

std::string_view errorName(ErrorCode code);

/// Every failure raised by the library. `detail()` carries the failing
/// condition number for ConditionViolated and the 1-based input line for
/// SyntaxError; it is 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int detail = 0,
        std::vector<std::string> items = {});

  ErrorCode code() const noexcept { return code_; }
  int detail() const noexcept { return detail_; }
  /// Individual violations for ValidationError.
  const std::vector<std::string>& items() const noexcept { return items_; }

 private:
  ErrorCode code_;
  int detail_;
  std::vector<std::string> items_;
};

}  // namespace dfsurf
