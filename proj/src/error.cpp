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

#include "dfsurf/error.hpp"

#include <utility>

namespace dfsurf {

std::string_view errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::RootArgument: return "RootArgument";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::CochainNotReduced: return "CochainNotReduced";
    case ErrorCode::FineConditionViolated: return "FineConditionViolated";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::OverlapConflict: return "OverlapConflict";
    case ErrorCode::CongruenceFailure: return "CongruenceFailure";
    case ErrorCode::NotCollapsible: return "NotCollapsible";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::NotABroom: return "NotABroom";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidCenter: return "InvalidCenter";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, int detail,
             std::vector<std::string> items)
    : std::runtime_error(message), code_(code), detail_(detail), items_(std::move(items)) {}

}  // namespace dfsurf
