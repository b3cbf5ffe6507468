// Copyright 2026 The leafspace Authors
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

#include "leafspace/error.hpp"

namespace leafspace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::PortConflict: return "PortConflict";
    case ErrorCode::OpenPort: return "OpenPort";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::JunctionArity: return "JunctionArity";
    case ErrorCode::MissingStem: return "MissingStem";
    case ErrorCode::MultipleStems: return "MultipleStems";
    case ErrorCode::DuplicateMember: return "DuplicateMember";
    case ErrorCode::MixedMemberSides: return "MixedMemberSides";
    case ErrorCode::StemDirectionMismatch: return "StemDirectionMismatch";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownJunction: return "UnknownJunction";
    case ErrorCode::UnknownEnd: return "UnknownEnd";
    case ErrorCode::InvalidPosition: return "InvalidPosition";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::SameEnd: return "SameEnd";
    case ErrorCode::DuplicateEnd: return "DuplicateEnd";
    case ErrorCode::NotPositiveEnd: return "NotPositiveEnd";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::DanglingImage: return "DanglingImage";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotEffectiveAtDepth: return "NotEffectiveAtDepth";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::InconsistentOracles: return "InconsistentOracles";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ConfigBound: return "ConfigBound";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace leafspace
