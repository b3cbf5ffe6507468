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

#ifndef LEAFSPACE_ERROR_HPP_
#define LEAFSPACE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace leafspace {

enum class ErrorCode {
  // Structural validation.
  InvalidIdentifier,
  DuplicateId,
  DanglingReference,
  PortConflict,
  OpenPort,
  NotATree,
  Disconnected,
  JunctionArity,
  MissingStem,
  MultipleStems,
  DuplicateMember,
  MixedMemberSides,
  StemDirectionMismatch,
  NoEdges,
  // Queries.
  UnknownVertex,
  UnknownEdge,
  UnknownJunction,
  UnknownEnd,
  InvalidPosition,
  SamePoint,
  SameEnd,
  DuplicateEnd,
  NotPositiveEnd,
  NotFound,
  // Maps.
  NotBijective,
  DanglingImage,
  NotAdmissible,
  TooLarge,
  // Group orders.
  NotEffectiveAtDepth,
  OrderViolation,
  InconsistentOracles,
  // Corpus and I/O.
  UnknownName,
  ConfigBound,
  SyntaxError,
  ValidationFailed,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every leafspace operation. The message is
/// prefixed by the error code name when rendered through what().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace leafspace

#endif  // LEAFSPACE_ERROR_HPP_
