// Copyright 2026 The naqft Authors
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

namespace naqft {

enum class ErrorKind {
  AmbiguousMatch,
  GroupMismatch,
  NoMatch,
  DimensionMismatch,
  WireMismatch,
  UnsupportedGate,
  OperatorNotUnitary,
  LayoutMismatch,
  UnknownRow,
  BadEpsilon,
  Parse,
};

std::string to_string(ErrorKind kind);

class NaqftError : public std::runtime_error {
 public:
  NaqftError(ErrorKind kind, const std::string& message)
      : std::runtime_error(to_string(kind) + ": " + message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace naqft
