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

#include "naqft/errors.hpp"

namespace naqft {

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::WireMismatch: return "WireMismatch";
    case ErrorKind::UnsupportedGate: return "UnsupportedGate";
    case ErrorKind::OperatorNotUnitary: return "OperatorNotUnitary";
    case ErrorKind::LayoutMismatch: return "LayoutMismatch";
    case ErrorKind::UnknownRow: return "UnknownRow";
    case ErrorKind::BadEpsilon: return "BadEpsilon";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace naqft
