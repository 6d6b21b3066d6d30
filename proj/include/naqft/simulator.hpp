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

#include <vector>

#include "naqft/circuit.hpp"

namespace naqft {

struct State {
  std::vector<int> dims;
  /** Wire 0 is the least significant digit. */
  Vec amplitudes;
};

State basis_state(const Circuit& c, std::size_t index);

/** Applies the gates of `c` in order; throws LayoutMismatch on dims. */
State apply(const State& state, const Circuit& c);
/** Applies a single gate in place. */
void apply_gate(State& state, const Gate& g);

/** Dense unitary of the whole circuit (small circuits only). */
Mat circuit_unitary(const Circuit& c);

struct ExtractedOperator {
  /** |G|x|G| block on register states with ancillae at 0. */
  Mat op;
  /** Largest per-column amplitude norm on ancilla != 0 states. */
  double ancilla_leakage = 0.0;
  /** Largest per-column amplitude norm on forbidden register states. */
  double forbidden_leakage = 0.0;
};

/** Column g is the circuit applied to encode(g). */
ExtractedOperator extract_group_operator(const Circuit& c);

/** min over global phase of max |a - e^{i phi} b|. */
double phase_distance(const Mat& a, const Mat& b);

}  // namespace naqft
