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

#include "naqft/circuit.hpp"

namespace naqft {

/** 4x4 qubit-pair form U (+) 1 of a qutrit unitary under 0->00, 1->01, 2->10. */
Mat embed_qutrit(const Mat& u3);

/**
 * Rewrites a mixed circuit over qubits only.
 *
 * Each qutrit becomes a (lo, hi) qubit pair. Qutrit controls on 1 (2) become
 * controls on lo (hi); value 0 needs both qubits clear. Controls beyond one
 * are folded into clean ancillae holding their conjunction. Product-controlled
 * gates compute the (product = 1) and (product = 2 mod 3) predicates into
 * scratch pairs. The result uses X with up to two controls, H, S, Sdg, T,
 * Tdg, Z, Y, Rz, SWAP and two-qubit U gates; all ancillae end clean.
 */
Circuit transpile(const Circuit& mixed);

}  // namespace naqft
