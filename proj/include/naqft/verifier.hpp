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

#include <string>
#include <vector>

#include "naqft/circuit.hpp"
#include "naqft/irreps.hpp"

namespace naqft {

/** Per-irrep findings; `states` are output rows spanning the irrep. */
struct IrrepBlock {
  std::string label;
  std::vector<int> states;
  /** Connected blocks inside `states`, ordered by lowest state. */
  std::vector<std::vector<int>> copies;
  /** "rho(x)I" or "I(x)rho", whichever intertwines. */
  std::string convention;
  double condition = 0.0;
  double intertwiner_residual = 0.0;
};

struct VerificationReport {
  GroupId group;
  std::string arch;
  bool pass = false;
  double unitarity_residual = 0.0;
  double off_block_residual = 0.0;
  double character_residual = 0.0;
  double intertwiner_residual = 0.0;
  double ancilla_leakage = 0.0;
  double forbidden_leakage = 0.0;
  /** Diagnostic: largest difference between isomorphic copies. */
  double copy_residual = 0.0;
  std::vector<int> block_sizes;
  std::vector<IrrepBlock> blocks;
  std::vector<std::string> assignment_mismatches;
  /** Structural failures (isotypic content, block sizes). */
  std::vector<std::string> errors;
};

/**
 * Checks that F block diagonalizes the left regular representation into each
 * irrep exactly d times, with blocks found from the support of F L(g) F^dagger
 * over the generators.
 */
VerificationReport verify_fft(const Mat& F, GroupId group, double tol = 1e-9);

/** Extracts the circuit's group operator and verifies it, with leakage. */
VerificationReport verify_circuit(const Circuit& c, double tol = 1e-9);

std::string to_json(const VerificationReport& r);

/**
 * Max entry of (+)W_rho F - F_oracle, minimized over unitary W_rho acting on
 * the rows that the oracle assigns to rho.
 */
double compare_to_oracle(const Mat& F, GroupId group);

/**
 * Reorders the rows of F so that each discovered irrep subspace occupies the
 * oracle's rows for that irrep. Throws LayoutMismatch if F does not verify.
 */
Mat align_to_oracle(const Mat& F, GroupId group, double tol = 1e-9);

}  // namespace naqft
