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
#include "naqft/irreps.hpp"

namespace naqft {

/**
 * One extension H -> G by a transversal {1, t, ..., t^(m-1)}.
 *
 * Operators act on the output register of the H transform (H element order).
 * The stage matrices are T = sum_x |x><x| (x) twiddle^x and
 * Phi = sum_x |x><x| (x) diag(kickback)^x, with x the transversal digit.
 */
struct ExtensionStep {
  GroupId subgroup;
  GroupId group;
  int m;
  /** Tuple position of the transversal digit in G. */
  int position;
  ConjugateClassification classification;
  Mat twiddle;
  Vec kickback;
  /** Basis permutations before the twiddle; identity on both chains. */
  Mat P;
  Mat C;
};

/** Twiddle and kickback data for the step ending at `group`. */
const ExtensionStep& step_operators(GroupId group);

/** Result of the classification-driven construction. */
struct GenericStep {
  Mat twiddle;
  /** True when G = t^x H (left transversal form); false for H t^x. */
  bool left_form;
  /** Diagonal gauge on G outputs making isomorphic copies identical. */
  Vec phases;
};

/**
 * Builds a twiddle from the conjugation action of t on F_H: a principal m-th
 * root of the image of t^m, with extendable isotypic blocks replaced by the
 * solved extension. `phases` is solved from the assembled transform.
 */
GenericStep generic_step(GroupId group, const Mat& F_sub);

/** Index map from (h, x) with index h*m + x to the G element order. */
std::vector<int> hx_to_element(const ExtensionStep& step);

/** DFT of size m: entries e^{2 pi i a b / m} / sqrt(m). */
Mat cyclic_dft(int m);

/** Stage matrices in G element order. */
Mat twiddle_stage(const ExtensionStep& step);
Mat transversal_dft_stage(const ExtensionStep& step);
Mat kickback_stage(const ExtensionStep& step);
/** F_sub (x) 1_m in G element order. */
Mat subgroup_stage(const ExtensionStep& step, const Mat& F_sub);

/** Phi * DFT * T * (F_sub (x) 1) * C * P. */
Mat assemble_step(const ExtensionStep& step, const Mat& F_sub);

/** FFT matrix by the operator recursion from the base group. */
Mat fft_operator(GroupId group);

enum class Stage { Twiddle, TransversalDft, Kickback };

/** Mixed circuit holding only one stage of the step ending at `group`. */
Circuit stage_circuit(GroupId group, Stage stage);

/** Mixed FFT circuit of a base group (Z2: H; Z3xZ3: H3 on both wires). */
Circuit base_fft(GroupId group);

/**
 * Places `sub` on the subgroup wires of G = `group` and appends the twiddle,
 * the transversal DFT (H or H3, uncontrolled) and the kickback.
 */
Circuit extend_fft(const Circuit& sub, GroupId group);

/** Full FFT circuit; the qubit form is the transpiled mixed circuit. */
Circuit synthesize(GroupId group, Arch arch);

}  // namespace naqft
