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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "naqft/group.hpp"

namespace naqft {

struct Irrep {
  GroupId group;
  std::string label;
  int dim;
  /** One image per generator, in presentation order. */
  std::vector<Mat> generator_images;
};

/** Irreps of `group` in table order. */
const std::vector<Irrep>& irreps(GroupId group);
int irrep_index(GroupId group, const std::string& label);

Mat irrep_matrix(const Irrep& irrep, const GroupElement& g);
Complex character(const Irrep& irrep, const GroupElement& g);

/** Images of irrep `r` at every element, in element order (cached). */
const std::vector<Mat>& irrep_images(GroupId group, int r);
/** characters[r][g] (cached). */
const std::vector<std::vector<Complex>>& character_table(GroupId group);

/**
 * DFT oracle: row (rho, i, j) in table order with (i, j) row-major, column g
 * in element order, entry sqrt(d/|G|) rho(g)_ij.
 */
Mat dft_matrix(GroupId group);
/** Irrep label of each oracle row. */
std::vector<std::string> dft_row_labels(GroupId group);

enum class Side { Left, Right };

/**
 * Regular representation as a permutation matrix. Left: |h> -> |g h>.
 * Right: |h> -> |h g^-1>, so both sides are homomorphisms.
 */
Mat regular_rep(GroupId group, const GroupElement& g, Side side);
Mat regular_rep(GroupId group, int g, Side side);

struct ConjugateClassification {
  GroupId subgroup;
  GroupId group;
  std::vector<std::string> extendable;
  std::vector<std::vector<std::string>> orbits;
};

/**
 * Classifies predecessor irreps of `group` under phi^t(h) = phi(t^-1 h t),
 * with t the transversal generator, by character comparison.
 */
ConjugateClassification classify_conjugates(GroupId group);

struct IrrepBasisAssignment {
  GroupId group;
  /** Per irrep label, the states spanning its block (element-order indices). */
  std::vector<std::pair<std::string, std::vector<int>>> blocks;
};

/**
 * Irrep to basis-state listings as printed for the groups that have one
 * (Q8, BT, Z3xZ3, D27, D54). Empty for the others.
 */
std::optional<IrrepBasisAssignment> printed_assignment(GroupId group);

}  // namespace naqft
