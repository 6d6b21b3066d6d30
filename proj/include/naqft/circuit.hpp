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
#include <vector>

#include "naqft/group.hpp"

namespace naqft {

enum class GateKind {
  X, Y, Z, H, S, Sdg, T, Tdg, Rz, P,
  U1,
  X01, X02, X12, Z0, Z1, Z2,
  H3, H3dg, H3p, H3pdg,
  CHI, CHIdg, T3, T3dg, S3, S3dg,
  SWAP, U,
  CHI_PROD, CHIdg_PROD, S3_PROD, S3dg_PROD
};

std::string to_string(GateKind kind);
GateKind parse_gate_kind(const std::string& name);

/** True for the four kinds whose power is the product of their factors. */
bool is_product_kind(GateKind kind);

enum class WireRole { GroupRegister, Transversal, AncillaClean };

std::string to_string(WireRole role);
WireRole parse_wire_role(const std::string& name);

struct Wire {
  int id;
  int dim;
  WireRole role;

  bool operator==(const Wire&) const = default;
};

/**
 * Control on `wire`. A value v >= 0 requires the wire to hold v. The value
 * kProductFactor marks a multiplicative factor of a *_PROD gate, whose power
 * is the product of all factor values modulo 3.
 */
struct Control {
  int wire;
  int value;

  bool operator==(const Control&) const = default;
};

inline constexpr int kProductFactor = -1;

/**
 * Gate on `targets`; the first target is the least significant digit of the
 * gate matrix index. `theta` is used by Rz and P, `matrix` by U1 and U.
 */
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  std::vector<Control> controls;
  double theta = 0.0;
  Mat matrix;

  bool operator==(const Gate& other) const;
};

enum class Arch { Mixed, Qubit };

std::string to_string(Arch arch);
std::optional<Arch> parse_arch(const std::string& name);

/**
 * Bijection between group elements and basis states of the register wires.
 *
 * Digit w holds tuple position n-1-w with dimension digit_dims[w]; it lives on
 * digit_wires[w], one wire natively or the pair (lo, hi) for a qutrit under
 * the qubit embedding 0 -> 00, 1 -> 01, 2 -> 10.
 */
struct RegisterLayout {
  GroupId group;
  std::vector<int> digit_dims;
  std::vector<std::vector<int>> digit_wires;

  static RegisterLayout standard(GroupId group, Arch arch);
  int register_wire_count() const;
};

struct Circuit {
  GroupId group;
  Arch arch;
  std::vector<Wire> wires;
  std::vector<Gate> gates;
  RegisterLayout layout;

  /** Register wires per the standard layout, no ancillae, no gates. */
  static Circuit empty(GroupId group, Arch arch);

  int add_ancilla(int dim);
  int ancilla_count() const;
  std::vector<int> dims() const;
  void add(Gate gate);
  void check() const;
};

/** Single-wire gate helpers. */
Gate gate(GateKind kind, int target, std::vector<Control> controls = {});
Gate gate(GateKind kind, std::vector<int> targets,
          std::vector<Control> controls = {});
Gate rotation(GateKind kind, double theta, int target,
              std::vector<Control> controls = {});
Gate unitary(const Mat& m, std::vector<int> targets,
             std::vector<Control> controls = {});

/** Matrix of `g` on its targets, with the given target dimensions. */
Mat gate_matrix(const Gate& g, const std::vector<int>& target_dims);
/** Matrix of `g` with target dimensions looked up in `c`. */
Mat gate_matrix(const Gate& g, const Circuit& c);

Gate inverse(const Gate& g);
Circuit compose(const Circuit& c1, const Circuit& c2);
Circuit invert(const Circuit& c);

/** Basis index of group element `g` (ancillae at 0); wire 0 least significant. */
std::size_t encode(const Circuit& c, int element);

/** Circuit JSON with 17 significant digits for floats. */
std::string to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

}  // namespace naqft
