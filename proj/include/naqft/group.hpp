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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace naqft {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

enum class GroupId { Z2, Z4, Q8, BT, BO, Z3xZ3, D27, D54, S36x3 };

inline constexpr std::array<GroupId, 9> kAllGroups = {
    GroupId::Z2,    GroupId::Z4,  GroupId::Q8,  GroupId::BT,   GroupId::BO,
    GroupId::Z3xZ3, GroupId::D27, GroupId::D54, GroupId::S36x3};

/** Canonical display name, e.g. "BT", "S36x3". */
std::string group_name(GroupId id);
/** Lower-case command-line name, e.g. "bt", "z3z3". */
std::string cli_name(GroupId id);
std::optional<GroupId> parse_group(const std::string& name);

/** Unique predecessor along the chain; empty for the base groups. */
std::optional<GroupId> predecessor(GroupId id);
bool is_su2_chain(GroupId id);
/** Chain from the base group up to and including `id`. */
std::vector<GroupId> chain_to(GroupId id);

struct GroupSpec {
  GroupId id;
  int order;
  std::vector<std::string> generator_names;
  std::vector<int> bounds;
  std::vector<Mat> generators;
  /** (1+i)/2, used by the SU(2) chain generators. */
  Complex eta;
  /** Tuple position of the right-transversal generator; -1 for base groups. */
  int transversal_position;
};

const GroupSpec& group_spec(GroupId id);

struct GroupElement {
  GroupId group;
  std::vector<int> exponents;

  bool operator==(const GroupElement& other) const {
    return group == other.group && exponents == other.exponents;
  }
};

std::string to_string(const GroupElement& g);

struct CayleyTable {
  GroupId group;
  std::vector<std::vector<int>> table;
};

/**
 * Enumerated finite group with lookup-based arithmetic.
 *
 * Elements are indexed lexicographically by exponent tuple (position 0 most
 * significant). Multiplication is the nearest match of faithful-matrix
 * products against the enumeration.
 */
class Group {
 public:
  static const Group& get(GroupId id);

  GroupId id() const { return spec_->id; }
  const GroupSpec& spec() const { return *spec_; }
  int order() const { return static_cast<int>(elements_.size()); }

  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(int index) const { return elements_.at(index); }
  int index_of(const GroupElement& g) const;
  int index_of(const std::vector<int>& exponents) const;
  const Mat& matrix(int index) const { return matrices_.at(index); }

  const CayleyTable& cayley() const { return cayley_; }
  int mul(int a, int b) const { return cayley_.table[a][b]; }
  int inv(int a) const { return inverses_[a]; }
  int power(int a, int n) const;
  /** Index of t h t^-1. */
  int conj(int t, int h) const { return mul(mul(t, h), inv(t)); }

  /** Index of the transversal generator; -1 for base groups. */
  int transversal_generator() const;
  /** Transversal size m (1 for base groups). */
  int transversal_size() const;
  /** Indices of the single-generator elements (unit exponent tuples). */
  std::vector<int> generator_indices() const;

  /**
   * For a non-base group: map from predecessor element index to the index of
   * the same element in this group (transversal exponent zero).
   */
  std::vector<int> subgroup_embedding() const;

 private:
  explicit Group(GroupId id);

  const GroupSpec* spec_;
  std::vector<GroupElement> elements_;
  std::vector<Mat> matrices_;
  CayleyTable cayley_;
  std::vector<int> inverses_;
};

std::vector<GroupElement> enumerate(GroupId group);
Mat faithful_matrix(const GroupElement& g);
CayleyTable build_cayley(GroupId group);
GroupElement multiply(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);
std::vector<GroupElement> transversal(GroupId group);
/** Normal form of t h t^-1. */
GroupElement conjugate(const GroupElement& t, const GroupElement& h);

/** Mixed-radix wire dimensions; wire w holds tuple position n-1-w. */
std::vector<int> register_dims(GroupId group);

}  // namespace naqft
