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

#include "naqft/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "naqft/errors.hpp"

namespace naqft {

namespace {

constexpr double kMatchTol = 1e-6;

const Complex kI(0.0, 1.0);

Complex omega3() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

Mat m2(Complex a, Complex b, Complex c, Complex d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

Mat h3() {
  const Complex w = omega3();
  Mat m(3, 3);
  m << 1.0, 1.0, 1.0, 1.0, w, w * w, 1.0, w * w, w;
  return m / std::sqrt(3.0);
}

std::vector<Mat> su2_generators(int n) {
  const Complex eta(0.5, 0.5);
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Mat> all = {
      -Mat::Identity(2, 2),
      m2(0.0, 1.0, -1.0, 0.0),
      m2(kI, 0.0, 0.0, -kI),
      m2(-eta, -eta, std::conj(eta), -std::conj(eta)),
      m2(s, -kI * s, -kI * s, s),
  };
  all.resize(n);
  return all;
}

std::vector<Mat> su3_generators(int n) {
  const Complex w = omega3();
  Mat omega = w * Mat::Identity(3, 3);
  Mat c = Mat::Zero(3, 3);
  c.diagonal() << 1.0, w, w * w;
  Mat e = Mat::Zero(3, 3);
  e(0, 1) = 1.0;
  e(1, 2) = 1.0;
  e(2, 0) = 1.0;
  Mat v = -kI * h3();
  std::vector<Mat> all = {omega, c, e, v * v, v};
  all.resize(n);
  return all;
}

GroupSpec make_spec(GroupId id) {
  const Complex eta(0.5, 0.5);
  switch (id) {
    case GroupId::Z2:
      return {id, 2, {"-1"}, {2}, su2_generators(1), eta, -1};
    case GroupId::Z4: {
      auto g = su2_generators(3);
      return {id, 4, {"-1", "k"}, {2, 2}, {g[0], g[2]}, eta, 1};
    }
    case GroupId::Q8:
      return {id, 8, {"-1", "j", "k"}, {2, 2, 2}, su2_generators(3), eta, 1};
    case GroupId::BT:
      return {id, 24, {"-1", "j", "k", "u"}, {2, 2, 2, 3}, su2_generators(4),
              eta, 3};
    case GroupId::BO:
      return {id,  48, {"-1", "j", "k", "u", "t"}, {2, 2, 2, 3, 2},
              su2_generators(5), eta, 4};
    case GroupId::Z3xZ3:
      return {id, 9, {"w", "C"}, {3, 3}, su3_generators(2), eta, -1};
    case GroupId::D27:
      return {id, 27, {"w", "C", "E"}, {3, 3, 3}, su3_generators(3), eta, 2};
    case GroupId::D54:
      return {id,  54, {"w", "C", "E", "V2"}, {3, 3, 3, 2},
              su3_generators(4), eta, 3};
    case GroupId::S36x3:
      return {id,  108, {"w", "C", "E", "V2", "V"}, {3, 3, 3, 2, 2},
              su3_generators(5), eta, 4};
  }
  throw NaqftError(ErrorKind::GroupMismatch, "unknown group");
}

int group_slot(GroupId id) { return static_cast<int>(id); }

std::vector<std::vector<int>> exponent_tuples(const std::vector<int>& bounds) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(bounds.size(), 0);
  while (true) {
    out.push_back(cur);
    int pos = static_cast<int>(bounds.size()) - 1;
    while (pos >= 0 && ++cur[pos] == bounds[pos]) {
      cur[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Mat evaluate(const std::vector<Mat>& gens, const std::vector<int>& e) {
  Mat m = Mat::Identity(gens[0].rows(), gens[0].cols());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int k = 0; k < e[i]; ++k) m = m * gens[i];
  return m;
}

double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

/** Nearest enumerated matrix to `m`; throws on ambiguity or no match. */
int nearest(const std::vector<Mat>& mats, const Mat& m) {
  int best = -1;
  int hits = 0;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (max_abs(mats[i] - m) < kMatchTol) {
      if (best < 0) best = static_cast<int>(i);
      ++hits;
    }
  }
  if (hits > 1)
    throw NaqftError(ErrorKind::AmbiguousMatch,
                     "two enumerated elements match a product within 1e-6");
  if (best < 0)
    throw NaqftError(ErrorKind::NoMatch,
                     "matrix product matches no enumerated element");
  return best;
}

}  // namespace

std::string group_name(GroupId id) {
  switch (id) {
    case GroupId::Z2: return "Z2";
    case GroupId::Z4: return "Z4";
    case GroupId::Q8: return "Q8";
    case GroupId::BT: return "BT";
    case GroupId::BO: return "BO";
    case GroupId::Z3xZ3: return "Z3xZ3";
    case GroupId::D27: return "D27";
    case GroupId::D54: return "D54";
    case GroupId::S36x3: return "S36x3";
  }
  return "?";
}

std::string cli_name(GroupId id) {
  switch (id) {
    case GroupId::Z2: return "z2";
    case GroupId::Z4: return "z4";
    case GroupId::Q8: return "q8";
    case GroupId::BT: return "bt";
    case GroupId::BO: return "bo";
    case GroupId::Z3xZ3: return "z3z3";
    case GroupId::D27: return "d27";
    case GroupId::D54: return "d54";
    case GroupId::S36x3: return "s36x3";
  }
  return "?";
}

std::optional<GroupId> parse_group(const std::string& name) {
  for (GroupId id : kAllGroups)
    if (name == cli_name(id) || name == group_name(id)) return id;
  return std::nullopt;
}

std::optional<GroupId> predecessor(GroupId id) {
  switch (id) {
    case GroupId::Z4: return GroupId::Z2;
    case GroupId::Q8: return GroupId::Z4;
    case GroupId::BT: return GroupId::Q8;
    case GroupId::BO: return GroupId::BT;
    case GroupId::D27: return GroupId::Z3xZ3;
    case GroupId::D54: return GroupId::D27;
    case GroupId::S36x3: return GroupId::D54;
    default: return std::nullopt;
  }
}

bool is_su2_chain(GroupId id) {
  return id == GroupId::Z2 || id == GroupId::Z4 || id == GroupId::Q8 ||
         id == GroupId::BT || id == GroupId::BO;
}

std::vector<GroupId> chain_to(GroupId id) {
  std::vector<GroupId> out = {id};
  while (auto p = predecessor(out.back())) out.push_back(*p);
  std::reverse(out.begin(), out.end());
  return out;
}

const GroupSpec& group_spec(GroupId id) {
  static std::array<std::unique_ptr<GroupSpec>, 9> specs;
  static std::array<std::once_flag, 9> flags;
  const int s = group_slot(id);
  std::call_once(flags[s], [&] {
    specs[s] = std::make_unique<GroupSpec>(make_spec(id));
  });
  return *specs[s];
}

std::string to_string(const GroupElement& g) {
  std::string out = group_name(g.group) + "(";
  for (std::size_t i = 0; i < g.exponents.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.exponents[i]);
  }
  return out + ")";
}

Group::Group(GroupId id) : spec_(&group_spec(id)) {
  for (const auto& e : exponent_tuples(spec_->bounds)) {
    elements_.push_back({id, e});
    matrices_.push_back(evaluate(spec_->generators, e));
  }
  const int n = order();
  if (n != spec_->order)
    throw NaqftError(ErrorKind::DimensionMismatch,
                     "exponent ranges do not multiply to the group order");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (max_abs(matrices_[a] - matrices_[b]) < kMatchTol)
        throw NaqftError(ErrorKind::AmbiguousMatch,
                         "faithful map is not injective for " + group_name(id));
  cayley_.group = id;
  cayley_.table.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      cayley_.table[a][b] = nearest(matrices_, matrices_[a] * matrices_[b]);
  inverses_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cayley_.table[a][b] == 0) inverses_[a] = b;
}

const Group& Group::get(GroupId id) {
  static std::array<std::unique_ptr<Group>, 9> groups;
  static std::array<std::once_flag, 9> flags;
  const int s = group_slot(id);
  std::call_once(flags[s], [&] { groups[s].reset(new Group(id)); });
  return *groups[s];
}

int Group::index_of(const std::vector<int>& e) const {
  const auto& b = spec_->bounds;
  if (e.size() != b.size())
    throw NaqftError(ErrorKind::DimensionMismatch, "exponent tuple length");
  int idx = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (e[i] < 0 || e[i] >= b[i])
      throw NaqftError(ErrorKind::DimensionMismatch, "exponent out of bounds");
    idx = idx * b[i] + e[i];
  }
  return idx;
}

int Group::index_of(const GroupElement& g) const {
  if (g.group != id())
    throw NaqftError(ErrorKind::GroupMismatch,
                     to_string(g) + " is not in " + group_name(id()));
  return index_of(g.exponents);
}

int Group::power(int a, int n) const {
  int r = 0;
  for (int i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

int Group::transversal_generator() const {
  if (spec_->transversal_position < 0) return -1;
  std::vector<int> e(spec_->bounds.size(), 0);
  e[spec_->transversal_position] = 1;
  return index_of(e);
}

int Group::transversal_size() const {
  if (spec_->transversal_position < 0) return 1;
  return spec_->bounds[spec_->transversal_position];
}

std::vector<int> Group::generator_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < spec_->bounds.size(); ++i) {
    std::vector<int> e(spec_->bounds.size(), 0);
    e[i] = 1;
    out.push_back(index_of(e));
  }
  return out;
}

std::vector<int> Group::subgroup_embedding() const {
  auto pred = predecessor(id());
  if (!pred)
    throw NaqftError(ErrorKind::GroupMismatch,
                     group_name(id()) + " has no predecessor");
  const Group& sub = Group::get(*pred);
  const auto& names = spec_->generator_names;
  std::vector<int> pos;
  for (const auto& nm : sub.spec().generator_names)
    pos.push_back(static_cast<int>(
        std::find(names.begin(), names.end(), nm) - names.begin()));
  std::vector<int> out;
  for (const auto& h : sub.elements()) {
    std::vector<int> e(names.size(), 0);
    for (std::size_t i = 0; i < pos.size(); ++i) e[pos[i]] = h.exponents[i];
    out.push_back(index_of(e));
  }
  return out;
}

std::vector<GroupElement> enumerate(GroupId group) {
  return Group::get(group).elements();
}

Mat faithful_matrix(const GroupElement& g) {
  const Group& grp = Group::get(g.group);
  return grp.matrix(grp.index_of(g));
}

CayleyTable build_cayley(GroupId group) { return Group::get(group).cayley(); }

GroupElement multiply(const GroupElement& g1, const GroupElement& g2) {
  if (g1.group != g2.group)
    throw NaqftError(ErrorKind::GroupMismatch,
                     to_string(g1) + " * " + to_string(g2));
  const Group& grp = Group::get(g1.group);
  return grp.element(grp.mul(grp.index_of(g1), grp.index_of(g2)));
}

GroupElement inverse(const GroupElement& g) {
  const Group& grp = Group::get(g.group);
  return grp.element(grp.inv(grp.index_of(g)));
}

std::vector<GroupElement> transversal(GroupId group) {
  const Group& grp = Group::get(group);
  const int t = grp.transversal_generator();
  if (t < 0)
    throw NaqftError(ErrorKind::GroupMismatch,
                     group_name(group) + " is a base group");
  std::vector<GroupElement> out;
  for (int x = 0; x < grp.transversal_size(); ++x)
    out.push_back(grp.element(grp.power(t, x)));
  return out;
}

GroupElement conjugate(const GroupElement& t, const GroupElement& h) {
  if (t.group != h.group)
    throw NaqftError(ErrorKind::GroupMismatch,
                     to_string(t) + " conj " + to_string(h));
  const Group& grp = Group::get(t.group);
  return grp.element(grp.conj(grp.index_of(t), grp.index_of(h)));
}

std::vector<int> register_dims(GroupId group) {
  auto b = group_spec(group).bounds;
  std::reverse(b.begin(), b.end());
  return b;
}

}  // namespace naqft
