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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "naqft/errors.hpp"
#include "naqft/group.hpp"

using namespace naqft;

namespace {

/** Index of the product of generator powers, left to right. */
int word(const Group& g, std::initializer_list<std::pair<int, int>> factors) {
  const auto gens = g.generator_indices();
  int acc = 0;
  for (auto [gen, p] : factors) acc = g.mul(acc, g.power(gens[gen], p));
  return acc;
}

}  // namespace

TEST_CASE("enumeration sizes and identity first", "[group]") {
  const std::vector<std::pair<GroupId, int>> orders = {
      {GroupId::Z2, 2},   {GroupId::Z4, 4},   {GroupId::Q8, 8},
      {GroupId::BT, 24},  {GroupId::BO, 48},  {GroupId::Z3xZ3, 9},
      {GroupId::D27, 27}, {GroupId::D54, 54}, {GroupId::S36x3, 108}};
  for (auto [id, n] : orders) {
    const auto els = enumerate(id);
    REQUIRE(static_cast<int>(els.size()) == n);
    int prod = 1;
    for (int b : group_spec(id).bounds) prod *= b;
    CHECK(prod == n);
    for (int e : els[0].exponents) CHECK(e == 0);
    CHECK(std::is_sorted(els.begin(), els.end(), [](const auto& a, const auto& b) {
      return a.exponents < b.exponents;
    }));
  }
  CHECK(enumerate(GroupId::Z2)[1].exponents == std::vector<int>{1});
}

TEST_CASE("faithful generators are unitary and injective", "[group]") {
  for (GroupId id : kAllGroups) {
    const Group& g = Group::get(id);
    for (const auto& m : group_spec(id).generators)
      CHECK((m * m.adjoint() - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < 1e-12);
    double closest = 1e9;
    for (int a = 0; a < g.order(); ++a)
      for (int b = a + 1; b < g.order(); ++b)
        closest = std::min(closest, (g.matrix(a) - g.matrix(b)).cwiseAbs().maxCoeff());
    CHECK(closest > 1e-3);
  }
}

TEST_CASE("BT u matrix and its cube", "[group]") {
  const Complex eta(0.5, 0.5);
  const Mat u = faithful_matrix({GroupId::BT, {0, 0, 0, 1}});
  Mat expect(2, 2);
  expect << -eta, -eta, std::conj(eta), -std::conj(eta);
  CHECK((u - expect).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((u * u * u - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((faithful_matrix({GroupId::BT, {0, 0, 0, 0}}) - Mat::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("Cayley tables are Latin squares with identity 0", "[group]") {
  for (GroupId id : kAllGroups) {
    const Group& g = Group::get(id);
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
      std::vector<int> row(n), col(n);
      for (int b = 0; b < n; ++b) {
        row[b] = g.mul(a, b);
        col[b] = g.mul(b, a);
      }
      std::sort(row.begin(), row.end());
      std::sort(col.begin(), col.end());
      for (int b = 0; b < n; ++b) {
        REQUIRE(row[b] == b);
        REQUIRE(col[b] == b);
      }
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(g.inv(a), a) == 0);
    }
  }
}

TEST_CASE("associativity and matrix homomorphism", "[group]") {
  std::mt19937 rng(20261016);
  for (GroupId id : kAllGroups) {
    const Group& g = Group::get(id);
    const int n = g.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        REQUIRE((g.matrix(g.mul(a, b)) - g.matrix(a) * g.matrix(b)).cwiseAbs().maxCoeff() < 1e-9);
    if (n <= 48) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    } else {
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int k = 0; k < 10000; ++k) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      }
    }
  }
}

TEST_CASE("multiplication examples", "[group]") {
  const Group& q8 = Group::get(GroupId::Q8);
  const int j = q8.index_of(std::vector<int>{0, 1, 0});
  const int k = q8.index_of(std::vector<int>{0, 0, 1});
  CHECK(q8.element(q8.mul(k, j)).exponents == std::vector<int>{1, 1, 1});

  const Group& d27 = Group::get(GroupId::D27);
  const int c = d27.index_of(std::vector<int>{0, 1, 0});
  const int e = d27.index_of(std::vector<int>{0, 0, 1});
  CHECK(d27.element(d27.mul(c, e)).exponents == std::vector<int>{0, 1, 1});

  const GroupElement bj{GroupId::BT, {0, 1, 0, 0}};
  CHECK(inverse(bj).exponents == std::vector<int>{1, 1, 0, 0});
  const GroupElement u{GroupId::BT, {0, 0, 0, 1}}, u2{GroupId::BT, {0, 0, 0, 2}};
  CHECK(multiply(u2, u).exponents == std::vector<int>{0, 0, 0, 0});
  for (const auto& x : enumerate(GroupId::BO))
    CHECK(multiply(GroupElement{GroupId::BO, {0, 0, 0, 0, 0}}, x) == x);
  CHECK_THROWS_AS(multiply(u, GroupElement{GroupId::Q8, {0, 0, 1}}), NaqftError);
}

TEST_CASE("transversals partition the group into cosets", "[group]") {
  auto exps = [](GroupId id) {
    std::vector<std::vector<int>> out;
    for (const auto& t : transversal(id)) out.push_back(t.exponents);
    return out;
  };
  using V = std::vector<std::vector<int>>;
  CHECK(exps(GroupId::BT) == V{{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 2}});
  CHECK(exps(GroupId::BO) == V{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}});
  CHECK(exps(GroupId::D27) == V{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
  CHECK(exps(GroupId::D54) == V{{0, 0, 0, 0}, {0, 0, 0, 1}});
  CHECK(exps(GroupId::S36x3) == V{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}});
  for (GroupId id : kAllGroups) {
    auto sub = predecessor(id);
    if (!sub) continue;
    const Group& g = Group::get(id);
    const auto emb = g.subgroup_embedding();
    std::vector<int> hit(g.order(), 0);
    for (const auto& t : transversal(id))
      for (int h : emb) ++hit[g.mul(h, g.index_of(t))];
    for (int c : hit) CHECK(c == 1);
  }
}

TEST_CASE("predecessor subgroups are normal", "[group]") {
  for (GroupId id : kAllGroups) {
    if (!predecessor(id)) continue;
    const Group& g = Group::get(id);
    const auto emb = g.subgroup_embedding();
    std::vector<bool> in_sub(g.order(), false);
    for (int h : emb) in_sub[h] = true;
    for (const auto& t : transversal(id))
      for (int h : emb) CHECK(in_sub[g.conj(g.index_of(t), h)]);
  }
}

TEST_CASE("BT conjugation displays hold up to the central sign", "[group]") {
  // u h u^2 = j^c k^(b+c) and u^2 h u = j^(b+c) k^b for h = (-1)^a j^b k^c,
  // modulo -1 (reordering j and k flips the sign).
  const Group& g = Group::get(GroupId::BT);
  const int u = word(g, {{3, 1}});
  const int minus = word(g, {{0, 1}});
  auto same_mod_sign = [&](int x, int y) { return x == y || x == g.mul(minus, y); };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int h = word(g, {{0, a}, {1, b}, {2, c}});
        CHECK(same_mod_sign(g.conj(g.power(u, 2), h), word(g, {{1, c}, {2, b + c}})));
        CHECK(same_mod_sign(g.conj(u, h), word(g, {{1, b + c}, {2, b}})));
      }
  const GroupElement j{GroupId::BT, {0, 1, 0, 0}};
  CHECK(conjugate({GroupId::BT, {0, 0, 0, 2}}, j).exponents == std::vector<int>{0, 0, 1, 0});
}

TEST_CASE("D54 conjugation by V^2 squares C and E", "[group]") {
  const Group& g = Group::get(GroupId::D54);
  const int v2 = word(g, {{3, 1}});
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r) {
        const int h = word(g, {{0, p}, {1, q}, {2, r}});
        CHECK(g.mul(g.mul(v2, h), v2) == word(g, {{0, p}, {1, 2 * q}, {2, 2 * r}}));
      }
  const GroupElement c{GroupId::D54, {0, 1, 0, 0}};
  CHECK(conjugate({GroupId::D54, {0, 0, 0, 1}}, c).exponents == std::vector<int>{0, 2, 0, 0});
}

TEST_CASE("S36x3 conjugation by V", "[group]") {
  const Group& g = Group::get(GroupId::S36x3);
  const int v = word(g, {{4, 1}});
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 2; ++s) {
          const int h = word(g, {{0, p}, {1, q}, {2, r}, {3, s}});
          const int expect = word(g, {{0, p + 2 * q * r}, {1, 2 * r}, {2, q}, {3, s}});
          CHECK(g.conj(v, h) == expect);
        }
  const GroupElement e{GroupId::S36x3, {0, 0, 1, 0, 0}};
  CHECK(conjugate({GroupId::S36x3, {0, 0, 0, 0, 1}}, e).exponents ==
        std::vector<int>{0, 2, 0, 0, 0});
}

TEST_CASE("chains and names", "[group]") {
  CHECK(chain_to(GroupId::BO) ==
        std::vector<GroupId>{GroupId::Z2, GroupId::Z4, GroupId::Q8, GroupId::BT, GroupId::BO});
  CHECK(chain_to(GroupId::S36x3) == std::vector<GroupId>{GroupId::Z3xZ3, GroupId::D27,
                                                         GroupId::D54, GroupId::S36x3});
  for (GroupId id : kAllGroups) CHECK(parse_group(cli_name(id)) == id);
  CHECK_FALSE(parse_group("a5"));
  CHECK(register_dims(GroupId::BT) == std::vector<int>{3, 2, 2, 2});
  CHECK(register_dims(GroupId::S36x3) == std::vector<int>{2, 2, 3, 3, 3});
}
