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
#include <cmath>
#include <set>

#include "naqft/circuit.hpp"
#include "naqft/errors.hpp"
#include "naqft/simulator.hpp"
#include "naqft/synthesis.hpp"

using namespace naqft;

namespace {

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

const std::vector<GateKind> kQutritKinds = {
    GateKind::X01, GateKind::X02, GateKind::X12, GateKind::Z0,   GateKind::Z1,
    GateKind::Z2,  GateKind::H3,  GateKind::H3dg, GateKind::CHI, GateKind::CHIdg,
    GateKind::T3,  GateKind::T3dg, GateKind::S3, GateKind::S3dg};

const std::vector<GateKind> kQubitKinds = {GateKind::X, GateKind::Y, GateKind::Z,
                                           GateKind::H, GateKind::S, GateKind::Sdg,
                                           GateKind::T, GateKind::Tdg};

}  // namespace

TEST_CASE("catalog gates are unitary", "[circuit]") {
  for (GateKind k : kQutritKinds) {
    const Mat m = gate_matrix(gate(k, 0), {3});
    CHECK(max_abs(m * m.adjoint() - Mat::Identity(3, 3)) < 1e-12);
  }
  for (GateKind k : kQubitKinds) {
    const Mat m = gate_matrix(gate(k, 0), {2});
    CHECK(max_abs(m * m.adjoint() - Mat::Identity(2, 2)) < 1e-12);
  }
  for (GateKind k : {GateKind::H3p, GateKind::H3pdg}) {
    const Mat m = gate_matrix(gate(k, {0, 1}), {2, 2});
    CHECK(max_abs(m * m.adjoint() - Mat::Identity(4, 4)) < 1e-12);
  }
  CHECK_THROWS_AS(gate_matrix(gate(GateKind::CHI, 0), {2}), NaqftError);
}

TEST_CASE("qutrit gate definitions", "[circuit]") {
  const Mat chi = gate_matrix(gate(GateKind::CHI, 0), {3});
  for (int x = 0; x < 3; ++x) CHECK(std::abs(chi((x + 1) % 3, x) - 1.0) < 1e-15);
  const Complex w = std::polar(1.0, 2 * M_PI / 3);
  const Mat h3 = gate_matrix(gate(GateKind::H3, 0), {3});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(std::abs(h3(a, b) - std::pow(w, a * b) / std::sqrt(3.0)) < 1e-12);
  const Mat x12 = gate_matrix(gate(GateKind::X12, 0), {3});
  CHECK(x12(0, 0) == Complex(1.0));
  CHECK(x12(1, 2) == Complex(1.0));
  CHECK(x12(2, 1) == Complex(1.0));
  const Mat z2 = gate_matrix(gate(GateKind::Z2, 0), {3});
  CHECK(max_abs(z2 - Vec(Eigen::Vector3cd(1, 1, -1)).asDiagonal().toDenseMatrix()) < 1e-15);
  const Mat s3 = gate_matrix(gate(GateKind::S3, 0), {3});
  CHECK(max_abs(s3 * s3 * s3 - Mat::Identity(3, 3)) < 1e-12);
  const Mat t3 = gate_matrix(gate(GateKind::T3, 0), {3});
  CHECK(max_abs(t3.diagonal().asDiagonal().toDenseMatrix() - t3) == 0.0);
}

TEST_CASE("SWAP and multi-target matrices order targets little-endian", "[circuit]") {
  const Mat sw = gate_matrix(gate(GateKind::SWAP, {0, 1}), {3, 3});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(sw(b + 3 * a, a + 3 * b) == Complex(1.0));
  Mat u = Mat::Zero(4, 4);
  u(1, 0) = u(0, 1) = u(2, 2) = u(3, 3) = 1.0;
  Circuit c = Circuit::empty(GroupId::Z4, Arch::Mixed);
  c.add(unitary(u, {0, 1}));
  CHECK(c.gates[0].kind == GateKind::U);
  CHECK(max_abs(circuit_unitary(c) - u) == 0.0);
}

TEST_CASE("inverse, invert and compose", "[circuit]") {
  Circuit h = Circuit::empty(GroupId::Z2, Arch::Mixed);
  h.add(gate(GateKind::H, 0));
  CHECK(invert(h).gates == h.gates);

  Circuit x = Circuit::empty(GroupId::Z3xZ3, Arch::Mixed);
  x.add(gate(GateKind::CHI, 0));
  CHECK(invert(x).gates[0].kind == GateKind::CHIdg);

  for (GroupId id : {GroupId::BT, GroupId::D54}) {
    const Circuit f = synthesize(id, Arch::Mixed);
    const Circuit inv = invert(f);
    CHECK(invert(inv).gates == f.gates);
    const Mat u = circuit_unitary(compose(inv, f));
    CHECK(max_abs(u - Mat::Identity(u.rows(), u.cols())) < 1e-9);
  }
  CHECK_THROWS_AS(compose(h, x), NaqftError);
}

TEST_CASE("check rejects malformed gates", "[circuit]") {
  Circuit c = Circuit::empty(GroupId::BT, Arch::Mixed);
  CHECK_THROWS_AS(c.add(gate(GateKind::X, 7)), NaqftError);
  CHECK_THROWS_AS(c.add(gate(GateKind::X, 1, {{1, 1}})), NaqftError);
  CHECK_THROWS_AS(c.add(gate(GateKind::X, 1, {{0, 3}})), NaqftError);
  CHECK_THROWS_AS(c.add(gate(GateKind::X, 1, {{0, kProductFactor}})), NaqftError);
  CHECK_THROWS_AS(c.add(gate(GateKind::CHI_PROD, 0)), NaqftError);
  CHECK_THROWS_AS(c.add(gate(GateKind::CHI, 1)), NaqftError);
  c.add(gate(GateKind::X, 1, {{0, 2}}));
  CHECK(c.gates.size() == 1);
}

TEST_CASE("register layouts and encoding", "[circuit]") {
  const Circuit bt = Circuit::empty(GroupId::BT, Arch::Mixed);
  CHECK(bt.dims() == std::vector<int>{3, 2, 2, 2});
  CHECK(bt.wires[0].role == WireRole::Transversal);
  const Circuit s = Circuit::empty(GroupId::S36x3, Arch::Mixed);
  CHECK(s.dims() == std::vector<int>{2, 2, 3, 3, 3});
  const Circuit q = Circuit::empty(GroupId::D27, Arch::Qubit);
  CHECK(q.dims() == std::vector<int>(6, 2));
  for (GroupId id : kAllGroups)
    for (Arch a : {Arch::Mixed, Arch::Qubit}) {
      const Circuit c = Circuit::empty(id, a);
      std::set<std::size_t> seen;
      for (int g = 0; g < Group::get(id).order(); ++g) seen.insert(encode(c, g));
      CHECK(static_cast<int>(seen.size()) == Group::get(id).order());
    }
  // Qutrit value 2 is the pair (lo, hi) = (0, 1).
  const Circuit z = Circuit::empty(GroupId::Z3xZ3, Arch::Qubit);
  const int g = Group::get(GroupId::Z3xZ3).index_of(std::vector<int>{0, 2});
  CHECK(encode(z, g) == 2u);
}

TEST_CASE("circuit JSON round trip is byte-identical", "[circuit]") {
  for (GroupId id : {GroupId::Q8, GroupId::BT, GroupId::D27, GroupId::S36x3})
    for (Arch a : {Arch::Mixed, Arch::Qubit}) {
      const Circuit c = synthesize(id, a);
      const std::string text = to_json(c);
      const Circuit back = circuit_from_json(text);
      CHECK(back.gates == c.gates);
      CHECK(back.wires == c.wires);
      CHECK(to_json(back) == text);
      CHECK(text == to_json(synthesize(id, a)));
    }
  Circuit r = Circuit::empty(GroupId::Z2, Arch::Mixed);
  r.add(rotation(GateKind::Rz, 0.1, 0));
  const std::string text = to_json(r);
  CHECK(text.find("\"theta\": 0.10000000000000001") != std::string::npos);
  CHECK(text.find("\"group\"") < text.find("\"arch\""));
  CHECK(text.find("\"gates\"") < text.find("\"metadata\""));
  CHECK_THROWS_AS(circuit_from_json("{"), NaqftError);
  CHECK_THROWS_AS(circuit_from_json(R"({"group":"A5","arch":"mixed","wires":[],"gates":[],"metadata":{"ancilla_count":0}})"),
                  NaqftError);
}
