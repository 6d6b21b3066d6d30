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
#include "naqft/simulator.hpp"
#include "naqft/synthesis.hpp"
#include "naqft/verifier.hpp"

using namespace naqft;

namespace {

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

Vec random_state(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v(i) = Complex(nd(rng), nd(rng));
  return v / v.norm();
}

}  // namespace

TEST_CASE("apply on basis states", "[simulator]") {
  Circuit c = Circuit::empty(GroupId::Z2, Arch::Mixed);
  State s = apply(basis_state(c, 0), c);
  CHECK(s.amplitudes(0) == Complex(1.0));
  c.add(gate(GateKind::H, 0));
  s = apply(basis_state(c, 0), c);
  CHECK(std::abs(s.amplitudes(0) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(s.amplitudes(1) - 1 / std::sqrt(2.0)) < 1e-15);

  Circuit q = Circuit::empty(GroupId::Z3xZ3, Arch::Mixed);
  q.add(gate(GateKind::CHI, 0));
  s = apply(basis_state(q, 1), q);
  CHECK(std::abs(s.amplitudes(2) - 1.0) < 1e-15);
  CHECK_THROWS_AS(apply(basis_state(c, 0), q), NaqftError);
  CHECK_THROWS_AS(basis_state(c, 2), NaqftError);
}

TEST_CASE("simulation is linear and norm preserving", "[simulator]") {
  std::mt19937 rng(3);
  const Circuit c = synthesize(GroupId::D54, Arch::Mixed);
  const std::size_t n = 54;
  const Vec a = random_state(n, rng), b = random_state(n, rng);
  const Complex x(0.3, -0.8), y(0.5, 0.1);
  State sa{c.dims(), a}, sb{c.dims(), b}, sab{c.dims(), x * a + y * b};
  const Vec ra = apply(sa, c).amplitudes, rb = apply(sb, c).amplitudes;
  CHECK(std::abs(ra.norm() - 1.0) < 1e-12);
  CHECK((apply(sab, c).amplitudes - (x * ra + y * rb)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("extraction agrees with the dense unitary", "[simulator]") {
  for (GroupId id : {GroupId::Q8, GroupId::D27}) {
    const Circuit q = synthesize(id, Arch::Qubit);
    const Mat u = circuit_unitary(q);
    const auto ex = extract_group_operator(q);
    const int n = Group::get(id).order();
    Mat sub(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) sub(a, b) = u(encode(q, a), encode(q, b));
    CHECK(max_abs(sub - ex.op) < 1e-12);
    CHECK(ex.ancilla_leakage < 1e-9);
    CHECK(ex.forbidden_leakage < 1e-9);
  }
  const Circuit id = Circuit::empty(GroupId::BT, Arch::Mixed);
  CHECK(max_abs(extract_group_operator(id).op - Mat::Identity(24, 24)) == 0.0);
  Circuit h = Circuit::empty(GroupId::Z2, Arch::Mixed);
  h.add(gate(GateKind::H, 0));
  CHECK(max_abs(extract_group_operator(h).op - dft_matrix(GroupId::Z2)) < 1e-15);
}

TEST_CASE("leakage is reported, not thrown", "[simulator]") {
  Circuit c = Circuit::empty(GroupId::Z3xZ3, Arch::Qubit);
  c.add(gate(GateKind::X, 1, {{0, 1}}));  // |01> -> |11>, a forbidden state
  const auto ex = extract_group_operator(c);
  CHECK(std::abs(ex.forbidden_leakage - 1.0) < 1e-12);
  const int anc = c.add_ancilla(2);
  c.add(gate(GateKind::X, anc));
  CHECK(std::abs(extract_group_operator(c).ancilla_leakage - 1.0) < 1e-12);
}

TEST_CASE("verifier oracle self-test", "[verifier]") {
  for (GroupId id : kAllGroups) {
    const auto r = verify_fft(dft_matrix(id), id);
    INFO(group_name(id));
    CHECK(r.pass);
    CHECK(r.off_block_residual < 1e-9);
    CHECK(r.character_residual < 1e-9);
    CHECK(r.intertwiner_residual < 1e-9);
  }
  const auto bad = verify_fft(Mat::Identity(8, 8), GroupId::Q8);
  CHECK_FALSE(bad.pass);
  CHECK(bad.off_block_residual > 0.1);
}

TEST_CASE("oracle comparison absorbs intra-irrep rotations only", "[verifier]") {
  const Mat f = dft_matrix(GroupId::Q8);
  CHECK(compare_to_oracle(f, GroupId::Q8) < 1e-12);
  const auto labels = dft_row_labels(GroupId::Q8);
  std::vector<int> xi5;
  for (int i = 0; i < 8; ++i)
    if (labels[i] == "xi5") xi5.push_back(i);
  Mat inside = f;
  inside.row(xi5[0]).swap(inside.row(xi5[1]));
  CHECK(compare_to_oracle(inside, GroupId::Q8) < 1e-9);
  Mat across = f;
  across.row(0).swap(across.row(xi5[0]));
  CHECK(compare_to_oracle(across, GroupId::Q8) > 0.1);
  // Row order is free for the verifier; only the oracle comparison sees it.
  CHECK(verify_fft(across, GroupId::Q8).pass);
}

TEST_CASE("D27 block sizes and D54 listing mismatches", "[verifier]") {
  const auto r = verify_circuit(synthesize(GroupId::D27, Arch::Mixed));
  CHECK(r.pass);
  std::vector<int> want(9, 1);
  want.push_back(9);
  want.push_back(9);
  CHECK(r.block_sizes == want);
  // The 1-d states come out with the C and E characters on swapped digits
  // relative to the printed |0 q r> listing; the 3-d blocks match.
  const std::vector<std::string> swapped = {
      "xi2: listed [1] found [3]", "xi3: listed [2] found [6]",
      "xi4: listed [3] found [1]", "xi6: listed [5] found [7]",
      "xi7: listed [6] found [2]", "xi8: listed [7] found [5]"};
  CHECK(r.assignment_mismatches == swapped);
  const auto d54 = verify_fft(dft_matrix(GroupId::D54), GroupId::D54);
  CHECK(d54.pass);
  CHECK_FALSE(d54.assignment_mismatches.empty());
  const std::string json = to_json(d54);
  CHECK(json.find("\"block_sizes\"") != std::string::npos);
  CHECK(json.find("\"assignment_mismatches\"") != std::string::npos);
}

TEST_CASE("phase distance ignores global phase", "[simulator]") {
  const Mat f = dft_matrix(GroupId::BT);
  CHECK(phase_distance(std::polar(1.0, 1.1) * f, f) < 1e-14);
  CHECK(phase_distance(-f, f) < 1e-14);
  CHECK(phase_distance(f, Mat::Identity(24, 24)) > 0.1);
}
