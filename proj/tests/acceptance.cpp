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

#include <fmt/format.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "naqft/resources.hpp"
#include "naqft/simulator.hpp"
#include "naqft/synthesis.hpp"
#include "naqft/transpile.hpp"
#include "naqft/verifier.hpp"

using namespace naqft;

namespace {

constexpr double kTol = 1e-9;
constexpr double kOracleSeconds = 10.0;
constexpr double kGroupSeconds = 60.0;
constexpr double kS108Seconds = 300.0;
constexpr double kQubitSeconds = 600.0;
constexpr double kGroupTheorySeconds = 30.0;
constexpr double kD27TCount = 2842.2;
constexpr double kD27TCountTol = 0.1;
constexpr double kBtSimcost = 18150.6;
constexpr double kBtSimcostTol = 0.5;
constexpr double kRatioTol = 0.03;
constexpr double kCostFactor = 2.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

bool report_ok(const VerificationReport& r) {
  return r.pass && r.off_block_residual < kTol && r.character_residual < kTol &&
         r.intertwiner_residual < kTol && r.ancilla_leakage < kTol &&
         r.forbidden_leakage < kTol && r.unitarity_residual < kTol;
}

Outcome oracle_validity() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (GroupId id : kAllGroups) {
    const Mat f = dft_matrix(id);
    worst = std::max(worst, max_abs(f * f.adjoint() - Mat::Identity(f.rows(), f.rows())));
    int sum = 0;
    for (const auto& r : irreps(id)) sum += r.dim * r.dim;
    if (sum != Group::get(id).order()) o.fail(group_name(id) + " sum d^2 != |G|");
    if (!report_ok(verify_fft(f, id))) o.fail(group_name(id) + " oracle does not verify");
  }
  if (worst >= kTol) o.fail(fmt::format("unitarity {:.2e}", worst));
  const double s = seconds_since(t0);
  if (s >= kOracleSeconds) o.fail(fmt::format("took {:.1f}s", s));
  o.note(fmt::format("max |FF^+ - I| {:.2e}, {:.2f}s", worst, s));
  return o;
}

Outcome fft_correctness() {
  Outcome o;
  for (GroupId id : kAllGroups) {
    const auto t0 = Clock::now();
    const VerificationReport r = verify_circuit(synthesize(id, Arch::Mixed), kTol);
    const double s = seconds_since(t0);
    const double limit = id == GroupId::S36x3 ? kS108Seconds : kGroupSeconds;
    if (!report_ok(r)) o.fail(group_name(id) + " fails verification");
    if (s >= limit) o.fail(fmt::format("{} took {:.1f}s", group_name(id), s));
    o.note(fmt::format("{} off {:.1e} char {:.1e} {:.2f}s", group_name(id),
                       r.off_block_residual, r.character_residual, s));
  }
  return o;
}

Outcome qubit_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  for (GroupId id : kAllGroups) {
    const Circuit mixed = synthesize(id, Arch::Mixed);
    const Circuit qubit = transpile(mixed);
    const auto a = extract_group_operator(mixed);
    const auto b = extract_group_operator(qubit);
    const double d = phase_distance(b.op, a.op);
    if (d >= kTol) o.fail(fmt::format("{} differs by {:.2e}", group_name(id), d));
    if (!report_ok(verify_circuit(qubit, kTol))) o.fail(group_name(id) + " qubit fails verification");
    o.note(fmt::format("{} {}w {:.1e}", group_name(id), qubit.wires.size(), d));
  }
  const double s = seconds_since(t0);
  if (s >= kQubitSeconds) o.fail(fmt::format("took {:.1f}s", s));
  o.note(fmt::format("{:.2f}s", s));
  return o;
}

Outcome gate_identities() {
  Outcome o;
  auto embedded = [](GateKind k) {
    Circuit c = Circuit::empty(GroupId::Z3xZ3, Arch::Mixed);
    c.add(gate(k, 0));
    return Mat(circuit_unitary(transpile(c)).topLeftCorner(3, 3));
  };
  for (GateKind k : {GateKind::CHI, GateKind::Z2, GateKind::X12, GateKind::H3}) {
    const Mat want = embed_qutrit(gate_matrix(gate(k, 0), {3})).topLeftCorner(3, 3);
    const double d = phase_distance(embedded(k), want);
    if (d >= kTol) o.fail(fmt::format("{} off by {:.2e}", to_string(k), d));
  }
  Mat z2 = Mat::Zero(4, 4);
  z2.diagonal() << 1, 1, -1, 1;
  if (max_abs(embed_qutrit(gate_matrix(gate(GateKind::Z2, 0), {3})) - z2) >= kTol)
    o.fail("embedded Z2 is not Diag(1,1,-1,1)");

  // Product-controlled chi against the direct chi^(product) action, all values.
  const Mat chi = gate_matrix(gate(GateKind::CHI, 0), {3});
  for (int nf : {2, 3}) {
    Circuit c = Circuit::empty(GroupId::S36x3, Arch::Mixed);
    std::vector<Control> ctl{{3, kProductFactor}, {4, kProductFactor}};
    if (nf == 3) ctl.push_back({1, kProductFactor});
    c.add(gate(GateKind::CHI_PROD, 2, ctl));
    const auto got = extract_group_operator(transpile(c));
    Mat want = Mat::Zero(108, 108);
    for (int x = 0; x < 108; ++x) {
      const int x1 = (x >> 1) & 1, x2 = (x / 4) % 3, x3 = (x / 12) % 3, x4 = x / 36;
      const int p = x3 * x4 * (nf == 3 ? x1 : 1) % 3;
      Mat pw = Mat::Identity(3, 3);
      for (int i = 0; i < p; ++i) pw = chi * pw;
      for (int y2 = 0; y2 < 3; ++y2) want(x - 4 * x2 + 4 * y2, x) = pw(y2, x2);
    }
    const double d = phase_distance(got.op, want);
    if (d >= kTol || got.ancilla_leakage >= kTol || got.forbidden_leakage >= kTol)
      o.fail(fmt::format("{}-control chi off by {:.2e}", nf, d));
  }
  o.note("chi, Z2, X12, H3 qubit forms; product-controlled chi with 2 and 3 factors on all 108 states");
  return o;
}

Outcome group_theory() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937 rng(108);
  for (GroupId id : kAllGroups) {
    const Group& g = Group::get(id);
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
      std::set<int> row, col;
      for (int b = 0; b < n; ++b) {
        row.insert(g.mul(a, b));
        col.insert(g.mul(b, a));
        if (max_abs(g.matrix(g.mul(a, b)) - g.matrix(a) * g.matrix(b)) >= kTol) {
          o.fail(group_name(id) + " homomorphism");
          return o;
        }
      }
      if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n)
        o.fail(group_name(id) + " Latin square");
    }
    auto assoc = [&](int a, int b, int c) {
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) o.fail(group_name(id) + " associativity");
    };
    if (n <= 48) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) assoc(a, b, c);
    } else {
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int k = 0; k < 10000; ++k) assoc(pick(rng), pick(rng), pick(rng));
    }
    if (predecessor(id)) {
      std::vector<bool> in(n, false);
      const auto emb = g.subgroup_embedding();
      for (int h : emb) in[h] = true;
      for (const auto& t : transversal(id))
        for (int h : emb)
          if (!in[g.conj(g.index_of(t), h)]) o.fail(group_name(id) + " normality");
    }
  }
  auto word = [](const Group& g, std::initializer_list<std::pair<int, int>> f) {
    const auto gens = g.generator_indices();
    int acc = 0;
    for (auto [i, p] : f) acc = g.mul(acc, g.power(gens[i], p));
    return acc;
  };
  {
    const Group& g = Group::get(GroupId::BT);
    const int u = word(g, {{3, 1}});
    const int minus = word(g, {{0, 1}});
    auto same_mod_sign = [&](int x, int y) { return x == y || x == g.mul(minus, y); };
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          const int h = word(g, {{0, a}, {1, b}, {2, c}});
          if (!same_mod_sign(g.conj(g.power(u, 2), h), word(g, {{1, c}, {2, b + c}})) ||
              !same_mod_sign(g.conj(u, h), word(g, {{1, b + c}, {2, b}})))
            o.fail("BT conjugation display");
        }
  }
  {
    const Group& g = Group::get(GroupId::D54);
    const int v2 = word(g, {{3, 1}});
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        for (int r = 0; r < 3; ++r)
          if (g.mul(g.mul(v2, word(g, {{0, p}, {1, q}, {2, r}})), v2) !=
              word(g, {{0, p}, {1, 2 * q}, {2, 2 * r}}))
            o.fail("D54 conjugation display");
  }
  {
    const Group& g = Group::get(GroupId::S36x3);
    const int v = word(g, {{4, 1}});
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 2; ++s)
            if (g.conj(v, word(g, {{0, p}, {1, q}, {2, r}, {3, s}})) !=
                word(g, {{0, p + 2 * q * r}, {1, 2 * r}, {2, q}, {3, s}}))
              o.fail("S36x3 conjugation display");
  }
  const double s = seconds_since(t0);
  if (s >= kGroupTheorySeconds) o.fail(fmt::format("took {:.1f}s", s));
  o.note(fmt::format("{:.2f}s", s));
  return o;
}

Outcome orbit_reproduction() {
  Outcome o;
  using Sets = std::set<std::set<std::string>>;
  struct Listing {
    GroupId group;
    std::set<std::string> extendable;
    Sets orbits;
    bool extendable_quoted;
    const char* analysis;
  };
  const std::vector<Listing> quoted = {
      {GroupId::BT, {"xi1", "xi5"}, {{"xi2", "xi3", "xi4"}}, true, ""},
      {GroupId::BO, {"rho1", "rho4", "rho7"}, {{"rho2", "rho3"}, {"rho5", "rho6"}}, true, ""},
      {GroupId::D27, {"chi1", "chi2", "chi3"}, {{"chi4", "chi5", "chi6"}, {"chi7", "chi8", "chi9"}}, true, ""},
      {GroupId::D54, {}, {{"xi2", "xi3"}, {"xi4", "xi7"}, {"xi5", "xi9"}, {"xi6", "xi8"}, {"xi10", "xi11"}}, false,
       "xi10/xi11 differ by their central character and V^2 commutes with the center, so both are fixed"},
      {GroupId::S36x3, {}, {{"rhobar3", "rhobar4"}, {"rhobar5", "rhobar6"}, {"rhobar7", "rhobar8"}, {"rhobar9", "rhobar10"}}, false,
       "S36x3 has eight 3-d irreps and no 6-d irrep (4*1 + 8*9 + 2*16 = 108), so the 3-d rhobar7..10 must be fixed"},
  };
  for (const auto& q : quoted) {
    const auto c = classify_conjugates(q.group);
    Sets got;
    for (const auto& orb : c.orbits) got.insert({orb.begin(), orb.end()});
    const std::set<std::string> ext(c.extendable.begin(), c.extendable.end());
    bool ok = got == q.orbits;
    if (q.extendable_quoted) ok = ok && ext == q.extendable;
    if (ok) continue;
    std::string missing;
    for (const auto& orb : q.orbits)
      if (!got.count(orb)) {
        std::string s;
        for (const auto& l : orb) s += (s.empty() ? "" : ",") + l;
        missing += " {" + s + "}";
      }
    o.fail(fmt::format("{} quoted orbits not found:{} ({})", group_name(q.group), missing,
                       q.analysis));
  }
  return o;
}

Outcome resource_transcription() {
  Outcome o;
  struct Row {
    GroupId g;
    Impl i;
    double a, b;
    int w, anc;
  };
  const std::vector<Row> rows = {
      {GroupId::BT, Impl::FT, 0, 3735.2, 5, 0},    {GroupId::BT, Impl::FFT, 98, 48.3, 2, 2},
      {GroupId::BO, Impl::FT, 0, 11370.1, 6, 0},   {GroupId::BO, Impl::FFT, 216, 48.3, 2, 4},
      {GroupId::D27, Impl::FFT, 168, 80.5, 4, 2},  {GroupId::D54, Impl::FFT, 294, 80.5, 4, 5},
      {GroupId::S36x3, Impl::FT, 0, 185898, 4, 0}, {GroupId::S36x3, Impl::FFT, 532, 117.3, 8, 8}};
  for (const auto& r : rows) {
    const CostFormula& f = table7(r.g, r.i);
    if (f.a != r.a || f.b != r.b || f.t_width != r.w || f.ancilla != r.anc)
      o.fail(group_name(r.g) + " " + to_string(r.i) + " row");
  }
  if (table7_best(GroupId::BT, Impl::FT).b != 2802.55) o.fail("BT FT alternative row");
  if (kToffoliT != 7 || kC3NotT != 21 || kRzT != 1.15) o.fail("basic gate costs");
  const double t = t_count(table7(GroupId::D27, Impl::FFT), 1e-10);
  if (std::abs(t - kD27TCount) > kD27TCountTol) o.fail(fmt::format("D27 T(1e-10) {:.2f}", t));
  const double sc = simcost(GroupId::BT, Impl::FFT, 3, 1e-10);
  if (std::abs(sc - kBtSimcost) > kBtSimcostTol) o.fail(fmt::format("BT simcost {:.2f}", sc));
  for (GroupId g : {GroupId::BT, GroupId::BO, GroupId::S36x3}) {
    const double ratio = simcost_model(g, Impl::FT).n_fid / simcost_model(g, Impl::FFT).n_fid;
    const double r = simcost_model(g, Impl::FFT).r_qft;
    if (std::abs(ratio / r - 1.0) >= kRatioTol)
      o.fail(fmt::format("{} ratio {:.1f} vs {}", group_name(g), ratio, r));
    o.note(fmt::format("{} ratio {:.1f}/{}", group_name(g), ratio, r));
  }
  o.note(fmt::format("D27 T(1e-10) {:.2f}, BT simcost {:.2f}", t, sc));
  return o;
}

Outcome resource_comparison() {
  Outcome o;
  for (const auto& r : comparison(1e-10)) {
    if (r.source != "ours") continue;
    const CostFormula& p = table7(r.group, Impl::FFT);
    if (r.a > kCostFactor * p.a || r.b > kCostFactor * p.b)
      o.fail(fmt::format("{} ({}, {:.4g}) exceeds 2x ({}, {})", group_name(r.group), r.a, r.b, p.a, p.b));
    o.note(fmt::format("{} a {:+g} b {:+.4g}", group_name(r.group), r.a - p.a, r.b - p.b));
    if (r.group == GroupId::D27)
      o.note(fmt::format("D27 Toffoli {} vs 24", r.census->counts.toffoli));
  }
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

Outcome cli_roundtrip(const char* cli) {
  Outcome o;
  for (GroupId id : kAllGroups)
    for (Arch a : {Arch::Mixed, Arch::Qubit}) {
      const std::string text = to_json(synthesize(id, a));
      if (text != to_json(synthesize(id, a))) o.fail(group_name(id) + " not deterministic");
      const Circuit back = circuit_from_json(text);
      if (to_json(back) != text) o.fail(group_name(id) + " re-serialization differs");
    }
  if (!cli) {
    o.fail("no CLI path given");
    return o;
  }
  const auto dir = std::filesystem::temp_directory_path() / "naqft_acceptance";
  std::filesystem::create_directories(dir);
  const std::string c1 = (dir / "c1.json").string(), c2 = (dir / "c2.json").string();
  const std::string exe = std::string("\"") + cli + "\"";
  for (const auto& path : {c1, c2})
    if (run(exe + " synthesize --group d27 --arch qubit --out " + path) != 0)
      o.fail("synthesize failed");
  if (slurp(c1) != slurp(c2) || slurp(c1).empty()) o.fail("synthesize output differs");
  const std::string v1 = (dir / "v1.json").string(), v2 = (dir / "v2.json").string();
  if (run(exe + " verify --in " + c1 + " --out " + v1) != 0) o.fail("verify --in failed");
  if (run(exe + " verify --in " + c1 + " --out " + v2) != 0) o.fail("verify --in failed");
  if (slurp(v1) != slurp(v2)) o.fail("verify output differs");
  if (run(exe + " verify --group bt --arch mixed --out " + v2) != 0) o.fail("verify bt failed");
  std::filesystem::remove_all(dir);
  o.note("18 circuits re-serialize byte-identically; d27 qubit CLI synthesize/verify repeatable");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle validity", oracle_validity},
      {"FFT correctness (mixed)", fft_correctness},
      {"qubit-architecture equivalence", qubit_equivalence},
      {"gate identities", gate_identities},
      {"group theory", group_theory},
      {"conjugate-orbit reproduction", orbit_reproduction},
      {"resource transcription", resource_transcription},
      {"resource comparison", resource_comparison},
      {"CLI round trip and determinism", [cli] { return cli_roundtrip(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    fmt::print("criterion {}: {} {} - {}\n", i + 1, o.pass ? "PASS" : "FAIL",
               criteria[i].first, o.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria pass\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
