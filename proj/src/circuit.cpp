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

#include "naqft/circuit.hpp"

#include <fmt/format.h>

#include <cmath>
#include <json.hpp>
#include <map>
#include <numbers>

#include "naqft/errors.hpp"

namespace naqft {

namespace {

const std::vector<std::pair<GateKind, const char*>>& kind_names() {
  static const std::vector<std::pair<GateKind, const char*>> names = {
      {GateKind::X, "X"},         {GateKind::Y, "Y"},
      {GateKind::Z, "Z"},         {GateKind::H, "H"},
      {GateKind::S, "S"},         {GateKind::Sdg, "Sdg"},
      {GateKind::T, "T"},         {GateKind::Tdg, "Tdg"},
      {GateKind::Rz, "Rz"},       {GateKind::P, "P"},
      {GateKind::U1, "U1"},       {GateKind::X01, "X01"},
      {GateKind::X02, "X02"},     {GateKind::X12, "X12"},
      {GateKind::Z0, "Z0"},       {GateKind::Z1, "Z1"},
      {GateKind::Z2, "Z2"},       {GateKind::H3, "H3"},
      {GateKind::H3dg, "H3dg"},   {GateKind::H3p, "H3p"},
      {GateKind::H3pdg, "H3pdg"}, {GateKind::CHI, "CHI"},
      {GateKind::CHIdg, "CHIdg"}, {GateKind::T3, "T3"},
      {GateKind::T3dg, "T3dg"},   {GateKind::S3, "S3"},
      {GateKind::S3dg, "S3dg"},   {GateKind::SWAP, "SWAP"},
      {GateKind::U, "U"},         {GateKind::CHI_PROD, "CHI_PROD"},
      {GateKind::CHIdg_PROD, "CHIdg_PROD"},
      {GateKind::S3_PROD, "S3_PROD"},
      {GateKind::S3dg_PROD, "S3dg_PROD"},
  };
  return names;
}

Complex omega(int n, int k = 1) {
  return std::polar(1.0, 2.0 * std::numbers::pi * k / n);
}

Mat diag(const std::vector<Complex>& d) {
  Mat m = Mat::Zero(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat perm3(int a, int b) {
  Mat m = Mat::Identity(3, 3);
  m(a, a) = m(b, b) = 0.0;
  m(a, b) = m(b, a) = 1.0;
  return m;
}

Mat h3() {
  Mat m(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = omega(3, r * c) / std::sqrt(3.0);
  return m;
}

Mat shift3() {
  Mat m = Mat::Zero(3, 3);
  for (int x = 0; x < 3; ++x) m((x + 1) % 3, x) = 1.0;
  return m;
}

int expected_dim(GateKind k) {
  switch (k) {
    case GateKind::X: case GateKind::Y: case GateKind::Z: case GateKind::H:
    case GateKind::S: case GateKind::Sdg: case GateKind::T: case GateKind::Tdg:
    case GateKind::Rz: case GateKind::P: case GateKind::H3p:
    case GateKind::H3pdg:
      return 2;
    case GateKind::U1: case GateKind::SWAP: case GateKind::U:
      return 0;
    default:
      return 3;
  }
}

std::size_t expected_targets(GateKind k) {
  switch (k) {
    case GateKind::H3p: case GateKind::H3pdg: case GateKind::SWAP:
      return 2;
    case GateKind::U:
      return 0;
    default:
      return 1;
  }
}

// Adding 0.0 maps -0 to 0, which JSON integers cannot carry back.
std::string num(double x) { return fmt::format("{:.17g}", x + 0.0); }

}  // namespace

std::string to_string(GateKind kind) {
  for (const auto& [k, n] : kind_names())
    if (k == kind) return n;
  return "?";
}

GateKind parse_gate_kind(const std::string& name) {
  for (const auto& [k, n] : kind_names())
    if (name == n) return k;
  throw NaqftError(ErrorKind::UnsupportedGate, "unknown gate kind " + name);
}

bool is_product_kind(GateKind kind) {
  return kind == GateKind::CHI_PROD || kind == GateKind::CHIdg_PROD ||
         kind == GateKind::S3_PROD || kind == GateKind::S3dg_PROD;
}

std::string to_string(WireRole role) {
  switch (role) {
    case WireRole::GroupRegister: return "group-register";
    case WireRole::Transversal: return "transversal";
    case WireRole::AncillaClean: return "ancilla-clean";
  }
  return "?";
}

WireRole parse_wire_role(const std::string& name) {
  for (WireRole r : {WireRole::GroupRegister, WireRole::Transversal,
                     WireRole::AncillaClean})
    if (to_string(r) == name) return r;
  throw NaqftError(ErrorKind::Parse, "unknown wire role " + name);
}

std::string to_string(Arch arch) {
  return arch == Arch::Mixed ? "mixed" : "qubit";
}

std::optional<Arch> parse_arch(const std::string& name) {
  if (name == "mixed") return Arch::Mixed;
  if (name == "qubit") return Arch::Qubit;
  return std::nullopt;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || targets != other.targets ||
      controls != other.controls || theta != other.theta)
    return false;
  if (matrix.rows() != other.matrix.rows() ||
      matrix.cols() != other.matrix.cols())
    return false;
  return matrix.size() == 0 || matrix == other.matrix;
}

RegisterLayout RegisterLayout::standard(GroupId group, Arch arch) {
  RegisterLayout l{group, register_dims(group), {}};
  int next = 0;
  for (int d : l.digit_dims) {
    if (d == 3 && arch == Arch::Qubit) {
      l.digit_wires.push_back({next, next + 1});
      next += 2;
    } else {
      l.digit_wires.push_back({next++});
    }
  }
  return l;
}

int RegisterLayout::register_wire_count() const {
  int n = 0;
  for (const auto& w : digit_wires) n += static_cast<int>(w.size());
  return n;
}

Circuit Circuit::empty(GroupId group, Arch arch) {
  Circuit c{group, arch, {}, {}, RegisterLayout::standard(group, arch)};
  const int n = static_cast<int>(c.layout.digit_dims.size());
  const int tpos = group_spec(group).transversal_position;
  for (int w = 0; w < n; ++w) {
    const WireRole role = (tpos >= 0 && n - 1 - w == tpos)
                              ? WireRole::Transversal
                              : WireRole::GroupRegister;
    for (int id : c.layout.digit_wires[w]) {
      const int dim = c.layout.digit_wires[w].size() == 1
                          ? c.layout.digit_dims[w]
                          : 2;
      c.wires.push_back({id, dim, role});
    }
  }
  return c;
}

int Circuit::add_ancilla(int dim) {
  const int id = static_cast<int>(wires.size());
  wires.push_back({id, dim, WireRole::AncillaClean});
  return id;
}

int Circuit::ancilla_count() const {
  int n = 0;
  for (const auto& w : wires) n += w.role == WireRole::AncillaClean;
  return n;
}

std::vector<int> Circuit::dims() const {
  std::vector<int> d;
  for (const auto& w : wires) d.push_back(w.dim);
  return d;
}

namespace {

void check_gate(const Circuit& c, const Gate& g) {
  const int n = static_cast<int>(c.wires.size());
  std::vector<bool> used(n, false);
  auto touch = [&](int w) {
    if (w < 0 || w >= n)
      throw NaqftError(ErrorKind::WireMismatch,
                       "gate " + to_string(g.kind) + " uses undeclared wire");
    if (used[w])
      throw NaqftError(ErrorKind::WireMismatch,
                       "gate " + to_string(g.kind) + " repeats a wire");
    used[w] = true;
  };
  for (int t : g.targets) touch(t);
  bool has_factor = false;
  for (const auto& ctl : g.controls) {
    touch(ctl.wire);
    if (ctl.value == kProductFactor) {
      has_factor = true;
      if (!is_product_kind(g.kind))
        throw NaqftError(ErrorKind::UnsupportedGate,
                         "product factor on " + to_string(g.kind));
    } else if (ctl.value < 0 || ctl.value >= c.wires[ctl.wire].dim) {
      throw NaqftError(ErrorKind::DimensionMismatch, "control value out of range");
    }
  }
  if (is_product_kind(g.kind) && !has_factor)
    throw NaqftError(ErrorKind::UnsupportedGate,
                     to_string(g.kind) + " without product factors");
  gate_matrix(g, c);
}

}  // namespace

/** Validates before appending; a rejected gate leaves the circuit unchanged. */
void Circuit::add(Gate g) {
  check_gate(*this, g);
  gates.push_back(std::move(g));
}

void Circuit::check() const {
  const int n = static_cast<int>(wires.size());
  for (int i = 0; i < n; ++i)
    if (wires[i].id != i)
      throw NaqftError(ErrorKind::WireMismatch, "wire ids must be 0..n-1");
  for (const auto& g : gates) check_gate(*this, g);
}

Gate gate(GateKind kind, int target, std::vector<Control> controls) {
  return Gate{kind, {target}, std::move(controls), 0.0, Mat()};
}

Gate gate(GateKind kind, std::vector<int> targets,
          std::vector<Control> controls) {
  return Gate{kind, std::move(targets), std::move(controls), 0.0, Mat()};
}

Gate rotation(GateKind kind, double theta, int target,
              std::vector<Control> controls) {
  return Gate{kind, {target}, std::move(controls), theta, Mat()};
}

Gate unitary(const Mat& m, std::vector<int> targets,
             std::vector<Control> controls) {
  const GateKind kind = targets.size() == 1 ? GateKind::U1 : GateKind::U;
  return Gate{kind, std::move(targets), std::move(controls), 0.0, m};
}

Mat gate_matrix(const Gate& g, const std::vector<int>& target_dims) {
  const std::size_t nt = expected_targets(g.kind);
  if ((nt && g.targets.size() != nt) || g.targets.empty() ||
      target_dims.size() != g.targets.size())
    throw NaqftError(ErrorKind::DimensionMismatch,
                     to_string(g.kind) + ": wrong number of targets");
  const int want = expected_dim(g.kind);
  for (int d : target_dims)
    if ((want && d != want) || (d != 2 && d != 3))
      throw NaqftError(ErrorKind::DimensionMismatch,
                       to_string(g.kind) + ": wrong target dimension");
  const Complex i(0.0, 1.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::X: return perm3(0, 1).topLeftCorner(2, 2);
    case GateKind::Y: {
      Mat m = Mat::Zero(2, 2);
      m(0, 1) = -i;
      m(1, 0) = i;
      return m;
    }
    case GateKind::Z: return diag({1.0, -1.0});
    case GateKind::H: {
      Mat m(2, 2);
      m << r2, r2, r2, -r2;
      return m;
    }
    case GateKind::S: return diag({1.0, i});
    case GateKind::Sdg: return diag({1.0, -i});
    case GateKind::T: return diag({1.0, omega(8)});
    case GateKind::Tdg: return diag({1.0, omega(8, -1)});
    case GateKind::Rz:
      return diag({std::polar(1.0, -g.theta / 2), std::polar(1.0, g.theta / 2)});
    case GateKind::P: return diag({1.0, std::polar(1.0, g.theta)});
    case GateKind::X01: return perm3(0, 1);
    case GateKind::X02: return perm3(0, 2);
    case GateKind::X12: return perm3(1, 2);
    case GateKind::Z0: return diag({-1.0, 1.0, 1.0});
    case GateKind::Z1: return diag({1.0, -1.0, 1.0});
    case GateKind::Z2: return diag({1.0, 1.0, -1.0});
    case GateKind::H3: return h3();
    case GateKind::H3dg: return h3().adjoint();
    case GateKind::H3p:
    case GateKind::H3pdg: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = 1.0;
      m.bottomRightCorner(3, 3) = h3();
      return g.kind == GateKind::H3p ? m : Mat(m.adjoint());
    }
    case GateKind::CHI:
    case GateKind::CHI_PROD:
      return shift3();
    case GateKind::CHIdg:
    case GateKind::CHIdg_PROD:
      return shift3().transpose();
    case GateKind::T3: return diag({1.0, omega(9), omega(9, 8)});
    case GateKind::T3dg: return diag({1.0, omega(9, -1), omega(9, -8)});
    case GateKind::S3:
    case GateKind::S3_PROD:
      return diag({1.0, omega(3), omega(3, 2)});
    case GateKind::S3dg:
    case GateKind::S3dg_PROD:
      return diag({1.0, omega(3, -1), omega(3, -2)});
    case GateKind::SWAP: {
      const int d = target_dims[0];
      if (target_dims[1] != d)
        throw NaqftError(ErrorKind::DimensionMismatch,
                         "SWAP of wires with different dimensions");
      Mat m = Mat::Zero(d * d, d * d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) m(b + d * a, a + d * b) = 1.0;
      return m;
    }
    case GateKind::U1:
    case GateKind::U: {
      int n = 1;
      for (int d : target_dims) n *= d;
      if (g.matrix.rows() != n || g.matrix.cols() != n)
        throw NaqftError(ErrorKind::DimensionMismatch,
                         to_string(g.kind) + ": matrix size mismatch");
      return g.matrix;
    }
  }
  throw NaqftError(ErrorKind::UnsupportedGate, to_string(g.kind));
}

Mat gate_matrix(const Gate& g, const Circuit& c) {
  std::vector<int> dims;
  for (int t : g.targets) {
    if (t < 0 || t >= static_cast<int>(c.wires.size()))
      throw NaqftError(ErrorKind::WireMismatch, "undeclared target wire");
    dims.push_back(c.wires[t].dim);
  }
  return gate_matrix(g, dims);
}

Gate inverse(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::T: out.kind = GateKind::Tdg; break;
    case GateKind::Tdg: out.kind = GateKind::T; break;
    case GateKind::Rz:
    case GateKind::P: out.theta = -g.theta; break;
    case GateKind::H3: out.kind = GateKind::H3dg; break;
    case GateKind::H3dg: out.kind = GateKind::H3; break;
    case GateKind::H3p: out.kind = GateKind::H3pdg; break;
    case GateKind::H3pdg: out.kind = GateKind::H3p; break;
    case GateKind::CHI: out.kind = GateKind::CHIdg; break;
    case GateKind::CHIdg: out.kind = GateKind::CHI; break;
    case GateKind::T3: out.kind = GateKind::T3dg; break;
    case GateKind::T3dg: out.kind = GateKind::T3; break;
    case GateKind::S3: out.kind = GateKind::S3dg; break;
    case GateKind::S3dg: out.kind = GateKind::S3; break;
    case GateKind::CHI_PROD: out.kind = GateKind::CHIdg_PROD; break;
    case GateKind::CHIdg_PROD: out.kind = GateKind::CHI_PROD; break;
    case GateKind::S3_PROD: out.kind = GateKind::S3dg_PROD; break;
    case GateKind::S3dg_PROD: out.kind = GateKind::S3_PROD; break;
    case GateKind::U1:
    case GateKind::U: out.matrix = g.matrix.adjoint(); break;
    default: break;
  }
  return out;
}

Circuit compose(const Circuit& c1, const Circuit& c2) {
  if (c1.wires != c2.wires)
    throw NaqftError(ErrorKind::WireMismatch,
                     "compose requires identical wire sets");
  Circuit out = c1;
  out.gates.insert(out.gates.end(), c2.gates.begin(), c2.gates.end());
  return out;
}

Circuit invert(const Circuit& c) {
  Circuit out = c;
  out.gates.clear();
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
    out.gates.push_back(inverse(*it));
  return out;
}

std::size_t encode(const Circuit& c, int element) {
  const auto& e = Group::get(c.group).element(element).exponents;
  const int n = static_cast<int>(e.size());
  if (static_cast<int>(c.layout.digit_dims.size()) != n)
    throw NaqftError(ErrorKind::LayoutMismatch, "layout does not match group");
  std::vector<std::size_t> stride(c.wires.size());
  std::size_t s = 1;
  for (std::size_t w = 0; w < c.wires.size(); ++w) {
    stride[w] = s;
    s *= c.wires[w].dim;
  }
  std::size_t idx = 0;
  for (int w = 0; w < n; ++w) {
    const int v = e[n - 1 - w];
    const auto& ws = c.layout.digit_wires[w];
    if (ws.size() == 1) {
      idx += v * stride[ws[0]];
    } else if (v > 0) {
      idx += stride[ws[v - 1]];
    }
  }
  return idx;
}

std::string to_json(const Circuit& c) {
  std::string s = "{\n";
  s += fmt::format("  \"group\": \"{}\",\n", group_name(c.group));
  s += fmt::format("  \"arch\": \"{}\",\n", to_string(c.arch));
  s += "  \"wires\": [";
  for (std::size_t i = 0; i < c.wires.size(); ++i) {
    const Wire& w = c.wires[i];
    s += fmt::format("{}\n    {{\"id\": {}, \"dim\": {}, \"role\": \"{}\"}}",
                     i ? "," : "", w.id, w.dim, to_string(w.role));
  }
  s += c.wires.empty() ? "],\n" : "\n  ],\n";
  s += "  \"gates\": [";
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    std::string targets, controls, params;
    for (std::size_t k = 0; k < g.targets.size(); ++k)
      targets += fmt::format("{}{}", k ? ", " : "", g.targets[k]);
    for (std::size_t k = 0; k < g.controls.size(); ++k)
      controls += fmt::format("{}{{\"wire\": {}, \"value\": {}}}",
                              k ? ", " : "", g.controls[k].wire,
                              g.controls[k].value);
    if (g.kind == GateKind::Rz || g.kind == GateKind::P) {
      params = fmt::format("{{\"theta\": {}}}", num(g.theta));
    } else if (g.kind == GateKind::U1 || g.kind == GateKind::U) {
      params = "{\"matrix\": [";
      for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
        params += r ? ", [" : "[";
        for (Eigen::Index k = 0; k < g.matrix.cols(); ++k)
          params += fmt::format("{}[{}, {}]", k ? ", " : "",
                                num(g.matrix(r, k).real()),
                                num(g.matrix(r, k).imag()));
        params += "]";
      }
      params += "]}";
    } else {
      params = "{}";
    }
    s += fmt::format(
        "{}\n    {{\"kind\": \"{}\", \"targets\": [{}], \"controls\": [{}], "
        "\"params\": {}}}",
        i ? "," : "", to_string(g.kind), targets, controls, params);
  }
  s += c.gates.empty() ? "],\n" : "\n  ],\n";
  s += fmt::format("  \"metadata\": {{\"ancilla_count\": {}}}\n}}\n",
                   c.ancilla_count());
  return s;
}

Circuit circuit_from_json(const std::string& text) {
  using nlohmann::json;
  try {
    const json j = json::parse(text);
    auto group = parse_group(j.at("group").get<std::string>());
    if (!group) throw NaqftError(ErrorKind::Parse, "unknown group");
    auto arch = parse_arch(j.at("arch").get<std::string>());
    if (!arch) throw NaqftError(ErrorKind::Parse, "unknown arch");
    Circuit c = Circuit::empty(*group, *arch);
    const auto& wires = j.at("wires");
    const std::size_t nreg = c.wires.size();
    if (wires.size() < nreg)
      throw NaqftError(ErrorKind::LayoutMismatch, "too few wires for group");
    for (std::size_t i = 0; i < wires.size(); ++i) {
      Wire w{wires[i].at("id").get<int>(), wires[i].at("dim").get<int>(),
             parse_wire_role(wires[i].at("role").get<std::string>())};
      if (i < nreg) {
        if (!(w == c.wires[i]))
          throw NaqftError(ErrorKind::LayoutMismatch,
                           "register wires do not match the group layout");
      } else {
        if (w.role != WireRole::AncillaClean ||
            w.id != static_cast<int>(i) || (w.dim != 2 && w.dim != 3))
          throw NaqftError(ErrorKind::LayoutMismatch, "bad ancilla wire");
        c.wires.push_back(w);
      }
    }
    for (const auto& jg : j.at("gates")) {
      Gate g{parse_gate_kind(jg.at("kind").get<std::string>()),
             jg.at("targets").get<std::vector<int>>(), {}, 0.0, Mat()};
      for (const auto& jc : jg.at("controls"))
        g.controls.push_back(
            {jc.at("wire").get<int>(), jc.at("value").get<int>()});
      const auto& p = jg.at("params");
      if (p.contains("theta")) g.theta = p.at("theta").get<double>();
      if (p.contains("matrix")) {
        const auto& rows = p.at("matrix");
        const int n = static_cast<int>(rows.size());
        g.matrix = Mat(n, n);
        for (int r = 0; r < n; ++r) {
          if (static_cast<int>(rows[r].size()) != n)
            throw NaqftError(ErrorKind::Parse, "matrix is not square");
          for (int k = 0; k < n; ++k)
            g.matrix(r, k) = Complex(rows[r][k].at(0).get<double>(),
                                     rows[r][k].at(1).get<double>());
        }
      }
      c.gates.push_back(std::move(g));
    }
    if (j.at("metadata").at("ancilla_count").get<int>() != c.ancilla_count())
      throw NaqftError(ErrorKind::Parse, "ancilla_count disagrees with wires");
    c.check();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw NaqftError(ErrorKind::Parse, e.what());
  }
}

}  // namespace naqft
