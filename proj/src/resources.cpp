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

#include "naqft/resources.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "naqft/errors.hpp"
#include "naqft/synthesis.hpp"

namespace naqft {

GateCounts& GateCounts::operator+=(const GateCounts& o) {
  toffoli += o.toffoli;
  c3not += o.c3not;
  cnot += o.cnot;
  rz += o.rz;
  t += o.t;
  s += o.s;
  h += o.h;
  swap += o.swap;
  generic2q += o.generic2q;
  generic1q += o.generic1q;
  other += o.other;
  return *this;
}

namespace {

enum class Cost { Clifford, TConsuming, Unsupported };

/** Tallies one gate; returns whether it consumes T gates. */
Cost tally(const Gate& g, const std::vector<int>& dims, GateCounts& k) {
  for (int w : g.targets)
    if (dims[w] != 2) return ++k.other, Cost::Unsupported;
  for (const auto& c : g.controls)
    if (dims[c.wire] != 2 || c.value == kProductFactor)
      return ++k.other, Cost::Unsupported;
  const std::size_t nc = g.controls.size();
  using K = GateKind;
  switch (g.kind) {
    case K::X:
    case K::Y:
    case K::Z:
      if (nc == 0) return ++k.other, Cost::Clifford;
      if (nc == 1) return ++k.cnot, Cost::Clifford;
      if (nc == 2) return ++k.toffoli, Cost::TConsuming;
      if (nc == 3) return ++k.c3not, Cost::TConsuming;
      return ++k.other, Cost::Unsupported;
    default:
      break;
  }
  if (nc != 0) return ++k.other, Cost::Unsupported;
  switch (g.kind) {
    case K::T:
    case K::Tdg: return ++k.t, Cost::TConsuming;
    case K::S:
    case K::Sdg: return ++k.s, Cost::Clifford;
    case K::H: return ++k.h, Cost::Clifford;
    case K::SWAP: return ++k.swap, Cost::Clifford;
    case K::Rz:
    case K::P: return ++k.rz, Cost::TConsuming;
    case K::U1: return ++k.generic1q, Cost::TConsuming;
    case K::U:
      if (g.targets.size() == 2) return ++k.generic2q, Cost::TConsuming;
      return ++k.other, Cost::Unsupported;
    case K::H3p:
    case K::H3pdg: return ++k.generic2q, Cost::TConsuming;
    default: return ++k.other, Cost::Unsupported;
  }
}

}  // namespace

ResourceReport census(const Circuit& c) {
  ResourceReport r{c.group, c.arch, {}, c.ancilla_count(), 0, 0.0, 0.0, true};
  const auto dims = c.dims();
  std::vector<int> depth(dims.size(), 0);
  std::map<int, int> t_per_layer;
  for (const auto& g : c.gates) {
    const Cost cost = tally(g, dims, r.counts);
    if (cost == Cost::Unsupported) r.fault_tolerant = false;
    int layer = 0;
    for (int w : g.targets) layer = std::max(layer, depth[w]);
    for (const auto& ctl : g.controls) layer = std::max(layer, depth[ctl.wire]);
    ++layer;
    for (int w : g.targets) depth[w] = layer;
    for (const auto& ctl : g.controls) depth[ctl.wire] = layer;
    if (cost == Cost::TConsuming) ++t_per_layer[layer];
  }
  for (const auto& [layer, n] : t_per_layer) r.t_width = std::max(r.t_width, n);
  const auto& k = r.counts;
  r.a = kToffoliT * k.toffoli + kC3NotT * k.c3not + k.t;
  r.b = kRzT * (k.rz + kGeneric2qRz * k.generic2q + 3 * k.generic1q);
  return r;
}

std::string to_string(Impl impl) { return impl == Impl::FT ? "FT" : "FFT"; }

std::optional<Impl> parse_impl(const std::string& s) {
  if (s == "ft" || s == "FT") return Impl::FT;
  if (s == "fft" || s == "FFT") return Impl::FFT;
  return std::nullopt;
}

const std::vector<CostFormula>& table7_rows() {
  using G = GroupId;
  static const std::vector<CostFormula> rows = {
      {G::BT, Impl::FT, 0, 3735.2, 5, 0, ""},
      {G::BT, Impl::FT, 0, 2802.55, 5, 0, "alt"},
      {G::BT, Impl::FFT, 98, 48.3, 2, 2, ""},
      {G::BO, Impl::FT, 0, 11370.1, 6, 0, ""},
      {G::BO, Impl::FFT, 216, 48.3, 2, 4, ""},
      {G::D27, Impl::FFT, 168, 80.5, 4, 2, ""},
      {G::D54, Impl::FFT, 294, 80.5, 4, 5, ""},
      {G::S36x3, Impl::FT, 0, 185898, 4, 0, ""},
      {G::S36x3, Impl::FFT, 532, 117.3, 8, 8, ""},
  };
  return rows;
}

const CostFormula& table7(GroupId group, Impl impl) {
  for (const auto& r : table7_rows())
    if (r.group == group && r.impl == impl) return r;
  throw NaqftError(ErrorKind::UnknownRow,
                   group_name(group) + " " + to_string(impl));
}

const CostFormula& table7_best(GroupId group, Impl impl) {
  const CostFormula* best = &table7(group, impl);
  for (const auto& r : table7_rows())
    if (r.group == group && r.impl == impl && r.b < best->b) best = &r;
  return *best;
}

double t_count(double a, double b, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw NaqftError(ErrorKind::BadEpsilon, fmt::format("{}", epsilon));
  return a + b * std::log2(1.0 / epsilon);
}

double t_count(const CostFormula& f, double epsilon) {
  return t_count(f.a, f.b, epsilon);
}

double t_count(const ResourceReport& r, double epsilon) {
  return t_count(r.a, r.b, epsilon);
}

const std::vector<SimCostModel>& simcost_rows() {
  using G = GroupId;
  static const std::vector<SimCostModel> rows = {
      {G::BT, Impl::FT, 4676, -3948, 11191.2, 18.975, 0.5, 19463, 33, 9.8e10, 29},
      {G::BT, Impl::FFT, 4676, -3556, 174.225, 18.975, 1.5, 101, 11, 3.4e9, 29},
      {G::BO, Impl::FT, 11949, -10157, 45473.3, 6.9, 2, 19771, 3, 4.1e11, 73},
      {G::BO, Impl::FFT, 11949, -9293, 186.3, 6.9, 6, 27, 1, 5.6e9, 73},
      {G::S36x3, Impl::FT, 9632, -8192, 744167, 12.075, 1.5, 431401, 7, 7.0e12, 580},
      {G::S36x3, Impl::FFT, 9632, -6034, 1045.93, 12.075, 0.5, 1819, 21, 1.2e10, 580},
  };
  return rows;
}

const SimCostModel& simcost_model(GroupId group, Impl impl) {
  for (const auto& r : simcost_rows())
    if (r.group == group && r.impl == impl) return r;
  throw NaqftError(ErrorKind::UnknownRow,
                   group_name(group) + " " + to_string(impl));
}

double simcost(const SimCostModel& m, int d, double epsilon) {
  if (d < 1) throw NaqftError(ErrorKind::Parse, "d must be a positive integer");
  return t_count(m.c_d * d + m.c_0, m.l_0 + m.l_d * d, epsilon);
}

double simcost(GroupId group, Impl impl, int d, double epsilon) {
  return simcost(simcost_model(group, impl), d, epsilon);
}

double epsilon_tilde(const SimCostModel& m, int d) {
  return m.e_s * (m.e_0 + m.e_d * d);
}

std::vector<ComparisonRow> comparison(double epsilon) {
  std::vector<ComparisonRow> rows;
  for (GroupId g : kAllGroups) {
    bool has_fft = false;
    for (const auto& f : table7_rows()) {
      if (f.group != g) continue;
      has_fft |= f.impl == Impl::FFT;
      rows.push_back({g, f.impl, f.variant.empty() ? "published" : "published-" + f.variant,
                      f.a, f.b, f.t_width, f.ancilla, t_count(f, epsilon), std::nullopt});
    }
    if (!has_fft) continue;
    const ResourceReport r = census(synthesize(g, Arch::Qubit));
    rows.push_back({g, Impl::FFT, "ours", r.a, r.b, r.t_width, r.ancilla,
                    t_count(r, epsilon), r});
  }
  return rows;
}

namespace {

struct Delta {
  std::string a, b;
};

Delta delta(const ComparisonRow& r) {
  if (r.source != "ours") return {"", ""};
  const CostFormula& p = table7(r.group, Impl::FFT);
  return {fmt::format("{:+g}", r.a - p.a), fmt::format("{:+.4g}", r.b - p.b)};
}

std::string width(const ComparisonRow& r) {
  return r.t_width ? std::to_string(*r.t_width) : "";
}

}  // namespace

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = "group,impl,source,a,b,width,ancilla,T_eps,delta_a,delta_b\n";
  for (const auto& r : rows) {
    const Delta d = delta(r);
    out += fmt::format("{},{},{},{:g},{:.6g},{},{},{:.6g},{},{}\n",
                       group_name(r.group), to_string(r.impl), r.source, r.a,
                       r.b, width(r), r.ancilla, r.t_eps, d.a, d.b);
  }
  return out;
}

std::string comparison_text(const std::vector<ComparisonRow>& rows) {
  std::string out = fmt::format("{:<7} {:<4} {:<13} {:>7} {:>10} {:>6} {:>8} {:>12} {:>8} {:>9}\n",
                                "group", "impl", "source", "a", "b", "width",
                                "ancilla", "T(eps)", "delta_a", "delta_b");
  for (const auto& r : rows) {
    const Delta d = delta(r);
    out += fmt::format("{:<7} {:<4} {:<13} {:>7g} {:>10.6g} {:>6} {:>8} {:>12.6g} {:>8} {:>9}\n",
                       group_name(r.group), to_string(r.impl), r.source, r.a,
                       r.b, width(r), r.ancilla, r.t_eps, d.a, d.b);
  }
  for (const auto& r : rows)
    if (r.census && r.group == GroupId::D27)
      out += fmt::format("D27 Toffoli count: ours {}, published 24 (delta {:+d})\n",
                         r.census->counts.toffoli, r.census->counts.toffoli - 24);
  return out;
}

std::string to_json(const ResourceReport& r, double epsilon) {
  const auto& k = r.counts;
  return fmt::format(
      "{{\n  \"group\": \"{}\",\n  \"arch\": \"{}\",\n  \"fault_tolerant\": {},\n"
      "  \"counts\": {{\"toffoli\": {}, \"c3not\": {}, \"cnot\": {}, \"rz\": {}, "
      "\"t\": {}, \"s\": {}, \"h\": {}, \"swap\": {}, \"generic-2q\": {}, "
      "\"generic-1q\": {}, \"other\": {}}},\n"
      "  \"ancilla\": {},\n  \"t_width\": {},\n  \"a\": {:.17g},\n  \"b\": {:.17g},\n"
      "  \"epsilon\": {:.17g},\n  \"t_count\": {:.17g}\n}}\n",
      group_name(r.group), to_string(r.arch), r.fault_tolerant, k.toffoli,
      k.c3not, k.cnot, k.rz, k.t, k.s, k.h, k.swap, k.generic2q, k.generic1q,
      k.other, r.ancilla, r.t_width, r.a, r.b, epsilon, t_count(r, epsilon));
}

}  // namespace naqft
