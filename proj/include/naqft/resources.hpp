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

#include "naqft/circuit.hpp"

namespace naqft {

inline constexpr double kToffoliT = 7.0;
inline constexpr double kC3NotT = 21.0;
inline constexpr int kC3NotAncilla = 1;
/** T gates per Rz are 1.15 log2(1/eps). */
inline constexpr double kRzT = 1.15;
/** A generic two-qubit unitary costs 3 CNOT and 14 Rz. */
inline constexpr int kGeneric2qRz = 14;
inline constexpr int kGeneric2qCnot = 3;

struct GateCounts {
  int toffoli = 0;
  int c3not = 0;
  int cnot = 0;
  int rz = 0;
  int t = 0;
  int s = 0;
  int h = 0;
  int swap = 0;
  int generic2q = 0;
  /** Single-qubit unitaries without a named kind; 3 Rz each. */
  int generic1q = 0;
  int other = 0;

  GateCounts& operator+=(const GateCounts& o);
  bool operator==(const GateCounts&) const = default;
};

struct ResourceReport {
  GroupId group;
  Arch arch;
  GateCounts counts;
  int ancilla = 0;
  int t_width = 0;
  /** T count is a + b log2(1/eps). */
  double a = 0.0;
  double b = 0.0;
  /** False when qutrit gates were counted under `other`. */
  bool fault_tolerant = true;
};

ResourceReport census(const Circuit& c);

enum class Impl { FT, FFT };
std::string to_string(Impl impl);
std::optional<Impl> parse_impl(const std::string& s);

struct CostFormula {
  GroupId group;
  Impl impl;
  double a = 0.0;
  double b = 0.0;
  int t_width = 0;
  int ancilla = 0;
  /** Empty for the primary row, otherwise the alternative row's tag. */
  std::string variant;
};

/** Every group row of the T-cost table, in printed order. */
const std::vector<CostFormula>& table7_rows();
/** First row for (group, impl); throws UnknownRow. */
const CostFormula& table7(GroupId group, Impl impl);
/** Row with the smallest b for (group, impl). */
const CostFormula& table7_best(GroupId group, Impl impl);

double t_count(double a, double b, double epsilon);
double t_count(const CostFormula& f, double epsilon);
double t_count(const ResourceReport& r, double epsilon);

/**
 * Simulation cost C(d, eps) = c_d d + c_0 + (l_0 + l_d d) log2(1/eps) and
 * eps~(d) = e_s (e_0 + e_d d), with the quoted fiducial count and ratio.
 */
struct SimCostModel {
  GroupId group;
  Impl impl;
  double c_d, c_0, l_0, l_d;
  double e_s, e_0, e_d;
  double n_fid;
  double r_qft;
};

const std::vector<SimCostModel>& simcost_rows();
const SimCostModel& simcost_model(GroupId group, Impl impl);
double simcost(const SimCostModel& m, int d, double epsilon);
double simcost(GroupId group, Impl impl, int d, double epsilon);
double epsilon_tilde(const SimCostModel& m, int d);

struct ComparisonRow {
  GroupId group;
  Impl impl;
  /** "published" or "ours". */
  std::string source;
  double a = 0.0;
  double b = 0.0;
  std::optional<int> t_width;
  int ancilla = 0;
  double t_eps = 0.0;
  /** For "ours" rows: extra fields against the published FFT row. */
  std::optional<ResourceReport> census;
};

/**
 * Published rows followed by the census of each synthesized qubit FFT for the
 * groups that have a printed FFT row.
 */
std::vector<ComparisonRow> comparison(double epsilon);

std::string comparison_csv(const std::vector<ComparisonRow>& rows);
std::string comparison_text(const std::vector<ComparisonRow>& rows);
std::string to_json(const ResourceReport& r, double epsilon);

}  // namespace naqft
