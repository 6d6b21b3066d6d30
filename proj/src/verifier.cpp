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

#include "naqft/verifier.hpp"

#include <fmt/format.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "naqft/errors.hpp"
#include "naqft/simulator.hpp"

namespace naqft {

namespace {

constexpr double kSupport = 1e-6;

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

Mat sub(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

Mat rows_of(const Mat& m, const std::vector<int>& rows) {
  Mat s(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) s.row(i) = m.row(rows[i]);
  return s;
}

Mat polar_unitary(const Mat& x) {
  Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

/** B(g) = F L(g) F^dagger for every element. */
std::vector<Mat> conjugated_regular(const Mat& F, const Group& grp) {
  const int n = grp.order();
  const Mat fdg = F.adjoint();
  std::vector<Mat> out;
  out.reserve(n);
  Mat m(n, n);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) m.row(grp.mul(g, h)) = fdg.row(h);
    out.push_back(F * m);
  }
  return out;
}

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

struct Intertwiner {
  bool found = false;
  std::string convention;
  double condition = 0.0;
  double residual = 1.0;
};

Intertwiner solve_intertwiner(const std::vector<Mat>& bs,
                              const std::vector<int>& gens,
                              const std::vector<Mat>& images,
                              const std::vector<int>& states, int d, bool left,
                              double tol) {
  const int k = d * d;
  const Mat id_d = Mat::Identity(d, d);
  const Mat id_k = Mat::Identity(k, k);
  auto rep = [&](int g) {
    return left ? kron(images[g], id_d) : kron(id_d, images[g]);
  };
  Mat ata = Mat::Zero(k * k, k * k);
  for (int g : gens) {
    const Mat b = sub(bs[g], states, states);
    const Mat a = kron(b.transpose(), id_k) - kron(id_k, rep(g));
    ata += a.adjoint() * a;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(ata);
  std::vector<Mat> null;
  for (int i = 0; i < k * k; ++i) {
    if (es.eigenvalues()(i) > 1e-14 * std::max(1.0, es.eigenvalues().maxCoeff()))
      break;
    null.push_back(Eigen::Map<const Mat>(es.eigenvectors().col(i).data(), k, k));
  }
  Intertwiner out;
  out.convention = left ? "rho(x)I" : "I(x)rho";
  if (null.empty()) return out;
  Mat x = Mat::Zero(k, k);
  for (std::size_t j = 0; j < null.size(); ++j)
    x += std::polar(1.0 + 0.37 * j, 0.61 + 1.13 * j) * null[j];
  Eigen::JacobiSVD<Mat> svd(x);
  const auto& s = svd.singularValues();
  out.condition = s(k - 1) > 0 ? s(0) / s(k - 1) : INFINITY;
  const Mat w = polar_unitary(x);
  double res = 0.0;
  for (std::size_t g = 0; g < bs.size(); ++g) {
    const Mat b = sub(bs[g], states, states);
    res = std::max(res, max_abs(w * b * w.adjoint() - rep(static_cast<int>(g))));
  }
  out.residual = res;
  out.found = res < tol;
  return out;
}

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += fmt::format("{}{}", i ? "," : "", v[i]);
  return s + "]";
}

std::string num(double x) {
  if (!std::isfinite(x)) return "1e308";
  return fmt::format("{:.17g}", x);
}

}  // namespace

VerificationReport verify_fft(const Mat& F, GroupId group, double tol) {
  const Group& grp = Group::get(group);
  const int n = grp.order();
  VerificationReport r;
  r.group = group;
  r.arch = "operator";
  if (F.rows() != n || F.cols() != n)
    throw NaqftError(ErrorKind::DimensionMismatch,
                     "operator size differs from the group order");
  r.unitarity_residual = max_abs(F * F.adjoint() - Mat::Identity(n, n));
  const auto bs = conjugated_regular(F, grp);
  const auto gens = grp.generator_indices();

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int g : gens)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (std::abs(bs[g](i, j)) > kSupport)
          parent[find(parent, i)] = find(parent, j);
  std::map<int, std::vector<int>> comps_by_root;
  for (int i = 0; i < n; ++i) comps_by_root[find(parent, i)].push_back(i);
  std::vector<std::vector<int>> comps;
  for (auto& [root, states] : comps_by_root) comps.push_back(states);
  std::sort(comps.begin(), comps.end());
  std::vector<int> comp_of(n);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (int s : comps[k]) comp_of[s] = static_cast<int>(k);
  for (const auto& b : bs)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (comp_of[i] != comp_of[j])
          r.off_block_residual = std::max(r.off_block_residual, std::abs(b(i, j)));

  const auto& rs = irreps(group);
  const auto& chars = character_table(group);
  const int nr = static_cast<int>(rs.size());
  // Isotypic projectors must be coordinate projectors; catches a single
  // merged block that support discovery alone would accept.
  for (int rho = 0; rho < nr; ++rho) {
    Mat p = Mat::Zero(n, n);
    for (int g = 0; g < n; ++g) p += std::conj(chars[rho][g]) * bs[g];
    p *= static_cast<double>(rs[rho].dim) / n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double e = i == j ? std::min(std::abs(p(i, i)),
                                           std::abs(p(i, i) - 1.0))
                                : std::abs(p(i, j));
        r.off_block_residual = std::max(r.off_block_residual, e);
      }
  }
  std::vector<std::vector<int>> subspace(nr);
  std::vector<std::vector<std::vector<int>>> copies(nr);
  for (const auto& c : comps) {
    int owner = -1;
    bool clean = true;
    for (int rho = 0; rho < nr; ++rho) {
      Complex m = 0.0;
      for (int g = 0; g < n; ++g) {
        Complex tr = 0.0;
        for (int s : c) tr += bs[g](s, s);
        m += std::conj(chars[rho][g]) * tr;
      }
      m /= static_cast<double>(n);
      if (std::abs(m) < 1e-6) continue;
      const double mr = std::round(m.real());
      if (owner >= 0 || std::abs(m - mr) > 1e-6 || mr < 1 ||
          mr * rs[rho].dim != static_cast<double>(c.size()))
        clean = false;
      owner = rho;
    }
    if (!clean || owner < 0) {
      r.errors.push_back("block " + list(c) + " is not isotypic");
      continue;
    }
    subspace[owner].insert(subspace[owner].end(), c.begin(), c.end());
    copies[owner].push_back(c);
  }

  for (int rho = 0; rho < nr; ++rho) {
    auto& s = subspace[rho];
    std::sort(s.begin(), s.end());
    const int d = rs[rho].dim;
    r.block_sizes.push_back(static_cast<int>(s.size()));
    for (int g = 0; g < n; ++g) {
      Complex tr = 0.0;
      for (int i : s) tr += bs[g](i, i);
      r.character_residual =
          std::max(r.character_residual, std::abs(tr - double(d) * chars[rho][g]));
    }
    IrrepBlock blk{rs[rho].label, s, copies[rho], "", 0.0, 1.0};
    if (static_cast<int>(s.size()) != d * d) {
      r.errors.push_back(fmt::format("{} spans {} states, expected {}",
                                     rs[rho].label, s.size(), d * d));
      r.intertwiner_residual = std::max(r.intertwiner_residual, 1.0);
      r.blocks.push_back(blk);
      continue;
    }
    const auto& images = irrep_images(group, rho);
    Intertwiner w = solve_intertwiner(bs, gens, images, s, d, true, tol);
    if (!w.found) {
      Intertwiner alt = solve_intertwiner(bs, gens, images, s, d, false, tol);
      if (alt.found || alt.residual < w.residual) w = alt;
    }
    blk.convention = w.convention;
    blk.condition = w.condition;
    blk.intertwiner_residual = w.residual;
    r.intertwiner_residual = std::max(r.intertwiner_residual, w.residual);
    r.blocks.push_back(blk);

    const auto& cs = copies[rho];
    bool per_copy = true;
    for (const auto& c : cs) per_copy &= static_cast<int>(c.size()) == d;
    if (per_copy)
      for (std::size_t k = 1; k < cs.size(); ++k)
        for (const auto& b : bs)
          r.copy_residual = std::max(
              r.copy_residual, max_abs(sub(b, cs[k], cs[k]) - sub(b, cs[0], cs[0])));
  }

  if (auto printed = printed_assignment(group)) {
    std::map<int, std::vector<std::string>> owners;
    for (const auto& [label, states] : printed->blocks) {
      for (int s : states) owners[s].push_back(label);
      std::vector<int> p = states;
      std::sort(p.begin(), p.end());
      const auto& found = subspace.at(irrep_index(group, label));
      if (p != found)
        r.assignment_mismatches.push_back(
            fmt::format("{}: listed {} found {}", label, list(p), list(found)));
    }
    for (const auto& [s, labels] : owners)
      if (labels.size() > 1) {
        std::string joined;
        for (const auto& l : labels) joined += (joined.empty() ? "" : ",") + l;
        r.assignment_mismatches.push_back(
            fmt::format("state {} listed under {}", s, joined));
      }
    for (int s = 0; s < n; ++s)
      if (!owners.count(s))
        r.assignment_mismatches.push_back(fmt::format("state {} unlisted", s));
  }

  r.pass = r.errors.empty() && r.unitarity_residual < tol &&
           r.off_block_residual < tol && r.character_residual < tol &&
           r.intertwiner_residual < tol;
  return r;
}

VerificationReport verify_circuit(const Circuit& c, double tol) {
  const ExtractedOperator ex = extract_group_operator(c);
  VerificationReport r = verify_fft(ex.op, c.group, tol);
  r.arch = to_string(c.arch);
  r.ancilla_leakage = ex.ancilla_leakage;
  r.forbidden_leakage = ex.forbidden_leakage;
  r.pass = r.pass && r.ancilla_leakage < tol && r.forbidden_leakage < tol;
  return r;
}

std::string to_json(const VerificationReport& r) {
  std::string s = "{\n";
  s += fmt::format("  \"group\": \"{}\",\n", group_name(r.group));
  s += fmt::format("  \"arch\": \"{}\",\n", r.arch);
  s += fmt::format("  \"pass\": {},\n", r.pass ? "true" : "false");
  const std::pair<const char*, double> fields[] = {
      {"unitarity_residual", r.unitarity_residual},
      {"off_block_residual", r.off_block_residual},
      {"character_residual", r.character_residual},
      {"intertwiner_residual", r.intertwiner_residual},
      {"ancilla_leakage", r.ancilla_leakage},
      {"forbidden_leakage", r.forbidden_leakage},
      {"copy_residual", r.copy_residual},
  };
  for (const auto& [k, v] : fields) s += fmt::format("  \"{}\": {},\n", k, num(v));
  s += "  \"condition_numbers\": {";
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    s += fmt::format("{}\"{}\": {}", i ? ", " : "", r.blocks[i].label,
                     num(r.blocks[i].condition));
  s += "},\n";
  s += "  \"block_sizes\": " + list(r.block_sizes) + ",\n";
  s += "  \"assignment_mismatches\": [";
  for (std::size_t i = 0; i < r.assignment_mismatches.size(); ++i)
    s += fmt::format("{}\n    \"{}\"", i ? "," : "", r.assignment_mismatches[i]);
  s += r.assignment_mismatches.empty() ? "],\n" : "\n  ],\n";
  s += "  \"errors\": [";
  for (std::size_t i = 0; i < r.errors.size(); ++i)
    s += fmt::format("{}\"{}\"", i ? ", " : "", r.errors[i]);
  s += "]\n}\n";
  return s;
}

double compare_to_oracle(const Mat& F, GroupId group) {
  const Mat oracle = dft_matrix(group);
  if (F.rows() != oracle.rows() || F.cols() != oracle.cols())
    throw NaqftError(ErrorKind::DimensionMismatch, "compare_to_oracle shapes");
  const auto labels = dft_row_labels(group);
  double res = 0.0;
  for (const auto& rho : irreps(group)) {
    std::vector<int> rows;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == rho.label) rows.push_back(static_cast<int>(i));
    const Mat f = rows_of(F, rows);
    const Mat o = rows_of(oracle, rows);
    const Mat w = polar_unitary(o * f.adjoint());
    res = std::max(res, max_abs(w * f - o));
  }
  return res;
}

Mat align_to_oracle(const Mat& F, GroupId group, double tol) {
  const VerificationReport r = verify_fft(F, group, tol);
  if (!r.pass)
    throw NaqftError(ErrorKind::LayoutMismatch,
                     "operator does not verify; no alignment exists");
  const auto labels = dft_row_labels(group);
  Mat out(F.rows(), F.cols());
  for (const auto& b : r.blocks) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == b.label) out.row(i) = F.row(b.states.at(k++));
  }
  return out;
}

}  // namespace naqft
