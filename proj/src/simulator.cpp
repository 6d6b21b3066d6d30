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

#include "naqft/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "naqft/errors.hpp"

namespace naqft {

namespace {

std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::size_t> s(dims.size());
  std::size_t acc = 1;
  for (std::size_t w = 0; w < dims.size(); ++w) {
    s[w] = acc;
    acc *= dims[w];
  }
  return s;
}

bool is_diagonal(const Mat& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (r != c && m(r, c) != Complex(0.0)) return false;
  return true;
}

/**
 * Applies `g` to every row of `psi` (batch x basis). Column i holds the
 * amplitudes of basis state i for all batch members.
 */
void apply_gate_batch(Mat& psi, const std::vector<int>& dims, const Gate& g) {
  const auto strides = strides_of(dims);
  const int nw = static_cast<int>(dims.size());
  std::vector<int> tdims;
  for (int t : g.targets) tdims.push_back(dims.at(t));
  const Mat base = gate_matrix(g, tdims);
  const int d = static_cast<int>(base.rows());

  // Offsets of the target sub-basis, first target least significant.
  std::vector<std::size_t> offsets(d, 0);
  for (int k = 0; k < d; ++k) {
    int rem = k;
    for (std::size_t t = 0; t < g.targets.size(); ++t) {
      offsets[k] += (rem % tdims[t]) * strides[g.targets[t]];
      rem /= tdims[t];
    }
  }

  std::vector<bool> fixed(nw, false);
  for (int t : g.targets) fixed[t] = true;
  std::size_t origin = 0;
  std::vector<int> factors;
  for (const auto& c : g.controls) {
    if (c.value == kProductFactor) {
      factors.push_back(c.wire);
      continue;
    }
    fixed[c.wire] = true;
    origin += c.value * strides[c.wire];
  }
  std::vector<int> free;
  for (int w = 0; w < nw; ++w)
    if (!fixed[w]) free.push_back(w);

  std::vector<Mat> powers{Mat::Identity(d, d), base, base * base};
  const bool diagonal = is_diagonal(base);
  Mat tmp(psi.rows(), d);
  std::vector<int> counter(free.size(), 0);
  std::size_t idx = origin;
  while (true) {
    const Mat* m = &base;
    if (!factors.empty()) {
      int p = 1;
      for (int w : factors) p = p * static_cast<int>((idx / strides[w]) % dims[w]);
      m = &powers[p % 3];
    }
    if (diagonal) {
      for (int k = 0; k < d; ++k) psi.col(idx + offsets[k]) *= (*m)(k, k);
    } else {
      for (int k = 0; k < d; ++k) tmp.col(k) = psi.col(idx + offsets[k]);
      for (int r = 0; r < d; ++r) {
        auto out = psi.col(idx + offsets[r]);
        out.setZero();
        for (int k = 0; k < d; ++k)
          if ((*m)(r, k) != Complex(0.0)) out += (*m)(r, k) * tmp.col(k);
      }
    }
    std::size_t j = 0;
    for (; j < free.size(); ++j) {
      const int w = free[j];
      idx += strides[w];
      if (++counter[j] < dims[w]) break;
      counter[j] = 0;
      idx -= dims[w] * strides[w];
    }
    if (j == free.size()) break;
  }
}

}  // namespace

State basis_state(const Circuit& c, std::size_t index) {
  State s{c.dims(), Vec()};
  std::size_t n = 1;
  for (int d : s.dims) n *= d;
  if (index >= n)
    throw NaqftError(ErrorKind::DimensionMismatch, "basis index out of range");
  s.amplitudes = Vec::Zero(n);
  s.amplitudes(index) = 1.0;
  return s;
}

void apply_gate(State& state, const Gate& g) {
  Mat row = state.amplitudes.transpose();
  apply_gate_batch(row, state.dims, g);
  state.amplitudes = row.transpose();
}

State apply(const State& state, const Circuit& c) {
  if (state.dims != c.dims())
    throw NaqftError(ErrorKind::LayoutMismatch,
                     "state dimensions differ from circuit wires");
  State s = state;
  for (const auto& g : c.gates) apply_gate(s, g);
  return s;
}

namespace {

/** Runs `c` on the basis states `cols`; row b of the result is column b. */
Mat run_batch(const Circuit& c, const std::vector<std::size_t>& cols) {
  const auto dims = c.dims();
  std::size_t n = 1;
  for (int d : dims) n *= d;
  Mat psi = Mat::Zero(cols.size(), n);
  for (std::size_t b = 0; b < cols.size(); ++b) psi(b, cols[b]) = 1.0;
  for (const auto& g : c.gates) apply_gate_batch(psi, dims, g);
  return psi;
}

constexpr std::size_t kBatch = 64;

}  // namespace

Mat circuit_unitary(const Circuit& c) {
  std::size_t n = 1;
  for (int d : c.dims()) n *= d;
  Mat u(n, n);
  for (std::size_t k0 = 0; k0 < n; k0 += kBatch) {
    std::vector<std::size_t> cols;
    for (std::size_t k = k0; k < std::min(n, k0 + kBatch); ++k) cols.push_back(k);
    u.middleCols(k0, cols.size()) = run_batch(c, cols).transpose();
  }
  return u;
}

namespace {

using Sparse = std::unordered_map<std::size_t, Complex>;

/** Applies `g` to a sparse state; drops amplitudes below 1e-14. */
Sparse apply_sparse(const Sparse& in, const std::vector<int>& dims,
                    const std::vector<std::size_t>& strides, const Gate& g) {
  std::vector<int> tdims;
  for (int t : g.targets) tdims.push_back(dims[t]);
  const Mat base = gate_matrix(g, tdims);
  const int d = static_cast<int>(base.rows());
  std::vector<std::size_t> offsets(d, 0);
  for (int k = 0; k < d; ++k) {
    int rem = k;
    for (std::size_t t = 0; t < g.targets.size(); ++t) {
      offsets[k] += (rem % tdims[t]) * strides[g.targets[t]];
      rem /= tdims[t];
    }
  }
  const std::vector<Mat> powers{Mat::Identity(d, d), base, base * base};
  auto digit = [&](std::size_t i, int w) {
    return static_cast<int>((i / strides[w]) % dims[w]);
  };
  Sparse out;
  out.reserve(in.size() * 2);
  for (const auto& [i, amp] : in) {
    bool active = true;
    int p = 1;
    bool product = false;
    for (const auto& c : g.controls) {
      if (c.value == kProductFactor) {
        p *= digit(i, c.wire);
        product = true;
      } else if (digit(i, c.wire) != c.value) {
        active = false;
        break;
      }
    }
    if (!active) {
      out[i] += amp;
      continue;
    }
    const Mat& m = product ? powers[p % 3] : base;
    int k = 0, place = 1;
    for (std::size_t t = 0; t < g.targets.size(); ++t) {
      k += digit(i, g.targets[t]) * place;
      place *= tdims[t];
    }
    const std::size_t origin = i - offsets[k];
    for (int r = 0; r < d; ++r)
      if (m(r, k) != Complex(0.0)) out[origin + offsets[r]] += m(r, k) * amp;
  }
  std::erase_if(out, [](const auto& kv) { return std::abs(kv.second) < 1e-14; });
  return out;
}

}  // namespace

ExtractedOperator extract_group_operator(const Circuit& c) {
  const Group& grp = Group::get(c.group);
  const int n = grp.order();
  std::vector<std::size_t> enc(n);
  for (int g = 0; g < n; ++g) enc[g] = encode(c, g);

  const auto dims = c.dims();
  const auto strides = strides_of(dims);
  std::size_t reg_span = 1;
  for (int w = 0; w < c.layout.register_wire_count(); ++w) reg_span *= dims[w];
  std::unordered_map<std::size_t, int> element_of;
  for (int h = 0; h < n; ++h) element_of[enc[h]] = h;

  ExtractedOperator out{Mat::Zero(n, n), 0.0, 0.0};
  for (int g = 0; g < n; ++g) {
    Sparse psi{{enc[g], Complex(1.0)}};
    for (const auto& gate : c.gates) psi = apply_sparse(psi, dims, strides, gate);
    double anc = 0.0, forb = 0.0;
    for (const auto& [i, amp] : psi) {
      if (i >= reg_span) {
        anc += std::norm(amp);
      } else if (auto it = element_of.find(i); it != element_of.end()) {
        out.op(it->second, g) = amp;
      } else {
        forb += std::norm(amp);
      }
    }
    out.ancilla_leakage = std::max(out.ancilla_leakage, std::sqrt(anc));
    out.forbidden_leakage = std::max(out.forbidden_leakage, std::sqrt(forb));
  }
  return out;
}

double phase_distance(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw NaqftError(ErrorKind::DimensionMismatch, "phase_distance shapes");
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase =
      std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace naqft
