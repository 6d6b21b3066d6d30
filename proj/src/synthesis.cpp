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

#include "naqft/synthesis.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "naqft/errors.hpp"
#include "naqft/transpile.hpp"
#include "naqft/verifier.hpp"

namespace naqft {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Complex omega3(int k = 1) { return std::polar(1.0, 2 * kPi * k / 3); }

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

Mat dsum(std::initializer_list<Mat> ms) {
  Eigen::Index n = 0;
  for (const auto& m : ms) n += m.rows();
  Mat out = Mat::Zero(n, n);
  Eigen::Index o = 0;
  for (const auto& m : ms) {
    out.block(o, o, m.rows(), m.cols()) = m;
    o += m.rows();
  }
  return out;
}

Mat one() { return Mat::Identity(1, 1); }

Mat printed_chi() {
  Mat m = Mat::Zero(3, 3);
  m(0, 1) = m(1, 2) = m(2, 0) = 1.0;
  return m;
}

Mat x12() {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = m(1, 2) = m(2, 1) = 1.0;
  return m;
}

Mat pauli_x() {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Mat h3() { return cyclic_dft(3); }

Mat u2() {
  const Complex eta(0.5, 0.5);
  Mat m(2, 2);
  m << -eta, -eta, std::conj(eta), -std::conj(eta);
  return m;
}

Mat mat_pow(const Mat& m, int p) {
  Mat r = Mat::Identity(m.rows(), m.cols());
  for (int k = 0; k < p; ++k) r = r * m;
  return r;
}

Mat sub_block(const Mat& m, const std::vector<int>& s) {
  Mat out(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) out(i, j) = m(s[i], s[j]);
  return out;
}

/** Principal root of a complex number, angle taken in (-pi, pi]. */
Complex principal_root(Complex c, int m) {
  double a = std::arg(c);
  if (a <= -kPi + 1e-9) a = kPi;
  return std::polar(std::pow(std::abs(c), 1.0 / m), a / m);
}

/** Principal m-th root of a normal matrix through its Schur form. */
Mat principal_root(const Mat& x, int m) {
  Eigen::ComplexSchur<Mat> schur(x);
  const Mat& u = schur.matrixU();
  Vec d = schur.matrixT().diagonal();
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = principal_root(d(i), m);
  return u * d.asDiagonal() * u.adjoint();
}

/** Smallest eigenpair of A^dagger A reshaped column-major into n x n. */
std::pair<Mat, double> null_vector(const Mat& a, int n, double* gap) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a.adjoint() * a);
  if (gap) *gap = es.eigenvalues().size() > 1 ? es.eigenvalues()(1) : INFINITY;
  Mat x = Eigen::Map<const Mat>(es.eigenvectors().col(0).data(), n, n);
  return {x, es.eigenvalues()(0)};
}

Mat conjugated(const Mat& f, const Mat& p) { return f * p * f.adjoint(); }

Mat right_regular(const Group& h, int z) {
  const int n = h.order();
  Mat p = Mat::Zero(n, n);
  for (int g = 0; g < n; ++g) p(h.mul(g, z), g) = 1.0;
  return p;
}

Vec solve_phases(const Mat& f, GroupId group) {
  const Group& grp = Group::get(group);
  const VerificationReport rep = verify_fft(f, group);
  std::vector<Mat> bs;
  for (int g : grp.generator_indices())
    bs.push_back(conjugated(f, regular_rep(group, g, Side::Left)));
  Vec theta = Vec::Zero(f.rows());
  for (const auto& blk : rep.blocks) {
    if (blk.copies.size() < 2) continue;
    const auto& ref = blk.copies[0];
    for (std::size_t k = 1; k < blk.copies.size(); ++k) {
      const auto& c = blk.copies[k];
      const std::size_t d = c.size();
      if (d != ref.size())
        throw NaqftError(ErrorKind::DimensionMismatch,
                         "copies of " + blk.label + " differ in size");
      std::vector<std::optional<double>> ang(d);
      ang[0] = 0.0;
      for (bool changed = true; changed;) {
        changed = false;
        for (const auto& b : bs)
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
              const Complex bc = b(c[i], c[j]);
              if (std::abs(bc) <= 1e-9) continue;
              const double rel = std::arg(b(ref[i], ref[j]) / bc);
              if (ang[j] && !ang[i]) {
                ang[i] = *ang[j] + rel;
                changed = true;
              } else if (ang[i] && !ang[j]) {
                ang[j] = *ang[i] - rel;
                changed = true;
              }
            }
      }
      for (std::size_t i = 0; i < d; ++i) theta(c[i]) = ang[i].value_or(0.0);
    }
  }
  Vec out(f.rows());
  for (Eigen::Index i = 0; i < f.rows(); ++i)
    out(i) = std::polar(1.0, theta(i).real());
  return out;
}

// Frozen operators.

Mat twiddle_bo() {
  Mat m = Mat::Zero(24, 24);
  const int swap12[3] = {0, 2, 1};
  const double r = 1.0 / std::sqrt(2.0);
  const double mk[2][2] = {{r, r}, {-r, r}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int k = 0; k < 3; ++k) {
          const int src = 3 * (4 * a + 2 * b + c) + k;
          if (a == 0) {
            if (b == 0 && c == 0) {
              m(swap12[k], src) = 1.0;
            } else {
              m(3 * (2 * c + b) + k, src) = b == 1 ? -1.0 : 1.0;
            }
          } else {
            const double sg = k == 0 ? -1.0 : 1.0;
            for (int bo = 0; bo < 2; ++bo)
              m(3 * (4 + 2 * bo + c) + swap12[k], src) += sg * mk[bo][b];
          }
        }
  return m;
}

Mat twiddle_s108() {
  Mat m = Mat::Zero(54, 54);
  const int swap12[3] = {0, 2, 1};
  const Mat h = h3();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k)
        for (int s = 0; s < 2; ++s) {
          const int src = 18 * a + 6 * b + 2 * k + s;
          if (a == 0) {
            Complex sg = (b == 0 ? -1.0 : 1.0) * (k == 0 ? -1.0 : 1.0);
            if (b == 0 && k == 0 && s == 1) sg *= kI;
            m(6 * k + 2 * swap12[b] + s, src) = sg;
          } else {
            const Mat u = a == 1 ? h : Mat(h.adjoint());
            const Complex d = s == 0 ? Complex(-1.0) : kI;
            for (int bo = 0; bo < 3; ++bo)
              m(18 * a + 6 * bo + 2 * k + s, src) += d * u(bo, b);
          }
        }
  return m;
}

Vec diag_vec(std::initializer_list<Complex> v) {
  Vec out(v.size());
  int i = 0;
  for (Complex c : v) out(i++) = c;
  return out;
}

Vec kickback_bo() {
  Vec v = Vec::Ones(24);
  for (int i : {2, 14, 17, 20, 23}) v(i) = -1.0;
  return v;
}

Vec kickback_d54() {
  Vec v = Vec::Ones(27);
  v(2) = v(8) = -1.0;
  v(3) = v(5) = -kI;
  v(6) = v(7) = kI;
  for (int i = 18; i < 27; ++i) v(i) = -1.0;
  return v;
}

Vec kickback_s108() {
  Vec v = Vec::Ones(54);
  for (int i : {6, 7, 10, 11, 12, 13, 14, 15}) v(i) = -1.0;
  return v;
}

ExtensionStep make_step(GroupId group) {
  auto sub = predecessor(group);
  if (!sub)
    throw NaqftError(ErrorKind::GroupMismatch,
                     group_name(group) + " has no extension step");
  const Group& grp = Group::get(group);
  const int nh = Group::get(*sub).order();
  ExtensionStep s{*sub,
                  group,
                  grp.transversal_size(),
                  grp.spec().transversal_position,
                  classify_conjugates(group),
                  Mat(),
                  Vec::Ones(nh),
                  Mat::Identity(nh, nh),
                  Mat::Identity(nh, nh)};
  const Complex w = omega3(), w2 = omega3(2);
  const Mat i2 = Mat::Identity(2, 2), i3 = Mat::Identity(3, 3);
  switch (group) {
    case GroupId::Z4:
    case GroupId::Q8: {
      const GenericStep g = generic_step(group, fft_operator(*sub));
      s.twiddle = g.twiddle;
      const auto idx = hx_to_element(s);
      for (int h = 0; h < nh; ++h) {
        if (std::abs(g.phases(idx[h * s.m]) - 1.0) > 1e-9)
          throw NaqftError(ErrorKind::OperatorNotUnitary,
                           "generic phases touch the x = 0 branch");
        s.kickback(h) = g.phases(idx[h * s.m + 1]);
      }
      break;
    }
    case GroupId::BT:
      s.twiddle = dsum({one(), printed_chi().transpose(), kron(u2().transpose(), i2)});
      s.kickback = diag_vec({1, 1, w2, w, 1, 1, 1, 1});
      break;
    case GroupId::BO:
      s.twiddle = twiddle_bo();
      s.kickback = kickback_bo();
      break;
    case GroupId::D27:
      s.twiddle = dsum({i3, printed_chi().transpose(), printed_chi()});
      s.kickback = diag_vec({1, 1, 1, 1, w2, w, 1, w, w2});
      break;
    case GroupId::D54: {
      const Mat x = pauli_x();
      s.twiddle = dsum({x12(), kron(x, x12()), i3, kron(x, i3), i3, kron(x, i3)});
      s.kickback = kickback_d54();
      break;
    }
    case GroupId::S36x3:
      s.twiddle = twiddle_s108();
      s.kickback = kickback_s108();
      break;
    default:
      break;
  }
  const Mat t = s.twiddle;
  if ((t * t.adjoint() - Mat::Identity(nh, nh)).cwiseAbs().maxCoeff() > 1e-9)
    throw NaqftError(ErrorKind::OperatorNotUnitary,
                     "twiddle of " + group_name(group) + " is not unitary");
  for (Eigen::Index i = 0; i < s.kickback.size(); ++i)
    if (std::abs(std::abs(s.kickback(i)) - 1.0) > 1e-9)
      throw NaqftError(ErrorKind::OperatorNotUnitary,
                       "kickback of " + group_name(group) + " is not unitary");
  return s;
}

template <typename T>
const T& cached(GroupId id, T (*make)(GroupId)) {
  static std::array<std::unique_ptr<T>, 9> cache;
  static std::array<std::once_flag, 9> flags;
  const int k = static_cast<int>(id);
  std::call_once(flags[k], [&] { cache[k] = std::make_unique<T>(make(id)); });
  return *cache[k];
}

Mat make_fft(GroupId group) {
  if (group == GroupId::Z2) return cyclic_dft(2);
  if (group == GroupId::Z3xZ3) return kron(h3(), h3());
  const ExtensionStep& s = step_operators(group);
  return assemble_step(s, fft_operator(s.subgroup));
}

Mat stage_from_branches(const ExtensionStep& s,
                        const std::vector<Mat>& per_x) {
  const int nh = static_cast<int>(per_x[0].rows());
  const auto idx = hx_to_element(s);
  const int n = nh * s.m;
  Mat out = Mat::Zero(n, n);
  for (int x = 0; x < s.m; ++x)
    for (int i = 0; i < nh; ++i)
      for (int j = 0; j < nh; ++j)
        out(idx[i * s.m + x], idx[j * s.m + x]) = per_x[x](i, j);
  return out;
}

// Gate-level stages. Wire w of the G circuit holds tuple position n-1-w.

struct Emitter {
  Circuit& c;
  void g(GateKind k, int t, std::vector<Control> ctl = {}) {
    c.add(gate(k, t, std::move(ctl)));
  }
  void u(const Mat& m, int t, std::vector<Control> ctl = {}) {
    c.add(unitary(m, {t}, std::move(ctl)));
  }
};

Mat diag3(Complex a, Complex b, Complex d) {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = d;
  return m;
}

/** Real orthogonal eigenbasis of H3 with eigenvalues (1, -1, i). */
Mat h3_eigenbasis() {
  const double th = 0.5 * std::acos(1.0 / std::sqrt(3.0));
  const double r = 1.0 / std::sqrt(2.0);
  Mat w(3, 3);
  w << std::cos(th), -std::sin(th), 0.0,
       std::sin(th) * r, std::cos(th) * r, r,
       std::sin(th) * r, std::cos(th) * r, -r;
  return w;
}

void emit_twiddle(GroupId group, Circuit& c) {
  Emitter e{c};
  using K = GateKind;
  switch (group) {
    case GroupId::Z4:
      e.g(K::S, 1, {{0, 1}});
      break;
    case GroupId::Q8:
      e.g(K::X, 0, {{1, 1}, {2, 1}});
      e.g(K::S, 2, {{1, 1}});
      break;
    case GroupId::BT: {
      // w0 = u-digit, w1 = k, w2 = j, w3 = -1.
      e.g(K::X, 2, {{0, 1}, {3, 0}, {1, 1}});
      e.g(K::X, 1, {{0, 1}, {3, 0}, {2, 1}});
      e.g(K::X, 1, {{0, 2}, {3, 0}, {2, 1}});
      e.g(K::X, 2, {{0, 2}, {3, 0}, {1, 1}});
      const Mat ut = u2().transpose();
      e.u(ut, 2, {{0, 1}, {3, 1}});
      e.u(ut * ut, 2, {{0, 2}, {3, 1}});
      break;
    }
    case GroupId::BO:
      // w0 = t-digit, w1 = u, w2 = k, w3 = j, w4 = -1.
      e.g(K::X12, 1, {{0, 1}, {4, 0}, {3, 0}, {2, 0}});
      c.add(gate(K::SWAP, {3, 2}, {{0, 1}, {4, 0}}));
      e.g(K::Z, 2, {{0, 1}, {4, 0}});
      e.g(K::H, 3, {{0, 1}, {4, 1}});
      e.g(K::Z, 3, {{0, 1}, {4, 1}});
      e.g(K::X12, 1, {{0, 1}, {4, 1}});
      e.g(K::Z0, 1, {{0, 1}, {4, 1}});
      break;
    case GroupId::D27:
      // w0 = E-digit, w1 = C, w2 = omega.
      e.g(K::CHI_PROD, 1, {{2, kProductFactor}, {0, kProductFactor}});
      break;
    case GroupId::D54:
      // w0 = V^2-digit, w1 = E, w2 = C, w3 = omega.
      e.g(K::X12, 2, {{0, 1}});
      e.g(K::X12, 1, {{0, 1}, {3, 0}});
      break;
    case GroupId::S36x3: {
      // w0 = V-digit, w1 = V^2, w2 = E, w3 = C, w4 = omega.
      e.g(K::Z0, 3, {{0, 1}, {4, 0}});
      e.g(K::Z0, 2, {{0, 1}, {4, 0}});
      e.g(K::S, 1, {{0, 1}, {4, 0}, {3, 0}, {2, 0}});
      c.add(gate(K::SWAP, {3, 2}, {{0, 1}, {4, 0}}));
      e.g(K::X12, 2, {{0, 1}, {4, 0}});
      const Mat w = h3_eigenbasis();
      const Mat d = diag3(1.0, -1.0, kI);
      e.u(w.adjoint(), 3);
      e.u(d, 3, {{0, 1}, {4, 1}});
      e.u(d.conjugate(), 3, {{0, 1}, {4, 2}});
      e.u(w, 3);
      Mat p = Mat::Zero(2, 2);
      p(0, 0) = -1.0;
      p(1, 1) = kI;
      e.u(p, 1, {{0, 1}, {4, 1}});
      e.u(p, 1, {{0, 1}, {4, 2}});
      break;
    }
    default:
      break;
  }
}

void emit_kickback(GroupId group, Circuit& c) {
  Emitter e{c};
  using K = GateKind;
  switch (group) {
    case GroupId::Q8:
      e.g(K::Z, 0, {{1, 1}, {2, 1}});
      break;
    case GroupId::BT:
      e.g(K::S3dg, 0, {{3, 0}, {2, 1}});
      e.g(K::S3dg, 0, {{3, 0}, {2, 1}, {1, 1}});
      break;
    case GroupId::BO:
      e.g(K::Z2, 1, {{0, 1}, {4, 1}});
      e.g(K::Z2, 1, {{0, 1}, {4, 0}, {3, 0}, {2, 0}});
      break;
    case GroupId::D27:
      e.g(K::S3dg_PROD, 1, {{0, kProductFactor}, {2, kProductFactor}});
      break;
    case GroupId::D54:
      e.g(K::Z2, 3, {{0, 1}});
      e.g(K::Z2, 1, {{0, 1}, {3, 0}});
      e.u(diag3(1.0, -kI, kI), 2, {{0, 1}, {3, 0}});
      e.u(diag3(1.0, kI, -1.0), 1, {{0, 1}, {3, 0}, {2, 1}});
      e.u(diag3(1.0, 1.0, -kI), 1, {{0, 1}, {3, 0}, {2, 2}});
      break;
    case GroupId::S36x3:
      e.g(K::Z1, 3, {{0, 1}, {4, 0}});
      e.g(K::Z2, 3, {{0, 1}, {4, 0}});
      e.g(K::Z1, 2, {{0, 1}, {4, 0}, {3, 1}});
      e.g(K::Z2, 2, {{0, 1}, {4, 0}, {3, 2}});
      break;
    default:
      break;
  }
}

void emit_dft(GroupId group, Circuit& c) {
  const Group& grp = Group::get(group);
  const int n = static_cast<int>(grp.spec().bounds.size());
  const int wire = n - 1 - grp.spec().transversal_position;
  c.add(gate(grp.transversal_size() == 2 ? GateKind::H : GateKind::H3, wire));
}

}  // namespace

GenericStep generic_step(GroupId group, const Mat& f) {
  auto sub_id = predecessor(group);
  if (!sub_id)
    throw NaqftError(ErrorKind::GroupMismatch, "base group has no step");
  const Group& grp = Group::get(group);
  const Group& sub = Group::get(*sub_id);
  const int nh = sub.order();
  if (f.rows() != nh || f.cols() != nh)
    throw NaqftError(ErrorKind::DimensionMismatch, "F_sub size");
  const int pos = grp.spec().transversal_position;
  const int m = grp.transversal_size();
  const int t = grp.transversal_generator();
  const auto emb = grp.subgroup_embedding();
  std::map<int, int> hpos;
  for (int h = 0; h < nh; ++h) hpos[emb[h]] = h;

  auto label = [&](int gi) {
    auto e = grp.element(gi).exponents;
    const int x = e[pos];
    e[pos] = 0;
    return std::pair{hpos.at(grp.index_of(e)), x};
  };
  auto matches = [&](bool left) {
    for (int gi = 0; gi < grp.order(); ++gi) {
      const auto [h, x] = label(gi);
      const int tx = grp.power(t, x);
      if ((left ? grp.mul(tx, emb[h]) : grp.mul(emb[h], tx)) != gi) return false;
    }
    return true;
  };
  GenericStep out;
  if (matches(false)) {
    out.left_form = false;
  } else if (matches(true)) {
    out.left_form = true;
  } else {
    throw NaqftError(ErrorKind::LayoutMismatch,
                     "element order is neither h t^x nor t^x h");
  }

  std::vector<int> conj(nh);
  Mat a = Mat::Zero(nh, nh);
  for (int h = 0; h < nh; ++h) {
    conj[h] = hpos.at(grp.conj(t, emb[h]));
    a(conj[h], h) = 1.0;
  }
  const Mat ah = conjugated(f, a);
  const int z = hpos.at(grp.power(t, m));
  const Mat target =
      out.left_form ? conjugated(f, right_regular(sub, z))
                    : conjugated(f, regular_rep(*sub_id, z, Side::Left));
  Mat k = principal_root(target, m);

  if (!out.left_form) {
    const VerificationReport rep = verify_fft(f, *sub_id);
    const auto& chars = character_table(*sub_id);
    const auto gens = sub.generator_indices();
    for (const auto& blk : rep.blocks) {
      const auto& ch = chars[irrep_index(*sub_id, blk.label)];
      double moved = 0.0;
      for (int h = 0; h < nh; ++h) moved = std::max(moved, std::abs(ch[conj[h]] - ch[h]));
      if (moved > 1e-9) continue;
      const auto& s = blk.states;
      const int n = static_cast<int>(s.size());
      const Mat id = Mat::Identity(n, n);
      Mat eqs(0, n * n);
      auto append = [&](const Mat& rows) {
        Mat grown(eqs.rows() + rows.rows(), n * n);
        grown << eqs, rows;
        eqs = grown;
      };
      for (int h : gens) {
        const Mat lh = sub_block(conjugated(f, regular_rep(*sub_id, h, Side::Left)), s);
        const Mat lc =
            sub_block(conjugated(f, regular_rep(*sub_id, conj[h], Side::Left)), s);
        const Mat rh = sub_block(conjugated(f, right_regular(sub, h)), s);
        append(kron(lh.transpose(), id) - kron(id, lc));
        append(kron(rh.transpose(), id) - kron(id, rh));
      }
      double gap = 0.0;
      auto [x, ev] = null_vector(eqs, n, &gap);
      if (ev > 1e-12 || (n > 1 && gap < 1e-10))
        throw NaqftError(ErrorKind::NoMatch,
                         "extension of " + blk.label + " is not unique");
      // Largest entry (row-major, first within 1e-9 of the maximum) real positive.
      const double big = x.cwiseAbs().maxCoeff();
      Complex lead = 0.0;
      for (int r = 0; r < n && lead == 0.0; ++r)
        for (int cc = 0; cc < n; ++cc)
          if (std::abs(x(r, cc)) >= big - 1e-9) {
            lead = x(r, cc);
            break;
          }
      x *= std::conj(lead) / std::abs(lead);
      const Mat lz = sub_block(conjugated(f, regular_rep(*sub_id, z, Side::Left)), s);
      const Mat xm = mat_pow(x, m);
      Complex c;
      if (std::abs(xm.trace()) > 1e-9) {
        c = lz.trace() / xm.trace();
      } else {
        Eigen::Index r0 = 0, c0 = 0;
        double best = -1.0;
        for (int r = 0; r < n; ++r)
          for (int cc = 0; cc < n; ++cc)
            if (std::abs(xm(r, cc)) > best + 1e-12) {
              best = std::abs(xm(r, cc));
              r0 = r;
              c0 = cc;
            }
        c = lz(r0, c0) / xm(r0, c0);
      }
      x *= principal_root(c, m);
      if ((mat_pow(x, m) - lz).cwiseAbs().maxCoeff() > 1e-9)
        throw NaqftError(ErrorKind::NoMatch,
                         "extension of " + blk.label + " fails X^m = L(t^m)");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k(s[i], s[j]) = x(i, j);
    }
    out.twiddle = k * ah.inverse();
  } else {
    out.twiddle = k * ah;
  }

  ExtensionStep tmp{*sub_id, group, m, pos, {}, out.twiddle, Vec::Ones(nh),
                    Mat::Identity(nh, nh), Mat::Identity(nh, nh)};
  out.phases = solve_phases(assemble_step(tmp, f), group);
  return out;
}

const ExtensionStep& step_operators(GroupId group) {
  return cached<ExtensionStep>(group, make_step);
}

std::vector<int> hx_to_element(const ExtensionStep& s) {
  const Group& grp = Group::get(s.group);
  const Group& sub = Group::get(s.subgroup);
  std::vector<int> idx(grp.order());
  for (int h = 0; h < sub.order(); ++h) {
    auto e = sub.element(h).exponents;
    e.insert(e.begin() + s.position, 0);
    for (int x = 0; x < s.m; ++x) {
      e[s.position] = x;
      idx[h * s.m + x] = grp.index_of(e);
    }
  }
  return idx;
}

Mat cyclic_dft(int m) {
  Mat f(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      f(a, b) = std::polar(1.0 / std::sqrt(double(m)), 2 * kPi * a * b / m);
  return f;
}

Mat twiddle_stage(const ExtensionStep& s) {
  std::vector<Mat> per_x;
  for (int x = 0; x < s.m; ++x) per_x.push_back(mat_pow(s.twiddle, x));
  return stage_from_branches(s, per_x);
}

Mat kickback_stage(const ExtensionStep& s) {
  std::vector<Mat> per_x;
  for (int x = 0; x < s.m; ++x) {
    Vec d = s.kickback.array().pow(x);
    per_x.push_back(d.asDiagonal());
  }
  return stage_from_branches(s, per_x);
}

Mat transversal_dft_stage(const ExtensionStep& s) {
  const int nh = static_cast<int>(s.kickback.size());
  const auto idx = hx_to_element(s);
  const Mat hx = kron(Mat::Identity(nh, nh), cyclic_dft(s.m));
  Mat out = Mat::Zero(hx.rows(), hx.cols());
  for (Eigen::Index i = 0; i < hx.rows(); ++i)
    for (Eigen::Index j = 0; j < hx.cols(); ++j) out(idx[i], idx[j]) = hx(i, j);
  return out;
}

Mat subgroup_stage(const ExtensionStep& s, const Mat& f) {
  std::vector<Mat> per_x(s.m, s.C * s.P);
  for (auto& p : per_x) p = f * p;
  return stage_from_branches(s, per_x);
}

Mat assemble_step(const ExtensionStep& s, const Mat& f) {
  return kickback_stage(s) * transversal_dft_stage(s) * twiddle_stage(s) *
         subgroup_stage(s, f);
}

Mat fft_operator(GroupId group) { return cached<Mat>(group, make_fft); }

Circuit stage_circuit(GroupId group, Stage stage) {
  Circuit c = Circuit::empty(group, Arch::Mixed);
  switch (stage) {
    case Stage::Twiddle: emit_twiddle(group, c); break;
    case Stage::TransversalDft: emit_dft(group, c); break;
    case Stage::Kickback: emit_kickback(group, c); break;
  }
  return c;
}

Circuit base_fft(GroupId group) {
  Circuit c = Circuit::empty(group, Arch::Mixed);
  if (group == GroupId::Z2) {
    c.add(gate(GateKind::H, 0));
  } else if (group == GroupId::Z3xZ3) {
    c.add(gate(GateKind::H3, 0));
    c.add(gate(GateKind::H3, 1));
  } else {
    throw NaqftError(ErrorKind::GroupMismatch,
                     group_name(group) + " is not a base group");
  }
  return c;
}

Circuit extend_fft(const Circuit& sub, GroupId group) {
  auto sub_id = predecessor(group);
  if (!sub_id || sub.group != *sub_id || sub.arch != Arch::Mixed ||
      sub.wires != Circuit::empty(*sub_id, Arch::Mixed).wires)
    throw NaqftError(ErrorKind::LayoutMismatch,
                     "extend_fft needs the mixed circuit of the predecessor");
  const Group& grp = Group::get(group);
  const int n = static_cast<int>(grp.spec().bounds.size());
  const int pos = grp.spec().transversal_position;
  auto wire = [&](int w) {
    const int p = (n - 1) - 1 - w;
    return n - 1 - (p < pos ? p : p + 1);
  };
  Circuit c = Circuit::empty(group, Arch::Mixed);
  for (Gate g : sub.gates) {
    for (int& t : g.targets) t = wire(t);
    for (auto& ctl : g.controls) ctl.wire = wire(ctl.wire);
    c.add(std::move(g));
  }
  emit_twiddle(group, c);
  emit_dft(group, c);
  emit_kickback(group, c);
  c.check();
  return c;
}

Circuit synthesize(GroupId group, Arch arch) {
  const auto chain = chain_to(group);
  Circuit c = base_fft(chain.front());
  for (std::size_t k = 1; k < chain.size(); ++k) c = extend_fft(c, chain[k]);
  return arch == Arch::Mixed ? c : transpile(c);
}

}  // namespace naqft
