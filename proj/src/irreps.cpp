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

#include "naqft/irreps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "naqft/errors.hpp"

namespace naqft {

namespace {

const Complex kI(0.0, 1.0);

Complex omega3() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

Mat scalar(Complex c) {
  Mat m(1, 1);
  m(0, 0) = c;
  return m;
}

Mat diag(std::initializer_list<Complex> d) {
  Mat m = Mat::Zero(d.size(), d.size());
  int i = 0;
  for (Complex c : d) {
    m(i, i) = c;
    ++i;
  }
  return m;
}

Mat dsum(const Mat& a, const Mat& b) {
  Mat m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

Mat from_rows(int n, std::initializer_list<Complex> v) {
  Mat m(n, n);
  int i = 0;
  for (Complex c : v) {
    m(i / n, i % n) = c;
    ++i;
  }
  return m;
}

Mat eye(int n) { return Mat::Identity(n, n); }

// Shared constant matrices.
struct Consts {
  Complex w = omega3();
  Complex eta = Complex(0.5, 0.5);
  Mat j2 = from_rows(2, {0.0, 1.0, -1.0, 0.0});
  Mat k2 = diag({kI, -kI});
  Mat u2 = from_rows(2, {-eta, -eta, std::conj(eta), -std::conj(eta)});
  Mat t2 = from_rows(2, {1.0, -kI, -kI, 1.0}) / std::sqrt(2.0);
  Mat x2 = from_rows(2, {0.0, 1.0, 1.0, 0.0});
  Mat chi = from_rows(3, {0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0});
  Mat x12 = from_rows(3, {1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0});
  Mat h3 = from_rows(3, {1.0, 1.0, 1.0, 1.0, w, w * w, 1.0, w * w, w}) /
           std::sqrt(3.0);
  Mat s3 = diag({1.0, w, w * w});
  Mat chi4 = from_rows(4, {0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0,
                           0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0});
};

const Consts& K() {
  static const Consts c;
  return c;
}

Irrep ir(GroupId g, std::string label, std::vector<Mat> images) {
  const int d = static_cast<int>(images.at(0).rows());
  return {g, std::move(label), d, std::move(images)};
}

std::vector<Irrep> make_z2() {
  return {ir(GroupId::Z2, "z1", {scalar(1.0)}),
          ir(GroupId::Z2, "z2", {scalar(-1.0)})};
}

std::vector<Irrep> make_z4() {
  std::vector<Irrep> out;
  for (int m = 0; m < 4; ++m)
    out.push_back(ir(GroupId::Z4, "c" + std::to_string(m + 1),
                     {scalar(m % 2 ? -1.0 : 1.0), scalar(std::pow(kI, m))}));
  return out;
}

std::vector<Irrep> make_q8() {
  const auto& c = K();
  const GroupId g = GroupId::Q8;
  return {ir(g, "xi1", {scalar(1.0), scalar(1.0), scalar(1.0)}),
          ir(g, "xi2", {scalar(1.0), scalar(-1.0), scalar(1.0)}),
          ir(g, "xi3", {scalar(1.0), scalar(1.0), scalar(-1.0)}),
          ir(g, "xi4", {scalar(1.0), scalar(-1.0), scalar(-1.0)}),
          ir(g, "xi5", {-eye(2), c.j2, c.k2})};
}

std::vector<Irrep> make_bt() {
  const auto& c = K();
  const GroupId g = GroupId::BT;
  const Mat one = scalar(1.0);
  const Mat dj = diag({-1.0, 1.0, -1.0});
  const Mat dk = diag({1.0, -1.0, -1.0});
  // rho7(u): the printed chi fails the homomorphism check; chi^T is used.
  return {ir(g, "rho1", {one, one, one, one}),
          ir(g, "rho2", {one, one, one, scalar(c.w)}),
          ir(g, "rho3", {one, one, one, scalar(c.w * c.w)}),
          ir(g, "rho4", {-eye(2), c.j2, c.k2, c.u2}),
          ir(g, "rho5", {-eye(2), c.j2, c.k2, c.w * c.u2}),
          ir(g, "rho6", {-eye(2), c.j2, c.k2, c.w * c.w * c.u2}),
          ir(g, "rho7", {eye(3), dj, dk, c.chi.transpose()})};
}

std::vector<Irrep> make_bo() {
  const auto& c = K();
  const GroupId g = GroupId::BO;
  const Mat one = scalar(1.0);
  const Mat dj = diag({-1.0, 1.0, -1.0});
  const Mat dk = diag({1.0, -1.0, -1.0});
  const Mat jb = dsum(c.j2, one);
  const Complex w = c.w;
  const Complex e = c.eta;
  const Complex ec = std::conj(e);
  Mat r8j = from_rows(4, {0.0, -kI, 0.0, 0.0, -kI, 0.0, 0.0, 0.0,
                          0.0, 0.0, -kI, 0.0, 0.0, 0.0, 0.0, kI});
  Mat r8k = from_rows(4, {kI, 0.0, 0.0, 0.0, 0.0, -kI, 0.0, 0.0,
                          0.0, 0.0, 0.0, -kI, 0.0, 0.0, -kI, 0.0});
  // Transposed 2x2 blocks of the printed u image.
  Mat b1 = w * from_rows(2, {-e * w, -ec * w, e * w, -ec * w});
  Mat b2 = w * from_rows(2, {-ec, -ec, e, -e});
  Mat r8t = from_rows(4, {0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0,
                          1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0});
  return {
      ir(g, "rhobar1", {one, one, one, one, one}),
      ir(g, "rhobar2", {one, one, one, one, scalar(-1.0)}),
      ir(g, "rhobar3",
         {eye(2), eye(2), eye(2), diag({w * w, w}), c.x2}),
      ir(g, "rhobar4", {-eye(2), c.j2, c.k2, c.u2, c.t2}),
      ir(g, "rhobar5", {-eye(2), c.j2, c.k2, c.u2, -c.t2}),
      ir(g, "rhobar6", {eye(3), dj, dk, c.chi.transpose(), -jb}),
      ir(g, "rhobar7", {eye(3), dj, dk, c.chi.transpose(), jb}),
      ir(g, "rhobar8", {-eye(4), r8j, r8k, dsum(b1, b2), r8t}),
  };
}

std::vector<Irrep> make_z3z3() {
  const Complex w = K().w;
  std::vector<Irrep> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      out.push_back(ir(GroupId::Z3xZ3, "chi" + std::to_string(3 * a + b + 1),
                       {scalar(std::pow(w, a)), scalar(std::pow(w, b))}));
  return out;
}

std::vector<Irrep> make_d27() {
  const auto& c = K();
  const Complex w = c.w;
  const GroupId g = GroupId::D27;
  std::vector<Irrep> out;
  const Complex ce[9][2] = {{1.0, 1.0}, {w, 1.0},     {w * w, 1.0},
                            {1.0, w},   {w, w},       {w * w, w},
                            {1.0, w * w}, {w, w * w}, {w * w, w * w}};
  for (int i = 0; i < 9; ++i)
    out.push_back(ir(g, "xi" + std::to_string(i + 1),
                     {scalar(1.0), scalar(ce[i][0]), scalar(ce[i][1])}));
  out.push_back(ir(g, "xi10", {w * eye(3), diag({1.0, w, w * w}), c.chi}));
  out.push_back(ir(g, "xi11", {w * w * eye(3), diag({1.0, w * w, w}), c.chi}));
  return out;
}

std::vector<Irrep> make_d54() {
  const auto& c = K();
  const Complex w = c.w;
  const GroupId g = GroupId::D54;
  const Mat one = scalar(1.0);
  const Mat i2 = eye(2);
  const Mat dw = diag({w, w * w});
  const Mat dw2 = diag({w * w, w});
  // rhobar6(E) corrected to Diag(w, w^2); as printed rhobar6 ~ rhobar5.
  return {
      ir(g, "rhobar1", {one, one, one, one}),
      ir(g, "rhobar2", {one, one, one, scalar(-1.0)}),
      ir(g, "rhobar3", {i2, dw, i2, c.x2}),
      ir(g, "rhobar4", {i2, i2, dw, c.x2}),
      ir(g, "rhobar5", {i2, dw2, dw, c.x2}),
      ir(g, "rhobar6", {i2, dw, dw, c.x2}),
      ir(g, "rhobar7", {w * eye(3), diag({1.0, w, w * w}), c.chi, -c.x12}),
      ir(g, "rhobar8", {w * w * eye(3), diag({1.0, w * w, w}), c.chi, -c.x12}),
      ir(g, "rhobar9", {w * eye(3), diag({1.0, w, w * w}), c.chi, c.x12}),
      ir(g, "rhobar10", {w * w * eye(3), diag({1.0, w * w, w}), c.chi, c.x12}),
  };
}

std::vector<Irrep> make_s108() {
  const auto& c = K();
  const Complex w = c.w;
  const GroupId g = GroupId::S36x3;
  std::vector<Irrep> out;
  auto add = [&](const std::string& label, Mat o, Mat cc, Mat e, Mat v) {
    Mat v2 = v * v;
    out.push_back(ir(g, label, {o, cc, e, v2, v}));
  };
  const Mat one = scalar(1.0);
  const Complex ph[4] = {1.0, kI, -1.0, -kI};
  for (int i = 0; i < 4; ++i)
    add("rho" + std::to_string(i + 1), one, one, one, scalar(ph[i]));
  const Complex vph[4] = {-kI, 1.0, kI, -1.0};
  for (int i = 0; i < 4; ++i)
    add("rho" + std::to_string(5 + i), w * eye(3), c.s3, c.chi, vph[i] * c.h3);
  // rho9..rho12(V): printed multiples of H3 fail; multiples of H3^dagger pass.
  for (int i = 0; i < 4; ++i)
    add("rho" + std::to_string(9 + i), w * w * eye(3), c.s3.adjoint(), c.chi,
        vph[i] * c.h3.adjoint());
  add("rho13", eye(4), diag({1.0, w, 1.0, w * w}), diag({w, 1.0, w * w, 1.0}),
      c.chi4);
  // rho14(E) corrected to Diag(w, w^2, w^2, w).
  add("rho14", eye(4), diag({w, w, w * w, w * w}), diag({w, w * w, w * w, w}),
      c.chi4);
  return out;
}

std::vector<Irrep> make_irreps(GroupId id) {
  switch (id) {
    case GroupId::Z2: return make_z2();
    case GroupId::Z4: return make_z4();
    case GroupId::Q8: return make_q8();
    case GroupId::BT: return make_bt();
    case GroupId::BO: return make_bo();
    case GroupId::Z3xZ3: return make_z3z3();
    case GroupId::D27: return make_d27();
    case GroupId::D54: return make_d54();
    case GroupId::S36x3: return make_s108();
  }
  return {};
}

struct Cache {
  std::vector<Irrep> irreps;
  std::vector<std::vector<Mat>> images;
  std::vector<std::vector<Complex>> characters;
};

Mat evaluate(const Irrep& r, const std::vector<int>& e) {
  Mat m = Mat::Identity(r.dim, r.dim);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) m = m * r.generator_images[i];
  return m;
}

const Cache& cache(GroupId id) {
  static std::array<std::unique_ptr<Cache>, 9> caches;
  static std::array<std::once_flag, 9> flags;
  const int s = static_cast<int>(id);
  std::call_once(flags[s], [&] {
    auto c = std::make_unique<Cache>();
    c->irreps = make_irreps(id);
    const Group& grp = Group::get(id);
    for (const auto& r : c->irreps) {
      std::vector<Mat> imgs;
      std::vector<Complex> chars;
      for (const auto& g : grp.elements()) {
        imgs.push_back(evaluate(r, g.exponents));
        chars.push_back(imgs.back().trace());
      }
      c->images.push_back(std::move(imgs));
      c->characters.push_back(std::move(chars));
    }
    caches[s] = std::move(c);
  });
  return *caches[s];
}

}  // namespace

const std::vector<Irrep>& irreps(GroupId group) { return cache(group).irreps; }

int irrep_index(GroupId group, const std::string& label) {
  const auto& rs = irreps(group);
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs[i].label == label) return static_cast<int>(i);
  throw NaqftError(ErrorKind::NoMatch,
                   "no irrep " + label + " in " + group_name(group));
}

Mat irrep_matrix(const Irrep& irrep, const GroupElement& g) {
  if (irrep.group != g.group)
    throw NaqftError(ErrorKind::GroupMismatch,
                     irrep.label + " evaluated at " + to_string(g));
  return evaluate(irrep, g.exponents);
}

Complex character(const Irrep& irrep, const GroupElement& g) {
  return irrep_matrix(irrep, g).trace();
}

const std::vector<Mat>& irrep_images(GroupId group, int r) {
  return cache(group).images.at(r);
}

const std::vector<std::vector<Complex>>& character_table(GroupId group) {
  return cache(group).characters;
}

Mat dft_matrix(GroupId group) {
  const Group& grp = Group::get(group);
  const int n = grp.order();
  Mat f(n, n);
  int row = 0;
  const auto& rs = irreps(group);
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const int d = rs[r].dim;
    const double s = std::sqrt(static_cast<double>(d) / n);
    const auto& imgs = irrep_images(group, static_cast<int>(r));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j, ++row)
        for (int g = 0; g < n; ++g) f(row, g) = s * imgs[g](i, j);
  }
  if (row != n)
    throw NaqftError(ErrorKind::DimensionMismatch,
                     "sum of squared irrep dimensions differs from |G|");
  return f;
}

std::vector<std::string> dft_row_labels(GroupId group) {
  std::vector<std::string> out;
  for (const auto& r : irreps(group))
    for (int i = 0; i < r.dim * r.dim; ++i) out.push_back(r.label);
  return out;
}

Mat regular_rep(GroupId group, int g, Side side) {
  const Group& grp = Group::get(group);
  const int n = grp.order();
  Mat p = Mat::Zero(n, n);
  for (int h = 0; h < n; ++h) {
    const int row = side == Side::Left ? grp.mul(g, h) : grp.mul(h, grp.inv(g));
    p(row, h) = 1.0;
  }
  return p;
}

Mat regular_rep(GroupId group, const GroupElement& g, Side side) {
  return regular_rep(group, Group::get(group).index_of(g), side);
}

ConjugateClassification classify_conjugates(GroupId group) {
  auto sub_id = predecessor(group);
  if (!sub_id)
    throw NaqftError(ErrorKind::GroupMismatch,
                     group_name(group) + " is a base group");
  const Group& grp = Group::get(group);
  const Group& sub = Group::get(*sub_id);
  const auto emb = grp.subgroup_embedding();
  std::map<int, int> back;
  for (std::size_t h = 0; h < emb.size(); ++h)
    back[emb[h]] = static_cast<int>(h);
  const int t = grp.transversal_generator();
  const int tinv = grp.inv(t);
  // h -> t^-1 h t inside the subgroup.
  std::vector<int> moved(sub.order());
  for (int h = 0; h < sub.order(); ++h) {
    auto it = back.find(grp.mul(grp.mul(tinv, emb[h]), t));
    if (it == back.end())
      throw NaqftError(ErrorKind::NoMatch,
                       "predecessor is not normal under the transversal");
    moved[h] = it->second;
  }
  const auto& chars = character_table(*sub_id);
  const auto& rs = irreps(*sub_id);
  const int nr = static_cast<int>(rs.size());
  std::vector<int> image(nr, -1);
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) {
      double err = 0.0;
      for (int h = 0; h < sub.order(); ++h)
        err = std::max(err, std::abs(chars[a][moved[h]] - chars[b][h]));
      if (err < 1e-9) {
        image[a] = b;
        break;
      }
    }
    if (image[a] < 0)
      throw NaqftError(ErrorKind::NoMatch,
                       rs[a].label + " conjugated matches no irrep");
  }
  ConjugateClassification out{*sub_id, group, {}, {}};
  std::vector<bool> seen(nr, false);
  for (int a = 0; a < nr; ++a) {
    if (seen[a]) continue;
    std::vector<std::string> orbit;
    for (int b = a; !seen[b]; b = image[b]) {
      seen[b] = true;
      orbit.push_back(rs[b].label);
    }
    if (orbit.size() == 1)
      out.extendable.push_back(orbit[0]);
    else
      out.orbits.push_back(orbit);
  }
  return out;
}

std::optional<IrrepBasisAssignment> printed_assignment(GroupId group) {
  const Group& grp = Group::get(group);
  IrrepBasisAssignment out{group, {}};
  auto idx = [&](std::vector<int> e) { return grp.index_of(e); };
  switch (group) {
    case GroupId::Q8:
      // Listed as |c>_k |b>_j |a>_-1.
      out.blocks = {{"xi1", {idx({0, 0, 0})}},
                    {"xi3", {idx({0, 0, 1})}},
                    {"xi2", {idx({0, 1, 0})}},
                    {"xi4", {idx({0, 1, 1})}},
                    {"xi5", {4, 5, 6, 7}}};
      return out;
    case GroupId::BT: {
      // Listed as |d>_u |c>_k |b>_j |a>_-1.
      out.blocks = {{"rho1", {idx({0, 0, 0, 0})}},
                    {"rho2", {idx({0, 0, 0, 1})}},
                    {"rho3", {idx({0, 0, 0, 2})}}};
      for (int d = 0; d < 3; ++d) {
        std::vector<int> s;
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c) s.push_back(idx({1, b, c, d}));
        out.blocks.push_back({"rho" + std::to_string(4 + d), s});
      }
      std::vector<int> s7;
      for (int d = 0; d < 3; ++d)
        for (auto bc : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}})
          s7.push_back(idx({0, bc.first, bc.second, d}));
      std::sort(s7.begin(), s7.end());
      out.blocks.push_back({"rho7", s7});
      return out;
    }
    case GroupId::Z3xZ3:
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          out.blocks.push_back(
              {"chi" + std::to_string(3 * a + b + 1), {idx({a, b})}});
      return out;
    case GroupId::D27: {
      // Listed as |p q r>.
      for (int q = 0; q < 3; ++q)
        for (int r = 0; r < 3; ++r)
          out.blocks.push_back(
              {"xi" + std::to_string(3 * q + r + 1), {idx({0, q, r})}});
      for (int p = 1; p < 3; ++p) {
        std::vector<int> s;
        for (int q = 0; q < 3; ++q)
          for (int r = 0; r < 3; ++r) s.push_back(idx({p, q, r}));
        out.blocks.push_back({p == 1 ? "xi10" : "xi11", s});
      }
      return out;
    }
    case GroupId::D54: {
      // Listed as |s r q p>, transcribed verbatim including its duplicates.
      auto st = [&](const char* digits) {
        return idx({digits[3] - '0', digits[2] - '0', digits[1] - '0',
                    digits[0] - '0'});
      };
      out.blocks = {
          {"rhobar1", {st("0000")}},
          {"rhobar2", {st("1000")}},
          {"rhobar3", {st("0100"), st("0200"), st("0210"), st("0020")}},
          {"rhobar4", {st("1100"), st("1200"), st("1210"), st("1020")}},
          {"rhobar5", {st("0010"), st("0020"), st("0120"), st("0220")}},
          {"rhobar6", {st("1000"), st("1110"), st("1120"), st("1220")}},
      };
      const char* names[4] = {"rhobar7", "rhobar8", "rhobar9", "rhobar10"};
      for (int k = 0; k < 4; ++k) {
        const int s = k % 2;
        const int p = 1 + k / 2;
        std::vector<int> v;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) v.push_back(idx({p, b, a, s}));
        std::sort(v.begin(), v.end());
        out.blocks.push_back({names[k], v});
      }
      return out;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace naqft
