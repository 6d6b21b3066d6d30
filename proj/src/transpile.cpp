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

#include "naqft/transpile.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "naqft/errors.hpp"

namespace naqft {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-12;
constexpr int kLookahead = 8;

/** Qubit q must hold v. */
struct Lit {
  int q;
  int v;
  bool operator==(const Lit&) const = default;
  bool operator<(const Lit& o) const {
    return q != o.q ? q < o.q : v < o.v;
  }
};

/** Angle reduced into (-pi, pi]. */
double wrap(double a) {
  a = std::remainder(a, 2 * kPi);
  if (a <= -kPi + kEps) a += 2 * kPi;
  return a;
}

bool is_diagonal(const Mat& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (r != c && std::abs(m(r, c)) > kEps) return false;
  return true;
}

struct Zyz {
  double alpha, beta, gamma, delta;
};

/** u = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta). */
Zyz zyz(const Mat& u) {
  const double alpha = std::arg(u.determinant()) / 2;
  const Mat v = u * std::polar(1.0, -alpha);
  const Complex a = v(0, 0), b = v(1, 0);
  const double gamma = 2 * std::atan2(std::abs(b), std::abs(a));
  const double sum = std::abs(a) > kEps ? -2 * std::arg(a) : 0.0;
  const double diff = std::abs(b) > kEps ? 2 * std::arg(b) : 0.0;
  return {alpha, (sum + diff) / 2, gamma, (sum - diff) / 2};
}

GateKind base_kind(GateKind k) {
  switch (k) {
    case GateKind::CHI_PROD: return GateKind::CHI;
    case GateKind::CHIdg_PROD: return GateKind::CHIdg;
    case GateKind::S3_PROD: return GateKind::S3;
    case GateKind::S3dg_PROD: return GateKind::S3dg;
    default: return k;
  }
}

class Transpiler {
 public:
  explicit Transpiler(const Circuit& in)
      : in_(in), out_(Circuit::empty(in.group, Arch::Qubit)) {
    const auto& ml = in.layout;
    for (const auto& w : in.wires) {
      if (w.role != WireRole::AncillaClean) {
        int digit = -1;
        for (std::size_t k = 0; k < ml.digit_wires.size(); ++k)
          if (ml.digit_wires[k].size() == 1 && ml.digit_wires[k][0] == w.id)
            digit = static_cast<int>(k);
        if (digit < 0)
          throw NaqftError(ErrorKind::LayoutMismatch,
                           "transpile expects a mixed-layout circuit");
        map_.push_back(out_.layout.digit_wires[digit]);
      } else if (w.dim == 2) {
        map_.push_back({out_.add_ancilla(2)});
      } else {
        const int lo = out_.add_ancilla(2);
        map_.push_back({lo, out_.add_ancilla(2)});
      }
    }
  }

  Circuit run() {
    const int n = static_cast<int>(in_.gates.size());
    std::vector<std::vector<Lit>> lits(n);
    for (int i = 0; i < n; ++i) lits[i] = literals(in_.gates[i].controls);
    for (int i = 0; i < n; ++i) {
      std::map<Lit, int> freq;
      for (int k = i + 1; k < std::min(n, i + 1 + kLookahead); ++k)
        for (const Lit& l : lits[k]) ++freq[l];
      process(in_.gates[i], lits[i], freq);
    }
    while (!stack_.empty()) pop();
    out_.check();
    return out_;
  }

 private:
  struct Entry {
    Lit lit;
    Lit prev;
    int anc;
  };

  std::vector<Lit> literals(const std::vector<Control>& controls) const {
    std::vector<Lit> out;
    for (const auto& c : controls) {
      if (c.value == kProductFactor) continue;
      const auto& qs = map_.at(c.wire);
      if (qs.size() == 1) {
        out.push_back({qs[0], c.value});
      } else if (c.value == 0) {
        out.push_back({qs[0], 0});
        out.push_back({qs[1], 0});
      } else {
        out.push_back({qs[c.value - 1], 1});
      }
    }
    return out;
  }

  void emit(GateKind k, int t, std::vector<Control> c = {}) {
    out_.add(gate(k, t, std::move(c)));
  }
  void cx(int c, int t, int cv = 1) { emit(GateKind::X, t, {{c, cv}}); }
  void ccx(Lit a, Lit b, int t) { emit(GateKind::X, t, {{a.q, a.v}, {b.q, b.v}}); }

  void phase(int q, double theta) {
    theta = wrap(theta);
    if (std::abs(theta) < 1e-10) return;
    const double k = theta / (kPi / 4);
    const double kr = std::round(k);
    if (std::abs(k - kr) > 1e-10) {
      out_.add(rotation(GateKind::Rz, theta, q));
      return;
    }
    switch (((static_cast<int>(kr) % 8) + 8) % 8) {
      case 1: emit(GateKind::T, q); break;
      case 2: emit(GateKind::S, q); break;
      case 3: emit(GateKind::S, q); emit(GateKind::T, q); break;
      case 4: emit(GateKind::Z, q); break;
      case 5: emit(GateKind::Z, q); emit(GateKind::T, q); break;
      case 6: emit(GateKind::Sdg, q); break;
      case 7: emit(GateKind::Tdg, q); break;
      default: break;
    }
  }

  void ry(int q, double theta) {
    if (std::abs(wrap(theta)) < 1e-10) return;
    emit(GateKind::Sdg, q);
    emit(GateKind::H, q);
    phase(q, theta);
    emit(GateKind::H, q);
    emit(GateKind::S, q);
  }

  void one_qubit(int q, const Mat& u) {
    if (is_diagonal(u)) {
      phase(q, std::arg(u(1, 1)) - std::arg(u(0, 0)));
      return;
    }
    const Zyz d = zyz(u);
    phase(q, d.delta);
    ry(q, d.gamma);
    phase(q, d.beta);
  }

  /** Controlled diag(1, e^{i theta}). */
  void cphase(int c, int t, double theta) {
    theta = wrap(theta);
    if (std::abs(theta) < 1e-10) return;
    if (std::abs(std::abs(theta) - kPi) < 1e-10) {
      emit(GateKind::H, t);
      cx(c, t);
      emit(GateKind::H, t);
      return;
    }
    phase(c, theta / 2);
    phase(t, theta / 2);
    cx(c, t);
    phase(t, -theta / 2);
    cx(c, t);
  }

  void controlled_one_qubit(int c, int t, const Mat& u) {
    if (is_diagonal(u)) {
      const double t0 = std::arg(u(0, 0));
      phase(c, t0);
      cphase(c, t, std::arg(u(1, 1)) - t0);
      return;
    }
    const Zyz d = zyz(u);
    phase(t, (d.delta - d.beta) / 2);
    cx(c, t);
    phase(t, -(d.delta + d.beta) / 2);
    ry(t, -d.gamma / 2);
    cx(c, t);
    ry(t, d.gamma / 2);
    phase(t, d.beta);
    phase(c, d.alpha);
  }

  void fredkin(int c, int a, int b) {
    cx(b, a);
    ccx({c, 1}, {a, 1}, b);
    cx(b, a);
  }

  void two_qubit(const Mat& u, int lo, int hi) {
    out_.add(unitary(u, {lo, hi}));
  }

  void uncontrolled(const Gate& g) {
    const Mat m = gate_matrix(g, in_);
    const auto& t0 = map_.at(g.targets[0]);
    if (g.kind == GateKind::SWAP) {
      const auto& t1 = map_.at(g.targets[1]);
      for (std::size_t k = 0; k < t0.size(); ++k)
        out_.add(gate(GateKind::SWAP, {t0[k], t1[k]}));
      return;
    }
    if (g.targets.size() == 2 && t0.size() == 1 &&
        map_.at(g.targets[1]).size() == 1) {
      two_qubit(m, t0[0], map_.at(g.targets[1])[0]);
      return;
    }
    if (g.targets.size() != 1)
      throw NaqftError(ErrorKind::UnsupportedGate,
                       "no qubit form for " + to_string(g.kind));
    if (t0.size() == 1) {
      switch (g.kind) {
        case GateKind::X: case GateKind::Y: case GateKind::Z:
        case GateKind::H: case GateKind::S: case GateKind::Sdg:
        case GateKind::T: case GateKind::Tdg:
          emit(g.kind, t0[0]);
          return;
        default:
          one_qubit(t0[0], m);
          return;
      }
    }
    const int lo = t0[0], hi = t0[1];
    switch (g.kind) {
      case GateKind::CHI:
        cx(hi, lo);
        cx(lo, hi);
        emit(GateKind::X, lo);
        return;
      case GateKind::CHIdg:
        emit(GateKind::X, lo);
        cx(lo, hi);
        cx(hi, lo);
        return;
      case GateKind::X12: out_.add(gate(GateKind::SWAP, {lo, hi})); return;
      case GateKind::X01: cx(hi, lo, 0); return;
      case GateKind::X02: cx(lo, hi, 0); return;
      default: break;
    }
    if (is_diagonal(m)) {
      const double a0 = std::arg(m(0, 0));
      phase(lo, std::arg(m(1, 1)) - a0);
      phase(hi, std::arg(m(2, 2)) - a0);
      return;
    }
    two_qubit(embed_qutrit(m), lo, hi);
  }

  /** g controlled on qubit c holding 1. */
  void controlled(const Gate& g, int c) {
    const Mat m = gate_matrix(g, in_);
    const auto& t0 = map_.at(g.targets[0]);
    if (g.kind == GateKind::SWAP) {
      const auto& t1 = map_.at(g.targets[1]);
      for (std::size_t k = 0; k < t0.size(); ++k) fredkin(c, t0[k], t1[k]);
      return;
    }
    if (g.targets.size() != 1)
      throw NaqftError(ErrorKind::UnsupportedGate,
                       "no controlled qubit form for " + to_string(g.kind));
    if (t0.size() == 1) {
      const int t = t0[0];
      switch (g.kind) {
        case GateKind::X: cx(c, t); return;
        case GateKind::Y:
          emit(GateKind::Sdg, t);
          cx(c, t);
          emit(GateKind::S, t);
          return;
        case GateKind::Z:
          emit(GateKind::H, t);
          cx(c, t);
          emit(GateKind::H, t);
          return;
        case GateKind::Rz:
          phase(t, g.theta / 2);
          cx(c, t);
          phase(t, -g.theta / 2);
          cx(c, t);
          return;
        default:
          controlled_one_qubit(c, t, m);
          return;
      }
    }
    const int lo = t0[0], hi = t0[1];
    switch (g.kind) {
      case GateKind::CHI:
        ccx({c, 1}, {hi, 1}, lo);
        ccx({c, 1}, {lo, 1}, hi);
        cx(c, lo);
        return;
      case GateKind::CHIdg:
        cx(c, lo);
        ccx({c, 1}, {lo, 1}, hi);
        ccx({c, 1}, {hi, 1}, lo);
        return;
      case GateKind::X12: fredkin(c, lo, hi); return;
      case GateKind::X01: ccx({c, 1}, {hi, 0}, lo); return;
      case GateKind::X02: ccx({c, 1}, {lo, 0}, hi); return;
      default: break;
    }
    if (is_diagonal(m)) {
      controlled_diag(c, lo, hi, m);
      return;
    }
    Eigen::ComplexSchur<Mat> schur(m);
    const Mat q = schur.matrixU();
    two_qubit(embed_qutrit(q.adjoint()), lo, hi);
    controlled_diag(c, lo, hi, schur.matrixT().diagonal().asDiagonal());
    two_qubit(embed_qutrit(q), lo, hi);
  }

  void controlled_diag(int c, int lo, int hi, const Mat& d) {
    const double a0 = std::arg(d(0, 0));
    phase(c, a0);
    cphase(c, lo, std::arg(d(1, 1)) - a0);
    cphase(c, hi, std::arg(d(2, 2)) - a0);
  }

  void controlled(const Gate& g, Lit c) {
    if (c.v == 0) emit(GateKind::X, c.q);
    controlled(g, c.q);
    if (c.v == 0) emit(GateKind::X, c.q);
  }

  // Predicate stack: entry k > 0 holds the conjunction of literals 0..k.
  Lit top() const {
    return stack_.size() == 1 ? stack_[0].lit : Lit{stack_.back().anc, 1};
  }

  void push(Lit l) {
    if (stack_.empty()) {
      stack_.push_back({l, l, -1});
      return;
    }
    const std::size_t depth = stack_.size() - 1;
    if (pool_.size() <= depth) pool_.push_back(out_.add_ancilla(2));
    const Lit prev = top();
    ccx(prev, l, pool_[depth]);
    stack_.push_back({l, prev, pool_[depth]});
  }

  void pop() {
    const Entry e = stack_.back();
    if (e.anc >= 0) ccx(e.prev, e.lit, e.anc);
    stack_.pop_back();
  }

  void release(const std::vector<int>& qubits) {
    for (std::size_t k = 0; k < stack_.size(); ++k) {
      if (std::find(qubits.begin(), qubits.end(), stack_[k].lit.q) !=
          qubits.end()) {
        while (stack_.size() > k) pop();
        return;
      }
    }
  }

  Lit acquire(const std::vector<Lit>& lits, const std::map<Lit, int>& freq) {
    std::size_t keep = 0;
    while (keep < stack_.size() &&
           std::find(lits.begin(), lits.end(), stack_[keep].lit) != lits.end())
      ++keep;
    while (stack_.size() > keep) pop();
    std::vector<Lit> rest;
    for (const Lit& l : lits) {
      bool held = false;
      for (const auto& e : stack_) held |= e.lit == l;
      if (!held) rest.push_back(l);
    }
    auto f = [&](const Lit& l) {
      auto it = freq.find(l);
      return it == freq.end() ? 0 : it->second;
    };
    std::stable_sort(rest.begin(), rest.end(), [&](const Lit& a, const Lit& b) {
      return f(a) != f(b) ? f(a) > f(b) : a < b;
    });
    for (const Lit& l : rest) push(l);
    return top();
  }

  int scratch(std::size_t k) {
    while (scratch_.size() <= k) scratch_.push_back(out_.add_ancilla(2));
    return scratch_[k];
  }

  void product(const Gate& g, const std::vector<Lit>& lits) {
    struct Pair {
      Lit one;
      std::optional<Lit> two;
    };
    std::vector<Pair> factors;
    for (const auto& c : g.controls) {
      if (c.value != kProductFactor) continue;
      const auto& qs = map_.at(c.wire);
      if (qs.size() == 1)
        factors.push_back({{qs[0], 1}, std::nullopt});
      else
        factors.push_back({{qs[0], 1}, Lit{qs[1], 1}});
    }
    for (const Lit& l : lits) factors.push_back({l, std::nullopt});

    std::vector<std::pair<std::pair<Lit, Lit>, int>> log;
    auto tof = [&](Lit a, Lit b, int t) {
      ccx(a, b, t);
      log.push_back({{a, b}, t});
    };
    Pair acc = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) {
      const Pair& f = factors[k];
      const bool value_lit = k >= factors.size() - lits.size();
      const int n1 = scratch(2 * (k - 1));
      std::optional<int> n2;
      if (acc.two || (f.two && !value_lit)) n2 = scratch(2 * (k - 1) + 1);
      if (value_lit) {
        tof(acc.one, f.one, n1);
        if (acc.two) tof(*acc.two, f.one, *n2);
      } else {
        tof(acc.one, f.one, n1);
        if (acc.two && f.two) tof(*acc.two, *f.two, n1);
        if (f.two) tof(acc.one, *f.two, *n2);
        if (acc.two) tof(*acc.two, f.one, *n2);
      }
      acc = {{n1, 1}, n2 ? std::optional<Lit>(Lit{*n2, 1}) : std::nullopt};
    }
    Gate base = g;
    base.kind = base_kind(g.kind);
    base.controls.clear();
    controlled(base, acc.one);
    if (acc.two) controlled(inverse(base), *acc.two);
    for (auto it = log.rbegin(); it != log.rend(); ++it)
      ccx(it->first.first, it->first.second, it->second);
  }

  void process(const Gate& g, const std::vector<Lit>& lits,
               const std::map<Lit, int>& freq) {
    std::vector<int> touched;
    for (int t : g.targets)
      for (int q : map_.at(t)) touched.push_back(q);
    release(touched);
    if (is_product_kind(g.kind)) {
      product(g, lits);
      return;
    }
    if (lits.empty()) {
      uncontrolled(g);
      return;
    }
    if (lits.size() == 1) {
      controlled(g, lits[0]);
      return;
    }
    const bool qubit_target =
        g.targets.size() == 1 && map_.at(g.targets[0]).size() == 1;
    if (lits.size() == 2 && qubit_target &&
        (g.kind == GateKind::X || g.kind == GateKind::Z)) {
      const int t = map_.at(g.targets[0])[0];
      if (g.kind == GateKind::Z) emit(GateKind::H, t);
      ccx(lits[0], lits[1], t);
      if (g.kind == GateKind::Z) emit(GateKind::H, t);
      return;
    }
    controlled(g, acquire(lits, freq));
  }

  const Circuit& in_;
  Circuit out_;
  std::vector<std::vector<int>> map_;
  std::vector<Entry> stack_;
  std::vector<int> pool_;
  std::vector<int> scratch_;
};

}  // namespace

Mat embed_qutrit(const Mat& u3) {
  if (u3.rows() != 3 || u3.cols() != 3)
    throw NaqftError(ErrorKind::DimensionMismatch, "embed_qutrit needs 3x3");
  Mat m = Mat::Identity(4, 4);
  m.topLeftCorner(3, 3) = u3;
  return m;
}

Circuit transpile(const Circuit& mixed) {
  if (mixed.arch == Arch::Qubit) return mixed;
  mixed.check();
  return Transpiler(mixed).run();
}

}  // namespace naqft
