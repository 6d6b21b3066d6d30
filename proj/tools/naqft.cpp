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

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "naqft/errors.hpp"
#include "naqft/resources.hpp"
#include "naqft/synthesis.hpp"
#include "naqft/verifier.hpp"

using namespace naqft;

namespace {

struct Options {
  std::string group;
  std::string arch = "mixed";
  std::string in;
  std::string out;
  std::string format;
  std::string impl = "fft";
  double epsilon = 1e-10;
  double tolerance = 1e-9;
  int d = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupId need_group(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  auto g = parse_group(o.group);
  if (!g) throw UsageError("unknown group '" + o.group + "'");
  return *g;
}

Arch need_arch(const Options& o) {
  auto a = parse_arch(o.arch);
  if (!a) throw UsageError("unknown arch '" + o.arch + "'");
  return *a;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return;
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError("format '" + o.format + "' not supported here");
}

std::string verify_text(const VerificationReport& r) {
  return fmt::format(
      "{} {} {} off_block={:.3e} character={:.3e} intertwiner={:.3e} "
      "unitarity={:.3e} ancilla_leak={:.3e} forbidden_leak={:.3e}\n",
      group_name(r.group), r.arch, r.pass ? "PASS" : "FAIL",
      r.off_block_residual, r.character_residual, r.intertwiner_residual,
      r.unitarity_residual, r.ancilla_leakage, r.forbidden_leakage);
}

int cmd_synthesize(const Options& o) {
  check_format(o, {"json"});
  emit(o, to_json(synthesize(need_group(o), need_arch(o))));
  return 0;
}

int cmd_verify(const Options& o) {
  check_format(o, {"json", "text"});
  Circuit c;
  if (!o.in.empty()) {
    std::ifstream f(o.in, std::ios::binary);
    if (!f) throw UsageError("cannot read " + o.in);
    std::stringstream ss;
    ss << f.rdbuf();
    c = circuit_from_json(ss.str());
  } else {
    c = synthesize(need_group(o), need_arch(o));
  }
  const VerificationReport r = verify_circuit(c, o.tolerance);
  emit(o, o.format == "text" ? verify_text(r) : to_json(r));
  return r.pass ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  check_format(o, {"csv"});
  const Mat f = dft_matrix(need_group(o));
  std::string out;
  for (Eigen::Index r = 0; r < f.rows(); ++r) {
    for (Eigen::Index c = 0; c < f.cols(); ++c) {
      if (c) out += ',';
      out += fmt::format("{:.17g}{:+.17g}j", f(r, c).real(), f(r, c).imag());
    }
    out += '\n';
  }
  emit(o, out);
  return 0;
}

int cmd_resources(const Options& o) {
  check_format(o, {"json", "csv", "text"});
  t_count(0, 0, o.epsilon);
  if (!o.group.empty()) {
    const GroupId g = need_group(o);
    const ResourceReport r = census(synthesize(g, need_arch(o)));
    if (o.format == "json") {
      emit(o, to_json(r, o.epsilon));
      return 0;
    }
    std::vector<ComparisonRow> rows;
    for (const auto& f : table7_rows())
      if (f.group == g)
        rows.push_back({g, f.impl, f.variant.empty() ? "published" : "published-" + f.variant,
                        f.a, f.b, f.t_width, f.ancilla, t_count(f, o.epsilon),
                        std::nullopt});
    const bool has_fft = std::any_of(rows.begin(), rows.end(), [](const auto& x) {
      return x.impl == Impl::FFT;
    });
    rows.push_back({g, Impl::FFT, has_fft ? "ours" : "ours-only", r.a, r.b,
                    r.t_width, r.ancilla, t_count(r, o.epsilon), r});
    emit(o, o.format == "csv" ? comparison_csv(rows) : comparison_text(rows));
    return 0;
  }
  if (o.format == "json") throw UsageError("json resources needs --group");
  const auto rows = comparison(o.epsilon);
  emit(o, o.format == "csv" ? comparison_csv(rows) : comparison_text(rows));
  return 0;
}

int cmd_simcost(const Options& o) {
  check_format(o, {"text", "json"});
  auto impl = parse_impl(o.impl);
  if (!impl) throw UsageError("unknown impl '" + o.impl + "'");
  const SimCostModel& m = simcost_model(need_group(o), *impl);
  const double v = simcost(m, o.d, o.epsilon);
  if (o.format == "json") {
    emit(o, fmt::format(
                "{{\"group\": \"{}\", \"impl\": \"{}\", \"d\": {}, \"epsilon\": "
                "{:.17g}, \"cost\": {:.17g}, \"epsilon_tilde\": {:.17g}, "
                "\"n_fid\": {:.17g}, \"r_qft\": {:.17g}}}\n",
                group_name(m.group), to_string(m.impl), o.d, o.epsilon, v,
                epsilon_tilde(m, o.d), m.n_fid, m.r_qft));
  } else {
    emit(o, fmt::format("{:.1f}\n", v));
  }
  return 0;
}

int cmd_chain_report(const Options& o) {
  check_format(o, {"text", "csv"});
  const bool csv = o.format == "csv";
  std::string out = csv ? "group,arch,pass,off_block,character,intertwiner,leakage\n"
                        : fmt::format("{:<7} {:<6} {:<5} {:>10} {:>10} {:>11} {:>10}\n",
                                      "group", "arch", "pass", "off_block",
                                      "character", "intertwiner", "leakage");
  bool all = true;
  for (GroupId g : kAllGroups)
    for (Arch a : {Arch::Mixed, Arch::Qubit}) {
      const VerificationReport r = verify_circuit(synthesize(g, a), o.tolerance);
      all &= r.pass;
      const double leak = std::max(r.ancilla_leakage, r.forbidden_leakage);
      out += fmt::format(fmt::runtime(csv ? "{},{},{},{:.3e},{:.3e},{:.3e},{:.3e}\n"
                                          : "{:<7} {:<6} {:<5} {:>10.3e} {:>10.3e} {:>11.3e} {:>10.3e}\n"),
                         group_name(g), to_string(a), r.pass ? "PASS" : "FAIL",
                         r.off_block_residual, r.character_residual,
                         r.intertwiner_residual, leak);
    }
  emit(o, out);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast quantum Fourier transforms over finite subgroups of SU(2) and SU(3)"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("NAQFT_TOLERANCE")) {
    try {
      o.tolerance = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: NAQFT_TOLERANCE is not a number\n";
      return 2;
    }
  }
  const std::string groups = "z2, z4, q8, bt, bo, z3z3, d27, d54, s36x3";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Group: " + groups);
    sub->add_option("--arch", o.arch, "mixed or qubit");
    sub->add_option("--epsilon", o.epsilon, "Rz synthesis precision");
    sub->add_option("--tolerance", o.tolerance, "Verification tolerance");
    sub->add_option("--out", o.out, "Output path (default stdout)");
    sub->add_option("--format", o.format, "json, csv or text");
  };
  std::map<std::string, int (*)(const Options&)> handlers = {
      {"synthesize", cmd_synthesize}, {"verify", cmd_verify},
      {"oracle", cmd_oracle},         {"resources", cmd_resources},
      {"simcost", cmd_simcost},       {"chain-report", cmd_chain_report}};
  std::map<std::string, CLI::App*> subs;
  subs["synthesize"] = app.add_subcommand("synthesize", "Write the FFT circuit as JSON");
  subs["verify"] = app.add_subcommand("verify", "Verify a synthesized or loaded circuit");
  subs["oracle"] = app.add_subcommand("oracle", "Write the reference DFT matrix as CSV");
  subs["resources"] = app.add_subcommand("resources", "Gate census and T-cost comparison");
  subs["simcost"] = app.add_subcommand("simcost", "Evaluate a simulation cost row");
  subs["chain-report"] = app.add_subcommand("chain-report", "Verify every group in both architectures");
  for (auto& [name, sub] : subs) common(sub);
  subs["verify"]->add_option("--in", o.in, "Circuit JSON to verify");
  subs["simcost"]->add_option("--impl", o.impl, "ft or fft");
  subs["simcost"]->add_option("--d", o.d, "Positive integer parameter d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    for (auto& [name, sub] : subs)
      if (sub->parsed()) return handlers.at(name)(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NaqftError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
