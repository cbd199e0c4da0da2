// Copyright 2026 The approxmaj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "approxmaj/cli.hpp"

#include <cstdlib>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "approxmaj/io.hpp"
#include "approxmaj/majorization.hpp"
#include "approxmaj/schur.hpp"
#include "approxmaj/smoothing.hpp"

namespace approxmaj {

namespace {

std::uint64_t verification_seed() {
  const char* env = std::getenv("MAJORIZE_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long seed = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::kParseError, "MAJORIZE_SEED must be a nonnegative integer");
  return seed;
}

std::string join_values(const Distribution& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ",";
    out += format_number(d[i]);
  }
  return out;
}

std::string prefix_report(const std::optional<std::size_t>& v) {
  return v ? "l=" + std::to_string(*v) : "none";
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

struct Inputs {
  std::string p_file;
  std::string q_file;
};

int cmd_check(const Config& cfg, const Inputs& in, std::ostream& out) {
  const Distribution p = read_distribution_file(in.p_file, cfg).dist;
  const Distribution q = read_distribution_file(in.q_file, cfg).dist;
  const auto pq = first_violation(p, q, cfg.tol.tau);
  const auto qp = first_violation(q, p, cfg.tol.tau);

  out << "k: " << p.size() << "\n";
  out << "p majorizes q: " << (pq ? "no" : "yes") << "\n";
  out << "q majorizes p: " << (qp ? "no" : "yes") << "\n";
  out << "first failing prefix (p over q): " << prefix_report(pq) << "\n";
  out << "first failing prefix (q over p): " << prefix_report(qp) << "\n";
  out << "delta* (p over q): " << format_number(majorization_distance(p, q)) << "\n";
  out << "delta* (q over p): " << format_number(majorization_distance(q, p)) << "\n";
  if (!pq) {
    out << "result: p majorizes q\n";
    return kExitOk;
  }
  out << (qp ? "result: incomparable\n" : "result: q majorizes p\n");
  return kExitNegative;
}

int cmd_distance(const Config& cfg, const Inputs& in, std::ostream& out) {
  const Distribution p = read_distribution_file(in.p_file, cfg).dist;
  const Distribution q = read_distribution_file(in.q_file, cfg).dist;
  const double d = majorization_distance(p, q);
  const bool steep_ok = majorizes(steepest(p, d, cfg.tol).result, q, cfg.tol.tau);
  const bool flat_ok = majorizes(p, flattest(q, d, cfg.tol).result, cfg.tol.tau);

  out << "delta*: " << format_number(d) << "\n";
  if (d == 0.0) out << "note: p already majorizes q\n";
  out << "witness steepest(p, delta*) majorizes q: " << pass_fail(steep_ok) << "\n";
  out << "witness p majorizes flattest(q, delta*): " << pass_fail(flat_ok) << "\n";
  return steep_ok && flat_ok ? kExitOk : kExitNegative;
}

struct ApproxArgs {
  double delta = 0.0;
  ApproxKind kind = ApproxKind::kSteepest;
  std::string out_file;
  std::string lorenz_out;
};

int cmd_approx(const Config& cfg, const Inputs& in, const ApproxArgs& args, std::ostream& out) {
  const Distribution p = read_distribution_file(in.p_file, cfg).dist;
  const SmoothedResult r = approximate(p, args.delta, args.kind, cfg.tol);

  out << "kind: " << kind_name(r.kind) << "\n";
  out << "delta: " << format_number(r.delta) << "\n";
  out << "clamped: " << (r.clamped ? "true" : "false") << "\n";
  out << "values: " << join_values(r.result) << "\n";
  if (r.steepest) {
    out << "l_star: " << r.steepest->l_star << "\n";
    out << "tail_value: " << format_number(r.steepest->tail_value) << "\n";
  }
  if (r.flattest) {
    out << "x_star: " << format_number(r.flattest->x_star) << "\n";
    out << "y_star: " << format_number(r.flattest->y_star) << "\n";
    out << "l_I: " << r.flattest->l_i << "\n";
    out << "l_J: " << r.flattest->l_j << "\n";
  }
  if (!args.out_file.empty()) write_text_file(args.out_file, smoothed_result_json(r));
  if (!args.lorenz_out.empty()) {
    const LorenzCurve curve = args.kind == ApproxKind::kSteepest ? lorenz_steepest(p, args.delta, cfg.tol)
                                                                 : lorenz_flattest(p, args.delta, cfg.tol);
    write_text_file(args.lorenz_out, lorenz_csv(curve));
  }
  return kExitOk;
}

struct SmoothArgs {
  std::string function;
  ExtremumMode mode = ExtremumMode::kMax;
  double delta = 0.0;
  std::size_t verify = 0;
};

int cmd_smooth(const Config& cfg, const Inputs& in, const SmoothArgs& args, std::ostream& out) {
  const SchurFunction f = parse_function_spec(args.function, cfg.base);
  validate_delta(args.delta);
  const Distribution p = read_distribution_file(in.p_file, cfg).dist;
  const ApproxKind at = extremal_kind(f, args.mode);
  const double value = smooth_extremum(f, p, args.delta, args.mode, cfg.tol);
  const bool want_max = args.mode == ExtremumMode::kMax;

  out << "function: " << f.name << " ("
      << (f.direction == SchurDirection::kConvex ? "schur-convex" : "schur-concave") << ")\n";
  out << "mode: " << (want_max ? "max" : "min") << "\n";
  out << "delta: " << format_number(args.delta) << "\n";
  out << "evaluated at: " << kind_name(at) << "\n";
  out << "value: " << format_number(value) << "\n";
  if (args.verify == 0) return kExitOk;

  const std::uint64_t seed = verification_seed();
  const double oracle = brute_force_extremum(f, p, args.delta, args.verify, seed, args.mode, true, cfg.tol);
  const double sampled = brute_force_extremum(f, p, args.delta, args.verify, seed, args.mode, false, cfg.tol);
  const double gap = std::abs(oracle - value);
  const bool dominates = want_max ? value >= sampled - cfg.tol.tau : value <= sampled + cfg.tol.tau;
  const bool ok = gap <= cfg.tol.tau && dominates;
  out << "verify samples: " << args.verify << "\n";
  out << "verify seed: " << seed << "\n";
  out << "oracle (samples + extremal points): " << format_number(oracle) << "\n";
  out << "samples only: " << format_number(sampled) << "\n";
  out << "gap: " << format_number(gap) << "\n";
  out << "verify: " << pass_fail(ok) << "\n";
  return ok ? kExitOk : kExitNegative;
}

struct LorenzArgs {
  std::optional<double> delta;
  std::string out_file;
};

int cmd_lorenz(const Config& cfg, const Inputs& in, const LorenzArgs& args, std::ostream& out) {
  const Distribution p = read_distribution_file(in.p_file, cfg).dist;
  std::string csv;
  if (args.delta) {
    csv = lorenz_table_csv(lorenz(p), lorenz_steepest(p, *args.delta, cfg.tol), lorenz_flattest(p, *args.delta, cfg.tol));
  } else {
    csv = lorenz_csv(lorenz(p));
  }
  if (args.out_file.empty()) {
    out << csv;
  } else {
    write_text_file(args.out_file, csv);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate majorization of discrete probability distributions", "approxmaj"};
  app.require_subcommand(1);

  Config cfg;
  std::string base = "2";
  std::string policy = "reject";
  app.add_option("--tau", cfg.tol.tau, "Comparison tolerance")->capture_default_str();
  app.add_option("--tau-norm", cfg.tol.tau_norm, "Normalization tolerance")->capture_default_str();
  app.add_option("--base", base, "Logarithm base for entropies")->check(CLI::IsMember({"2", "e"}))->capture_default_str();
  app.add_option("--input-policy", policy, "How to treat inputs that do not sum to one")
      ->check(CLI::IsMember({"reject", "renormalize"}))
      ->capture_default_str();

  Inputs in;
  const std::map<std::string, ApproxKind> kinds{{"steepest", ApproxKind::kSteepest}, {"flattest", ApproxKind::kFlattest}};
  const std::map<std::string, ExtremumMode> modes{{"max", ExtremumMode::kMax}, {"min", ExtremumMode::kMin}};

  auto* check = app.add_subcommand("check", "Test p > q and q > p, report delta* both ways");
  check->add_option("p", in.p_file, "Distribution file (.json or CSV)")->required();
  check->add_option("q", in.q_file, "Distribution file (.json or CSV)")->required();

  ApproxArgs approx_args;
  auto* approx = app.add_subcommand("approx", "Steepest or flattest delta-approximation");
  approx->add_option("p", in.p_file, "Distribution file")->required();
  approx->add_option("--delta", approx_args.delta, "l1 radius in [0, 2]")->required();
  approx->add_option("--kind", approx_args.kind, "Which extremal approximation")
      ->required()
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case).description(""))
      ->option_text("steepest|flattest");
  approx->add_option("--out", approx_args.out_file, "Write the result as JSON");
  approx->add_option("--lorenz-out", approx_args.lorenz_out, "Write the closed-form Lorenz curve as CSV");

  auto* distance = app.add_subcommand("distance", "Majorization distance delta* with both witnesses");
  distance->add_option("p", in.p_file, "Distribution file")->required();
  distance->add_option("q", in.q_file, "Distribution file")->required();

  SmoothArgs smooth_args;
  auto* smooth = app.add_subcommand("smooth", "Smoothed extremum of a Schur function");
  smooth->add_option("p", in.p_file, "Distribution file")->required();
  smooth->add_option("--function", smooth_args.function, "shannon | renyi:<alpha> | sum_powers:<alpha>")->required();
  smooth->add_option("--mode", smooth_args.mode, "Which extremum to compute")
      ->required()
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case).description(""))
      ->option_text("max|min");
  smooth->add_option("--delta", smooth_args.delta, "l1 radius in [0, 2]")->required();
  smooth->add_option("--verify", smooth_args.verify, "Check against n random delta-ball samples");

  LorenzArgs lorenz_args;
  auto* lorenz_cmd = app.add_subcommand("lorenz", "Lorenz curve, optionally with both approximations");
  lorenz_cmd->add_option("p", in.p_file, "Distribution file")->required();
  lorenz_cmd->add_option("--delta", lorenz_args.delta, "Also emit steepest and flattest curves");
  lorenz_cmd->add_option("--out", lorenz_args.out_file, "Write CSV here instead of stdout");

  for (auto* sub : {check, approx, distance, smooth, lorenz_cmd}) sub->fallthrough();

  std::vector<const char*> argv{"approxmaj"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    cfg.base = base == "e" ? LogBase::kE : LogBase::kTwo;
    cfg.input_policy = policy == "renormalize" ? InputPolicy::kRenormalize : InputPolicy::kReject;
    cfg.validate();

    if (*check) return cmd_check(cfg, in, out);
    if (*approx) return cmd_approx(cfg, in, approx_args, out);
    if (*distance) return cmd_distance(cfg, in, out);
    if (*smooth) return cmd_smooth(cfg, in, smooth_args, out);
    return cmd_lorenz(cfg, in, lorenz_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace approxmaj
