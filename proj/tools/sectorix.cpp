// Command-line front end for the sector-matrix toolkit: matrix generation,
// numerical-range angle certification, accretive means, single inequality
// checks, the fixed counter-example demonstrations, and catalogue-wide
// randomized sweeps.
//
// Exit codes: 0 when everything evaluated held (or was vacuous), 1 when a
// proven inequality was violated on met hypotheses, 2 on malformed input
// (unknown flag, unreadable file, out-of-range parameter).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sectorix/checks.hpp"
#include "sectorix/io.hpp"
#include "sectorix/means.hpp"
#include "sectorix/sector.hpp"
#include "sectorix/sweep.hpp"

namespace {

using namespace sectorix;

const std::vector<std::string> kFormats = {"json", "csv", "human"};

// Stdout output always ends with a newline; file output is written verbatim
// plus a trailing newline so repeated runs stay byte-comparable.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    if (text.empty() || text.back() != '\n') std::fputc('\n', stdout);
  } else {
    std::string data = text;
    if (data.empty() || data.back() != '\n') data += '\n';
    save_text(out_path, data);
  }
}

struct AngleArgs {
  std::string input;
  int grid = 0;
  std::string format = "human";
  std::string out;
};

int cmd_angle(const AngleArgs& args) {
  const CMatrix a = load_matrix(args.input);
  const SectorCertificate cert = certify(a);
  double grid_alpha = 0.0;
  double grid_diff = 0.0;
  if (args.grid > 0) {
    grid_alpha = sector_angle_grid(a, args.grid);
    grid_diff = std::abs(grid_alpha - cert.alpha);
  }
  std::string text;
  if (args.format == "json") {
    text = "{\"alpha\":" + fmt17(cert.alpha) + ",\"m\":" + fmt17(cert.m) +
           ",\"M\":" + fmt17(cert.M) + ",\"h\":" + fmt17(cert.h);
    if (args.grid > 0) {
      text += ",\"grid\":{\"points\":" + std::to_string(args.grid) +
              ",\"alpha\":" + fmt17(grid_alpha) +
              ",\"difference\":" + fmt17(grid_diff) + "}";
    }
    text += "}";
  } else if (args.format == "csv") {
    text = "alpha,m,M,h,grid_points,grid_alpha\n" + fmt17(cert.alpha) + "," +
           fmt17(cert.m) + "," + fmt17(cert.M) + "," + fmt17(cert.h) + ",";
    if (args.grid > 0) {
      text += std::to_string(args.grid) + "," + fmt17(grid_alpha);
    } else {
      text += ",";
    }
  } else {
    text = "certified angle: " + fmt6(cert.alpha) + " rad\n" +
           "hermitian part: m = " + fmt6(cert.m) + ", M = " + fmt6(cert.M) +
           ", h = " + fmt6(cert.h) + "\n";
    if (args.grid > 0) {
      text += "grid cross-check (" + std::to_string(args.grid) +
              " directions): " + fmt6(grid_alpha) +
              " rad, difference = " + fmt6(grid_diff) + "\n";
    }
  }
  emit(text, args.out);
  return 0;
}

struct GenArgs {
  std::string kind;
  int n = 3;
  double alpha = 0.0;
  double cond = 1.0;
  double m = 1.0;
  double M = 10.0;
  std::uint64_t seed = 0;
  bool extremal = true;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  if (args.kind == "sector") {
    SectorGenSpec spec;
    spec.n = args.n;
    spec.alpha_max = args.alpha;
    spec.cond_x = args.cond;
    spec.seed = args.seed;
    spec.force_extremal = args.extremal;
    const SectorCertificate cert = gen_sector(spec);
    save_matrix(args.out, cert.a);
    std::printf("wrote %dx%d sector matrix to %s\n", args.n, args.n,
                args.out.c_str());
    std::printf(
        "certified angle: %s rad (requested <= %s); hermitian part m = %s, "
        "M = %s\n",
        fmt6(cert.alpha).c_str(), fmt6(args.alpha).c_str(),
        fmt6(cert.m).c_str(), fmt6(cert.M).c_str());
  } else {
    const CMatrix a = gen_hpd(args.n, args.m, args.M, args.seed);
    save_matrix(args.out, a);
    std::printf(
        "wrote %dx%d positive definite matrix to %s (spectrum within "
        "[%s, %s])\n",
        args.n, args.n, args.out.c_str(), fmt6(args.m).c_str(),
        fmt6(args.M).c_str());
  }
  return 0;
}

struct MeanArgs {
  std::string kind;
  double v = 0.5;
  std::string a_path, b_path, out;
  QuadControls quad{};
};

int cmd_mean(const MeanArgs& args) {
  const CMatrix a = load_matrix(args.a_path);
  const CMatrix b = load_matrix(args.b_path);
  CMatrix c;
  if (args.kind == "harmonic") {
    c = harmonic_mean(a, b, args.v);
  } else if (args.kind == "arithmetic") {
    c = arithmetic_mean(a, b, args.v);
  } else {
    c = geometric_mean_accretive(a, b, args.v, args.quad);
  }
  if (args.out.empty()) {
    emit(matrix_to_json(c), "");
  } else {
    save_matrix(args.out, c);
  }
  return 0;
}

struct CheckArgs {
  std::string id;
  std::string a_path, b_path;
  InstanceConfig inst{};
  CheckParams cp{};
  double tol = 1e-8;
  std::string format = "human";
  std::string out;
};

int cmd_check(const CheckArgs& args) {
  Instance inst;
  if (!args.a_path.empty()) {
    inst = make_instance_from_pair(load_matrix(args.a_path),
                                   load_matrix(args.b_path), args.inst.seed);
  } else {
    inst = make_instance(args.inst);
  }
  const std::vector<CheckResult> results =
      evaluate(args.id, inst, args.cp, args.tol);
  std::string text;
  if (args.format == "json") {
    text = results_to_json(results);
  } else if (args.format == "csv") {
    text = results_to_csv(results);
  } else {
    text = results_to_human(results);
  }
  emit(text, args.out);
  for (const CheckResult& r : results) {
    if (r.hypotheses_met && !r.holds && r.severity == Severity::proven)
      return 1;
  }
  return 0;
}

struct CeArgs {
  std::string id;
  std::string format = "human";
  std::string out;
};

int cmd_counterexample(const CeArgs& args) {
  const CounterexampleResult ce =
      args.id == "sv" ? counterexample_sv() : counterexample_det();
  std::string text;
  if (args.format == "json") {
    text = counterexample_to_json(ce);
  } else if (args.format == "csv") {
    text = counterexample_to_csv(ce);
  } else {
    text = counterexample_to_human(ce);
  }
  emit(text, args.out);
  // The demonstration succeeds exactly when the naive bound is violated.
  return ce.violated ? 0 : 1;
}

struct SweepArgs {
  SweepConfig cfg{};
  std::string format = "human";
  std::string out;
};

int cmd_sweep(const SweepArgs& args) {
  const Report rep = sweep(args.cfg);
  if (!args.out.empty()) emit(report_to_json(rep), args.out);
  std::string text;
  if (args.format == "json") {
    text = report_to_json(rep);
  } else if (args.format == "csv") {
    text = report_to_csv(rep);
  } else {
    text = report_to_human(rep);
  }
  emit(text, "");
  return rep.failures.empty() ? 0 : 1;
}

struct SuiteArgs {
  bool paper = false;
  int trials = 500;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string format = "human";
  std::string out = "report.json";
};

int cmd_suite(const SuiteArgs& args) {
  const CounterexampleResult sv = counterexample_sv();
  const CounterexampleResult det = counterexample_det();
  SweepConfig cfg;  // defaults cover the whole catalogue
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.threads = args.threads;
  const Report rep = sweep(cfg);
  emit(report_to_json(rep), args.out);
  std::string text;
  if (args.format == "json") {
    text = "{\"counterexamples\":[" + counterexample_to_json(sv) + "," +
           counterexample_to_json(det) +
           "],\"report\":" + report_to_json(rep) + "}";
  } else if (args.format == "csv") {
    text = counterexample_to_csv(sv) + "\n" + counterexample_to_csv(det) +
           "\n" + report_to_csv(rep);
  } else {
    text = counterexample_to_human(sv) + "\n" + counterexample_to_human(det) +
           "\n" + report_to_human(rep);
  }
  emit(text, "");
  return (rep.failures.empty() && sv.violated && det.violated) ? 0 : 1;
}

void add_quad_options(CLI::App* cmd, QuadControls& quad) {
  cmd->add_option("--quad-h", quad.h_s, "quadrature step size");
  cmd->add_option("--quad-eps", quad.eps_tail,
                  "quadrature tail truncation threshold");
  cmd->add_option("--quad-smax", quad.s_max, "quadrature half-range cap");
}

CLI::Option* add_format_option(CLI::App* cmd, std::string& target) {
  return cmd->add_option("--format", target, "output format")
      ->check(CLI::IsMember(kFormats));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sector-matrix inequality toolkit: certify numerical-range angles, "
      "compute accretive matrix means, and stress-test an inequality "
      "catalogue with signed slacks"};
  app.require_subcommand(1);

  AngleArgs angle_args;
  CLI::App* angle_cmd = app.add_subcommand(
      "angle", "certify the minimal sector angle of a matrix");
  angle_cmd->add_option("--input", angle_args.input, "matrix JSON file")
      ->required();
  angle_cmd->add_option(
      "--grid", angle_args.grid,
      "also cross-check the angle with an N-direction grid scan");
  add_format_option(angle_cmd, angle_args.format);
  angle_cmd->add_option("--out", angle_args.out,
                        "write the output here instead of stdout");

  GenArgs gen_args;
  CLI::App* gen_cmd = app.add_subcommand(
      "gen", "generate a seeded random matrix and write it as JSON");
  gen_cmd->add_option("--kind", gen_args.kind,
                      "matrix family: sector or hpd")
      ->required()
      ->check(CLI::IsMember({"sector", "hpd"}));
  gen_cmd->add_option("--n", gen_args.n, "dimension");
  gen_cmd->add_option("--alpha", gen_args.alpha,
                      "sector kind: largest eigen-argument in radians");
  gen_cmd->add_option("--cond", gen_args.cond,
                      "sector kind: condition bound for the congruence factor");
  gen_cmd->add_option("--m", gen_args.m, "hpd kind: smallest eigenvalue");
  gen_cmd->add_option("--M", gen_args.M, "hpd kind: largest eigenvalue");
  gen_cmd->add_option("--seed", gen_args.seed, "generator seed");
  gen_cmd->add_flag("--extremal,!--no-extremal", gen_args.extremal,
                    "sector kind: realize the requested angle exactly");
  gen_cmd->add_option("--out", gen_args.out, "output matrix JSON file")
      ->required();

  MeanArgs mean_args;
  CLI::App* mean_cmd = app.add_subcommand(
      "mean", "weighted mean of two accretive matrices");
  mean_cmd->add_option("--kind", mean_args.kind,
                       "harmonic, arithmetic, or geometric")
      ->required()
      ->check(CLI::IsMember({"harmonic", "arithmetic", "geometric"}));
  mean_cmd->add_option("--v", mean_args.v, "weight in [0, 1]");
  mean_cmd->add_option("--a", mean_args.a_path, "left operand matrix JSON")
      ->required();
  mean_cmd->add_option("--b", mean_args.b_path, "right operand matrix JSON")
      ->required();
  mean_cmd->add_option("--out", mean_args.out,
                       "write the mean here instead of stdout");
  add_quad_options(mean_cmd, mean_args.quad);

  CheckArgs check_args;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "evaluate one catalogue inequality at one grid point");
  check_cmd->add_option("--id", check_args.id, "catalogue id")->required();
  CLI::Option* a_opt = check_cmd->add_option(
      "--a", check_args.a_path,
      "left operand matrix JSON (with --b: evaluate on this supplied pair)");
  CLI::Option* b_opt = check_cmd->add_option(
      "--b", check_args.b_path, "right operand matrix JSON");
  a_opt->needs(b_opt);
  b_opt->needs(a_opt);
  CLI::Option* n_opt = check_cmd->add_option(
      "--n", check_args.inst.n, "generated instance dimension");
  CLI::Option* alpha_opt = check_cmd->add_option(
      "--alpha", check_args.inst.alpha,
      "generated instance sector angle in radians");
  CLI::Option* cond_opt = check_cmd->add_option(
      "--cond", check_args.inst.cond_x,
      "generated instance condition bound for congruence factors");
  CLI::Option* arities_opt =
      check_cmd
          ->add_option("--arities", check_args.inst.map_arities,
                       "multilinear map arities to generate")
          ->delimiter(',');
  CLI::Option* mapl_opt = check_cmd->add_option(
      "--map-l", check_args.inst.map_l,
      "output dimension of generated maps (0 = same as n)");
  check_cmd->add_option("--seed", check_args.inst.seed, "instance seed");
  a_opt->excludes(n_opt)
      ->excludes(alpha_opt)
      ->excludes(cond_opt)
      ->excludes(arities_opt)
      ->excludes(mapl_opt);
  check_cmd->add_option("--k", check_args.cp.k,
                        "leading index count / map arity selector");
  check_cmd->add_option("--v", check_args.cp.v, "mean weight in [0, 1]");
  check_cmd->add_option("--r", check_args.cp.r, "exponent parameter r");
  check_cmd->add_option("--p", check_args.cp.p, "power parameter p");
  check_cmd->add_option("--f", check_args.cp.f,
                        "concave function name (t, sqrt, t/(1+t), log1p)");
  check_cmd->add_option(
      "--alpha-override", check_args.cp.alpha_override,
      "evaluate at this angle instead of the certified one (must not be "
      "smaller)");
  add_quad_options(check_cmd, check_args.cp.quad);
  check_cmd->add_option("--tol", check_args.tol, "violation tolerance");
  add_format_option(check_cmd, check_args.format);
  check_cmd->add_option("--out", check_args.out,
                        "write the output here instead of stdout");

  CeArgs ce_args;
  CLI::App* ce_cmd = app.add_subcommand(
      "counterexample",
      "print a fixed 3x3 demonstration that a naive product bound fails");
  ce_cmd->add_option("--id", ce_args.id,
                     "which demonstration: sv (singular values) or det "
                     "(determinants)")
      ->required()
      ->check(CLI::IsMember({"sv", "det"}));
  add_format_option(ce_cmd, ce_args.format);
  ce_cmd->add_option("--out", ce_args.out,
                     "write the output here instead of stdout");

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep",
      "randomized catalogue sweep with per-id slack statistics");
  sweep_cmd
      ->add_option("--ids", sweep_args.cfg.ids,
                   "check ids to run (comma separated; omit or 'all' for "
                   "every id)")
      ->delimiter(',');
  sweep_cmd->add_option("--n", sweep_args.cfg.n_values, "matrix dimensions")
      ->delimiter(',');
  sweep_cmd
      ->add_option("--alphas", sweep_args.cfg.alphas,
                   "sector angles in radians")
      ->delimiter(',');
  sweep_cmd->add_option("--v-grid", sweep_args.cfg.v_grid, "mean weights")
      ->delimiter(',');
  sweep_cmd->add_option("--r-grid", sweep_args.cfg.r_grid, "exponents r")
      ->delimiter(',');
  sweep_cmd->add_option("--p-grid", sweep_args.cfg.p_grid, "powers p")
      ->delimiter(',');
  sweep_cmd
      ->add_option("--f-names", sweep_args.cfg.f_names,
                   "concave function names")
      ->delimiter(',');
  sweep_cmd->add_option("--trials", sweep_args.cfg.trials,
                        "instances per (n, alpha) cell");
  sweep_cmd->add_option("--seed", sweep_args.cfg.seed, "master seed");
  sweep_cmd->add_option("--tol", sweep_args.cfg.tol, "violation tolerance");
  sweep_cmd->add_option("--cond", sweep_args.cfg.cond_x,
                        "condition bound for congruence factors");
  sweep_cmd
      ->add_option("--arities", sweep_args.cfg.map_arities,
                   "multilinear map arities")
      ->delimiter(',');
  sweep_cmd->add_option("--map-l", sweep_args.cfg.map_l,
                        "output dimension of generated maps (0 = same as n)");
  sweep_cmd->add_option(
      "--threads", sweep_args.cfg.threads,
      "worker threads (0 = SECTORIX_THREADS env or hardware)");
  add_quad_options(sweep_cmd, sweep_args.cfg.quad);
  add_format_option(sweep_cmd, sweep_args.format);
  sweep_cmd->add_option("--out", sweep_args.out,
                        "also write the JSON report to this file");

  SuiteArgs suite_args;
  CLI::App* suite_cmd = app.add_subcommand(
      "suite",
      "full verification suite: both counter-example demonstrations plus a "
      "default full-catalogue sweep");
  suite_cmd->add_flag("--paper", suite_args.paper,
                      "run the standard suite (both demonstrations, 500 "
                      "trials over the whole catalogue)")
      ->required();
  suite_cmd->add_option("--trials", suite_args.trials,
                        "instances per (n, alpha) cell");
  suite_cmd->add_option("--seed", suite_args.seed, "master seed");
  suite_cmd->add_option(
      "--threads", suite_args.threads,
      "worker threads (0 = SECTORIX_THREADS env or hardware)");
  add_format_option(suite_cmd, suite_args.format);
  suite_cmd->add_option("--out", suite_args.out,
                        "JSON report destination (default report.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*angle_cmd) return cmd_angle(angle_args);
    if (*gen_cmd) return cmd_gen(gen_args);
    if (*mean_cmd) return cmd_mean(mean_args);
    if (*check_cmd) return cmd_check(check_args);
    if (*ce_cmd) return cmd_counterexample(ce_args);
    if (*sweep_cmd) return cmd_sweep(sweep_args);
    if (*suite_cmd) return cmd_suite(suite_args);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sectorix: %s\n", e.what());
    return 2;
  }
  return 2;
}
