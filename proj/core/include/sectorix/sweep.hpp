#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sectorix/checks.hpp"

namespace sectorix {

// Grid sweep over generated instances. One "cell" is an (n, alpha) pair;
// each cell runs `trials` independently seeded instances, and every
// requested check id is evaluated on each instance over the full parameter
// grids its catalogue entry consumes (all k in 1..n, the weight / exponent /
// function grids below, one result per generated map arity).
struct SweepConfig {
  std::vector<std::string> ids;  // empty or {"all"}: the whole catalogue

  std::vector<int> n_values{2, 3, 4, 5, 6};
  std::vector<double> alphas{0.0, 0.5235987755982988, 0.7853981633974483,
                             1.0471975511965976};  // 0, pi/6, pi/4, pi/3
  std::vector<double> v_grid{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> r_grid{1.0, 1.5, 2.0};
  std::vector<double> p_grid{0.5, 1.0, 2.0, 3.0};
  std::vector<std::string> f_names{"t", "sqrt", "t/(1+t)", "log1p"};

  int trials = 500;  // instances per cell; must be >= 1
  std::uint64_t seed = 0;
  double tol = 1e-8;  // must be > 0
  double cond_x = 10.0;
  std::vector<int> map_arities{1, 2};
  int map_l = 0;  // 0: generator picks the output dimension
  // Worker threads; 0 defers to SECTORIX_THREADS (0 or unset = one per core).
  int threads = 0;
  QuadControls quad{};
};

// Aggregate for one emitted result id (chain links and per-arity results
// aggregate under their own ids). `evals` counts grid evaluations, not
// instances; passes counts non-vacuous holds, so evals - passes - vacuous
// is the number of violations (genuine failures plus violated findings).
struct ResultRow {
  std::string id;
  long long evals = 0;
  long long passes = 0;
  long long vacuous = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::uint64_t worst_seed = 0;  // instance seed attaining min_slack
};

// One violated evaluation, with enough context to replay it.
struct Violation {
  std::string id;
  Severity severity = Severity::proven;
  int n = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;  // instance seed (also CheckResult::witness)
  double slack = 0.0;
  UsedParams params;
};

struct Report {
  SweepConfig config;
  std::vector<ResultRow> rows;       // sorted by id
  std::vector<Violation> failures;   // severity proven: genuine violations
  std::vector<Violation> findings;   // severity finding: reported, not fatal
};

// Runs the sweep. Deterministic: instance seeds derive from (config.seed,
// global trial index), aggregation is min/count reductions with a
// smaller-seed tie break, and violation lists are ordered by evaluation
// index — so identical configs produce identical reports at any thread
// count. Throws InvalidInput on unknown ids or out-of-range config fields.
Report sweep(const SweepConfig& config);

}  // namespace sectorix
