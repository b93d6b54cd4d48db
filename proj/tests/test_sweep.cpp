#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "sectorix/rng.hpp"
#include "sectorix/sweep.hpp"

using namespace sectorix;

namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.n_values = {2, 3};
  cfg.alphas = {0.0, 0.7};
  cfg.trials = 3;
  cfg.seed = 91;
  return cfg;
}

bool same_rows(const Report& a, const Report& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    const ResultRow& x = a.rows[i];
    const ResultRow& y = b.rows[i];
    if (x.id != y.id || x.evals != y.evals || x.passes != y.passes ||
        x.vacuous != y.vacuous || x.worst_seed != y.worst_seed)
      return false;
    const bool xinf = x.evals == x.vacuous;
    if (!xinf && x.min_slack != y.min_slack) return false;  // bitwise
  }
  return true;
}

bool same_violations(const std::vector<Violation>& a,
                     const std::vector<Violation>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].id != b[i].id || a[i].seed != b[i].seed ||
        a[i].slack != b[i].slack || a[i].n != b[i].n)
      return false;
  return true;
}

const ResultRow& row_of(const Report& r, const std::string& id) {
  for (const ResultRow& row : r.rows)
    if (row.id == id) return row;
  REQUIRE_MESSAGE(false, "missing row ", id);
  static ResultRow dummy;
  return dummy;
}

}  // namespace

TEST_CASE("config validation") {
  SweepConfig cfg = small_config();
  cfg.trials = 0;
  CHECK_THROWS_AS(sweep(cfg), InvalidInput);
  cfg = small_config();
  cfg.tol = 0.0;
  CHECK_THROWS_AS(sweep(cfg), InvalidInput);
  cfg = small_config();
  cfg.alphas = {1.6};  // >= pi/2
  CHECK_THROWS_AS(sweep(cfg), InvalidInput);
  cfg = small_config();
  cfg.n_values.clear();
  CHECK_THROWS_AS(sweep(cfg), InvalidInput);
  cfg = small_config();
  cfg.ids = {"NOPE"};
  CHECK_THROWS_AS(sweep(cfg), InvalidInput);
  cfg = small_config();
  cfg.map_arities = {0};
  CHECK_THROWS_AS(sweep(cfg), InvalidInput);
  cfg = small_config();
  cfg.threads = -2;
  CHECK_THROWS_AS(sweep(cfg), InvalidInput);
}

TEST_CASE("row bookkeeping matches the grid shape") {
  SweepConfig cfg;
  cfg.ids = {"NF1"};
  cfg.n_values = {2};
  cfg.alphas = {0.4};
  cfg.v_grid = {0.0, 0.25, 0.5};
  cfg.trials = 5;
  cfg.seed = 7;
  const Report rep = sweep(cfg);
  REQUIRE(rep.rows.size() == 1);
  const ResultRow& row = rep.rows[0];
  CHECK(row.id == "NF1");
  CHECK(row.evals == 5 * 3);  // trials x weight grid
  CHECK(row.passes == row.evals);
  CHECK(row.vacuous == 0);
  CHECK(row.min_slack >= -1e-8);
  std::set<std::uint64_t> expected_seeds;
  for (std::uint64_t u = 0; u < 5; ++u)
    expected_seeds.insert(derive_seed(cfg.seed, u));
  CHECK(expected_seeds.count(row.worst_seed) == 1);
  CHECK(rep.failures.empty());

  // An out-of-range grid point turns vacuous without erroring.
  SweepConfig cfg2;
  cfg2.ids = {"GA1"};
  cfg2.n_values = {2};
  cfg2.alphas = {0.0};
  cfg2.r_grid = {1.0, 2.0, 2.5};
  cfg2.trials = 4;
  const Report rep2 = sweep(cfg2);
  const ResultRow& ga = rep2.rows[0];
  CHECK(ga.evals == 4 * 2 * 3);  // trials x k in 1..2 x exponent grid
  CHECK(ga.vacuous == 4 * 2 * 1);
  CHECK(ga.passes == ga.evals - ga.vacuous);
}

TEST_CASE("chain links and per-arity results aggregate under their own ids") {
  SweepConfig cfg = small_config();
  cfg.ids = {"SVHARM", "TMM", "D2255"};
  cfg.map_arities = {1, 2, 3};
  const Report rep = sweep(cfg);
  std::set<std::string> ids;
  for (const ResultRow& row : rep.rows) ids.insert(row.id);
  CHECK(ids == std::set<std::string>{"SVHARM.1", "SVHARM.2", "SVHARM.3",
                                     "TMM", "D2255.1", "D2255.2", "D2255.3"});
  // TMM is evaluated once per generated arity.
  CHECK(row_of(rep, "TMM").evals == row_of(rep, "D2255.1").evals * 3);
}

TEST_CASE("violated finding lands in findings, not failures") {
  SweepConfig cfg = small_config();
  cfg.ids = {"D2255"};
  const Report rep = sweep(cfg);
  CHECK(rep.failures.empty());
  // The middle determinant link uses a constant that is genuinely wrong for
  // any pair whose Hermitian parts have different determinants, so the
  // generated instances violate it.
  CHECK_FALSE(rep.findings.empty());
  for (const Violation& v : rep.findings) {
    CHECK(v.id == "D2255.2");
    CHECK(v.severity == Severity::finding);
    CHECK(v.slack < -cfg.tol);
    CHECK(v.n >= 2);
  }
  const ResultRow& mid = row_of(rep, "D2255.2");
  CHECK(mid.passes + static_cast<long long>(rep.findings.size()) == mid.evals);
  CHECK(row_of(rep, "D2255.1").passes == row_of(rep, "D2255.1").evals);
  CHECK(row_of(rep, "D2255.3").passes == row_of(rep, "D2255.3").evals);
}

TEST_CASE("identical configs give identical reports") {
  SweepConfig cfg = small_config();
  cfg.ids = {"GA1", "NF1", "D2255", "TMM", "RE1"};
  const Report a = sweep(cfg);
  const Report b = sweep(cfg);
  CHECK(same_rows(a, b));
  CHECK(same_violations(a.failures, b.failures));
  CHECK(same_violations(a.findings, b.findings));
  CHECK(a.config.seed == cfg.seed);

  SweepConfig shifted = cfg;
  shifted.seed = 92;
  const Report c = sweep(shifted);
  CHECK_FALSE(same_rows(a, c));  // seed moves every generated instance
}

TEST_CASE("reports are identical at any worker count") {
  SweepConfig cfg = small_config();
  cfg.ids = {"NF1", "SVHARM", "D2255", "GA2", "MF12"};
  cfg.trials = 4;
  cfg.threads = 1;
  const Report serial = sweep(cfg);
  cfg.threads = 3;
  const Report parallel = sweep(cfg);
  CHECK(same_rows(serial, parallel));
  CHECK(same_violations(serial.failures, parallel.failures));
  CHECK(same_violations(serial.findings, parallel.findings));

  // threads = 0 defers to SECTORIX_THREADS.
  setenv("SECTORIX_THREADS", "2", 1);
  cfg.threads = 0;
  const Report via_env = sweep(cfg);
  unsetenv("SECTORIX_THREADS");
  CHECK(same_rows(serial, via_env));
}

TEST_CASE("full-catalogue mini sweep is sound") {
  SweepConfig cfg = small_config();  // ids empty: whole catalogue
  const Report rep = sweep(cfg);
  CHECK(rep.failures.empty());
  CHECK(rep.rows.size() > 55);  // every link and map check shows up
  for (const ResultRow& row : rep.rows) {
    CHECK(row.evals > 0);
    CHECK(row.passes + row.vacuous <= row.evals);
    if (row.vacuous < row.evals) CHECK(row.min_slack < 1e300);
  }
  // Generated instances satisfy every hypothesis.
  for (const ResultRow& row : rep.rows) CHECK(row.vacuous == 0);

  // {"all"} resolves to the same catalogue.
  SweepConfig all_cfg = cfg;
  all_cfg.ids = {"all"};
  CHECK(same_rows(rep, sweep(all_cfg)));
}
