#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "sectorix/io.hpp"
#include "sectorix/sector.hpp"

using namespace sectorix;

TEST_CASE("17-digit formatting round-trips doubles exactly") {
  const double samples[] = {0.1,        1.0 / 3.0, 3.141592653589793,
                            -0.0,       1e-300,    6.02214076e23,
                            0.75,       -1e-8,     123456789.123456789};
  for (double x : samples) {
    const std::string s = fmt17(x);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(back == x);
  }
  CHECK(fmt17(0.75) == "0.75");
  CHECK(fmt6(3.141592653589793) == "3.14159");
}

TEST_CASE("matrix JSON round trip") {
  CMatrix a = CMatrix::from_rows({{cd(1.5, -0.25), cd(0, 2)},
                                  {cd(-3, 0.125), cd(1.0 / 3.0, -1e-9)}});
  const std::string text = matrix_to_json(a);
  const CMatrix b = matrix_from_json(text);
  REQUIRE(b.dim() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(b(i, j) == a(i, j));  // bitwise

  // Real matrices omit the imaginary block and parse back as exactly real.
  const CMatrix r = CMatrix::from_real({{1, 2}, {3, 4}});
  const std::string rtext = matrix_to_json(r);
  CHECK(rtext.find("\"im\"") == std::string::npos);
  const CMatrix r2 = matrix_from_json(rtext);
  CHECK(r2(1, 0) == cd(3.0, 0.0));
  CHECK(matrix_from_json("{\"n\":1,\"re\":[[2.5]]}")(0, 0) == cd(2.5, 0.0));
}

TEST_CASE("matrix JSON rejects malformed input with a field diagnostic") {
  const auto fails_with = [](const std::string& text, const char* needle) {
    try {
      matrix_from_json(text);
      FAIL_CHECK("expected InvalidInput for ", text);
    } catch (const InvalidInput& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                    "message '", std::string(e.what()), "' lacks '",
                    std::string(needle), "'");
    }
  };
  fails_with("not json", "malformed");
  fails_with("[1,2]", "object");
  fails_with("{\"re\":[[1]]}", "'n'");
  fails_with("{\"n\":0,\"re\":[]}", "'n'");
  fails_with("{\"n\":2,\"re\":[[1,2]]}", "'re'");
  fails_with("{\"n\":2,\"re\":[[1,2],[3]]}", "row 1");
  fails_with("{\"n\":1,\"re\":[[\"x\"]]}", "not a number");
  fails_with("{\"n\":1,\"re\":[[1]],\"im\":[[1,2]]}", "row 0");
  // Out-of-range literals are rejected by the parser itself.
  fails_with("{\"n\":1,\"re\":[[1e999]]}", "malformed");
}

TEST_CASE("matrix file I/O reports the path") {
  const char* path = "/tmp/sectorix_io_test_matrix.json";
  const CMatrix a = gen_hpd(3, 0.5, 2.0, 11);
  save_matrix(path, a);
  const CMatrix b = load_matrix(path);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(b(i, j) == a(i, j));
  std::remove(path);
  try {
    load_matrix("/tmp/definitely_missing_sectorix.json");
    FAIL_CHECK("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("definitely_missing_sectorix") !=
          std::string::npos);
  }
}

TEST_CASE("map spec JSON round trip regenerates the same map") {
  const MapSpec spec = gen_map(MapKind::tensor_compression, 2, 3, 2, 99);
  const MapSpec back = map_spec_from_json(map_spec_to_json(spec));
  CHECK(back.kind == spec.kind);
  CHECK(back.n == spec.n);
  CHECK(back.l == spec.l);
  CHECK(back.k == spec.k);
  CHECK(back.seed == spec.seed);
  const CMatrix x = gen_hpd(2, 1.0, 3.0, 5);
  const CMatrix y = gen_hpd(2, 0.5, 2.0, 6);
  const CMatrix via_spec = apply_map(spec, {x, y});
  const CMatrix via_back = apply_map(back, {x, y});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(via_spec(i, j) == via_back(i, j));

  CHECK_THROWS_AS(map_spec_from_json("{\"kind\":\"bogus\",\"n\":2,\"l\":1,"
                                     "\"k\":1,\"seed\":0}"),
                  InvalidInput);
  CHECK_THROWS_AS(map_spec_from_json("{\"n\":2}"), InvalidInput);
}

TEST_CASE("report emitters carry identical numbers in JSON and CSV") {
  SweepConfig cfg;
  cfg.ids = {"NF1", "D2255"};
  cfg.n_values = {2};
  cfg.alphas = {0.6};
  cfg.v_grid = {0.25, 0.75};
  cfg.trials = 3;
  cfg.seed = 17;
  const Report rep = sweep(cfg);
  const std::string js = report_to_json(rep);
  const std::string csv = report_to_csv(rep);

  for (const ResultRow& row : rep.rows) {
    const std::string token = fmt17(row.min_slack);
    CHECK(js.find(token) != std::string::npos);
    CHECK(csv.find(token) != std::string::npos);
    CHECK(js.find("\"id\":\"" + row.id + "\"") != std::string::npos);
  }
  // Row "trials" counts evaluations: 3 instances x 2 weights.
  CHECK(js.find("\"trials\":6") != std::string::npos);
  CHECK(js.find("\"seed\":17") != std::string::npos);
  for (const Violation& v : rep.findings) {
    CHECK(js.find(fmt17(v.slack)) != std::string::npos);
    CHECK(csv.find(fmt17(v.slack)) != std::string::npos);
  }
  // The worker-thread knob never reaches the report.
  CHECK(js.find("threads") == std::string::npos);

  const std::string human = report_to_human(rep);
  CHECK(human.find("genuine failures: 0") != std::string::npos);
  CHECK(human.find("NF1") != std::string::npos);
}

TEST_CASE("vacuous-only rows serialize min_slack as null") {
  SweepConfig cfg;
  cfg.ids = {"GA1"};
  cfg.n_values = {2};
  cfg.alphas = {0.0};
  cfg.r_grid = {2.5};  // vacuous everywhere
  cfg.trials = 2;
  const Report rep = sweep(cfg);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].vacuous == rep.rows[0].evals);
  const std::string js = report_to_json(rep);
  CHECK(js.find("\"min_slack\":null") != std::string::npos);
  const std::string csv = report_to_csv(rep);
  CHECK(csv.find("GA1,4,0,4,,") != std::string::npos);
}

TEST_CASE("single evaluation output formats") {
  const Instance eye =
      make_instance_from_pair(CMatrix::identity(3), CMatrix::identity(3));
  CheckParams p;
  p.k = 2;
  const auto results = evaluate("F6", eye, p);
  const std::string js = results_to_json(results);
  CHECK(js.find("\"id\":\"F6\"") != std::string::npos);
  CHECK(js.find("\"slack\":0.75") != std::string::npos);
  CHECK(js.find("\"holds\":true") != std::string::npos);
  CHECK(js.find("\"k\":2") != std::string::npos);
  const std::string csv = results_to_csv(results);
  CHECK(csv.find("F6,1,1,proven,0.75,") != std::string::npos);
  const std::string human = results_to_human(results);
  CHECK(human.find("pass") != std::string::npos);

  // Vacuous evaluations surface their reason in every format.
  CheckParams bad;
  bad.v = 2.0;
  const auto vac = evaluate("TXL", eye, bad);
  CHECK(results_to_json(vac).find("weight v outside [0, 1]") !=
        std::string::npos);
  CHECK(results_to_human(vac).find("VACUOUS") != std::string::npos);
}

TEST_CASE("counterexample output formats") {
  const CounterexampleResult ce = counterexample_sv();
  const std::string js = counterexample_to_json(ce);
  CHECK(js.find("\"violated\":true") != std::string::npos);
  CHECK(js.find(ce.first_label) != std::string::npos);
  CHECK(js.find("\"a\":{\"n\":3") != std::string::npos);
  const CMatrix a_back = matrix_from_json(
      js.substr(js.find("\"a\":") + 4, js.find(",\"b\":") - js.find("\"a\":") - 4));
  CHECK(a_back(2, 2) == ce.a(2, 2));
  const std::string csv = counterexample_to_csv(ce);
  CHECK(csv.find("violated,1") != std::string::npos);
  const std::string human = counterexample_to_human(ce);
  CHECK(human.find("VIOLATED") != std::string::npos);
  CHECK(human.find("3.07774") != std::string::npos);
}
