#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "sectorix/cmat.hpp"
#include "sectorix/means.hpp"
#include "sectorix/rng.hpp"
#include "sectorix/sector.hpp"

using namespace sectorix;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_err(const CMatrix& x, const CMatrix& y) {
  return frob_norm(x - y) / std::max(1.0, frob_norm(y));
}

SectorCertificate make_sector(int n, double alpha, uint64_t seed, double cond = 5.0) {
  SectorGenSpec spec;
  spec.n = n;
  spec.alpha_max = alpha;
  spec.cond_x = cond;
  spec.seed = seed;
  return gen_sector(spec);
}

// Independent oracle for the balanced-weight mean: the specialized formula
// (2/pi) Int_0^inf (t A^{-1} + t^{-1} B^{-1})^{-1} dt/t, evaluated by a plain
// fixed-grid trapezoid after t = e^u.
CMatrix balanced_mean_oracle(const CMatrix& a, const CMatrix& b) {
  const CMatrix ainv = inverse(a);
  const CMatrix binv = inverse(b);
  const int n = a.dim();
  CMatrix acc(n);
  const double h = 0.05;
  for (double u = -30.0; u <= 30.0; u += h) {
    const double ep = std::exp(u), em = std::exp(-u);
    CMatrix m = ep * ainv;
    m += em * binv;
    acc += inverse(m);
  }
  return (2.0 / kPi * h) * acc;
}
}  // namespace

TEST_CASE("harmonic mean") {
  Rng rng(11);
  const CMatrix h = gen_hpd(3, 1.0, 4.0, 17);
  CHECK(rel_err(harmonic_mean(h, h, 0.3), h) < 1e-12);
  CHECK(rel_err(harmonic_mean(h, h, 0.0), h) == 0.0);

  const CMatrix d1 = CMatrix::from_real({{1, 0}, {0, 4}});
  const CMatrix d2 = CMatrix::from_real({{4, 0}, {0, 1}});
  const CMatrix hm = harmonic_mean(d1, d2, 0.5);
  CHECK(hm(0, 0).real() == doctest::Approx(1.6));  // 2*1*4/(1+4)
  CHECK(hm(1, 1).real() == doctest::Approx(1.6));

  CHECK_THROWS_AS(harmonic_mean(-1.0 * d1, d2, 0.5), InvalidInput);
  CHECK_THROWS_AS(harmonic_mean(d1, d2, 1.5), InvalidInput);
  CHECK_THROWS_AS(harmonic_mean(d1, CMatrix::identity(3), 0.5), InvalidInput);
}

TEST_CASE("arithmetic mean") {
  const CMatrix d1 = CMatrix::from_real({{1, 0}, {0, 4}});
  const CMatrix d2 = CMatrix::from_real({{4, 0}, {0, 1}});
  const CMatrix am = arithmetic_mean(d1, d2, 0.5);
  CHECK(am(0, 0).real() == doctest::Approx(2.5));
  CHECK(am(1, 1).real() == doctest::Approx(2.5));
  CHECK(rel_err(arithmetic_mean(d1, d2, 0.0), d1) == 0.0);
  CHECK(rel_err(arithmetic_mean(d1, d2, 1.0), d2) == 0.0);

  // The Hermitian part commutes with the weighted sum.
  Rng rng(21);
  const CMatrix a = ginibre(3, rng);
  const CMatrix b = ginibre(3, rng);
  CHECK(rel_err(re_part(arithmetic_mean(a, b, 0.3)),
                arithmetic_mean(re_part(a), re_part(b), 0.3)) < 1e-14);
}

TEST_CASE("kantorovich constant") {
  CHECK(kantorovich(1.0) == 1.0);
  CHECK(kantorovich(4.0) == doctest::Approx(1.5625));
  CHECK_THROWS_AS(kantorovich(0.0), InvalidInput);
  CHECK_THROWS_AS(kantorovich(-1.0), InvalidInput);

  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const double h = std::exp(rng.uniform(-4.0, 4.0));
    const double k1 = kantorovich(h);
    const double k2 = kantorovich(1.0 / h);
    CHECK(k1 >= 1.0);
    CHECK(std::abs(k1 - k2) <= 1e-14 * k1);
  }
}

TEST_CASE("kappa constant") {
  CHECK(kappa(1.0, 1.0) == 1.0);
  CHECK(kappa(0.5, 2.0) == doctest::Approx(81.0 / 64.0));
  CHECK_THROWS_AS(kappa(0.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(kappa(2.0, 1.0), InvalidInput);

  Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const double m = std::exp(rng.uniform(-2.0, 1.0));
    const double M = m * std::exp(rng.uniform(0.0, 2.0));
    const double km = kantorovich(m), kM = kantorovich(M);
    CHECK(kappa(m, M) == doctest::Approx(std::max(km * km, kM * kM)));
  }
}

TEST_CASE("closed-form geometric mean on positive definite inputs") {
  const CMatrix id = CMatrix::identity(3);
  CHECK(rel_err(geometric_mean_hpd(id, id, 0.37), id) < 1e-14);

  const CMatrix d1 = CMatrix::from_real({{1, 0}, {0, 4}});
  const CMatrix d2 = CMatrix::from_real({{4, 0}, {0, 1}});
  const CMatrix gm = geometric_mean_hpd(d1, d2, 0.5);
  CHECK(gm(0, 0).real() == doctest::Approx(2.0));
  CHECK(gm(1, 1).real() == doctest::Approx(2.0));
  CHECK(std::abs(gm(0, 1)) < 1e-13);

  CHECK(rel_err(geometric_mean_hpd(d1, d2, 0.0), d1) == 0.0);
  CHECK(rel_err(geometric_mean_hpd(d1, d2, 1.0), d2) == 0.0);

  // Commuting case: A^{1-v} B^v.
  const CMatrix gm2 = geometric_mean_hpd(d1, d2, 0.25);
  CHECK(gm2(0, 0).real() == doctest::Approx(std::pow(1.0, 0.75) * std::pow(4.0, 0.25)));
  CHECK(gm2(1, 1).real() == doctest::Approx(std::pow(4.0, 0.75) * std::pow(1.0, 0.25)));

  CHECK_THROWS_AS(geometric_mean_hpd(CMatrix::from_real({{-1, 0}, {0, 1}}), d2, 0.5),
                  NumericalError);
  CHECK_THROWS_AS(
      geometric_mean_hpd(CMatrix::from_rows({{cd(1, 0), cd(0, 1)}, {cd(0, 1), cd(1, 0)}}), d2, 0.5),
      InvalidInput);

  // 1x1 scalar reduction for all three means.
  const CMatrix sa = CMatrix::from_real({{2.0}});
  const CMatrix sb = CMatrix::from_real({{5.0}});
  const double v = 0.3;
  CHECK(geometric_mean_hpd(sa, sb, v)(0, 0).real() ==
        doctest::Approx(std::pow(2.0, 0.7) * std::pow(5.0, 0.3)).epsilon(1e-12));
  CHECK(harmonic_mean(sa, sb, v)(0, 0).real() ==
        doctest::Approx(1.0 / (0.7 / 2.0 + 0.3 / 5.0)).epsilon(1e-12));
  CHECK(arithmetic_mean(sa, sb, v)(0, 0).real() == doctest::Approx(0.7 * 2.0 + 0.3 * 5.0));

  // Congruence equivariance.
  Rng rng(51);
  for (int rep = 0; rep < 10; ++rep) {
    const CMatrix a = gen_hpd(3, 0.5, 3.0, derive_seed(600, rep));
    const CMatrix b = gen_hpd(3, 0.2, 5.0, derive_seed(601, rep));
    CMatrix t = ginibre(3, rng);
    t += 2.5 * CMatrix::identity(3);
    const CMatrix lhs = re_part(t.adjoint() * geometric_mean_hpd(a, b, 0.3) * t);
    const CMatrix rhs = geometric_mean_hpd(re_part(t.adjoint() * a * t),
                                           re_part(t.adjoint() * b * t), 0.3);
    CHECK(rel_err(lhs, rhs) < 1e-8);
  }

  // Ordering: harmonic <= geometric <= arithmetic.
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + rep % 5;
    const CMatrix a = gen_hpd(n, 0.3, 4.0, derive_seed(700, rep));
    const CMatrix b = gen_hpd(n, 0.6, 9.0, derive_seed(701, rep));
    for (double v : {0.25, 0.5, 0.75}) {
      const CMatrix hm = harmonic_mean(a, b, v);
      const CMatrix gm3 = geometric_mean_hpd(a, b, v);
      const CMatrix am = arithmetic_mean(a, b, v);
      CHECK(loewner_leq(re_part(hm), gm3, 1e-10).holds);
      CHECK(loewner_leq(gm3, am, 1e-10).holds);
    }
  }
}

TEST_CASE("integral representation agrees with the closed form") {
  // Seeded positive definite pairs with condition numbers up to 1e3.
  for (uint64_t rep = 0; rep < 40; ++rep) {
    const int n = 2 + static_cast<int>(rep % 5);
    const double cond_a = std::pow(10.0, static_cast<double>(rep % 4));  // 1..1e3
    const CMatrix a = gen_hpd(n, 1.0 / std::sqrt(cond_a), std::sqrt(cond_a), derive_seed(800, rep));
    const CMatrix b = gen_hpd(n, 0.3, 2.7, derive_seed(801, rep));
    const std::vector<double> vs{0.0, 0.25, 0.5, 0.75, 1.0};
    const auto means = geometric_mean_accretive_multi(a, b, vs);
    CHECK(rel_err(means[0], a) == 0.0);
    CHECK(rel_err(means[4], b) == 0.0);
    for (size_t i = 1; i + 1 < vs.size(); ++i) {
      const CMatrix closed = geometric_mean_hpd(a, b, vs[i]);
      CHECK(rel_err(means[i], closed) < 1e-8);
    }
  }

  // Single-weight call goes through the same path.
  const CMatrix a = gen_hpd(3, 0.5, 5.0, 1234);
  const CMatrix b = gen_hpd(3, 0.4, 3.0, 1235);
  CHECK(rel_err(geometric_mean_accretive(a, b, 0.3),
                geometric_mean_accretive_multi(a, b, {0.3})[0]) == 0.0);
  CHECK(rel_err(geometric_mean_accretive(a, b, 0.3), geometric_mean_hpd(a, b, 0.3)) < 1e-8);
}

TEST_CASE("integral mean of sector operands") {
  // Weight symmetry A #_v B = B #_{1-v} A exercises the two half-lines of
  // the quadrature against each other.
  for (uint64_t rep = 0; rep < 8; ++rep) {
    const int n = 2 + static_cast<int>(rep % 3);
    const CMatrix a = make_sector(n, kPi / 3, derive_seed(900, rep)).a;
    const CMatrix b = make_sector(n, kPi / 4, derive_seed(901, rep)).a;
    for (double v : {0.25, 0.5}) {
      CHECK(rel_err(geometric_mean_accretive(a, b, v), geometric_mean_accretive(b, a, 1.0 - v)) <
            1e-9);
    }
  }

  // Congruence equivariance holds exactly for the integral, so the two
  // quadrature results must agree to quadrature accuracy.
  Rng rng(61);
  for (uint64_t rep = 0; rep < 5; ++rep) {
    const CMatrix a = make_sector(3, kPi / 4, derive_seed(910, rep)).a;
    const CMatrix b = make_sector(3, kPi / 6, derive_seed(911, rep)).a;
    CMatrix t = ginibre(3, rng);
    t += 2.5 * CMatrix::identity(3);
    const CMatrix lhs = t.adjoint() * geometric_mean_accretive(a, b, 0.25) * t;
    const CMatrix rhs = geometric_mean_accretive(t.adjoint() * a * t, t.adjoint() * b * t, 0.25);
    CHECK(rel_err(lhs, rhs) < 1e-8);
  }

  // Balanced weight agrees with the specialized two-sided formula.
  for (uint64_t rep = 0; rep < 5; ++rep) {
    const CMatrix a = make_sector(3, kPi / 3, derive_seed(920, rep)).a;
    const CMatrix b = make_sector(3, kPi / 3, derive_seed(921, rep)).a;
    CHECK(rel_err(geometric_mean_accretive(a, b, 0.5), balanced_mean_oracle(a, b)) < 1e-8);
  }

  // The Hermitian part of the mean of accretive operands stays positive
  // definite (the integrand's Hermitian part is positive definite).
  const CMatrix s1 = make_sector(4, kPi / 3, 424299).a;
  const CMatrix s2 = make_sector(4, kPi / 3, 424300).a;
  for (double v : {0.25, 0.5, 0.75})
    CHECK(herm_eigen_min(re_part(geometric_mean_accretive(s1, s2, v))) > 0.0);

  CHECK_THROWS_AS(geometric_mean_accretive(-1.0 * CMatrix::identity(2), CMatrix::identity(2), 0.5),
                  InvalidInput);
}

TEST_CASE("quadrature control validation and limits") {
  const CMatrix a = gen_hpd(2, 0.5, 2.0, 42);
  const CMatrix b = gen_hpd(2, 0.5, 2.0, 43);

  QuadControls bad;
  bad.h_s = 0.0;
  CHECK_THROWS_AS(geometric_mean_accretive(a, b, 0.5, bad), InvalidInput);
  bad = {};
  bad.eps_tail = 1e-3;
  CHECK_THROWS_AS(geometric_mean_accretive(a, b, 0.5, bad), InvalidInput);
  bad = {};
  bad.s_max = 5.0;  // cannot reach the tail threshold
  CHECK_THROWS_AS(geometric_mean_accretive(a, b, 0.25, bad), ConvergenceError);

  // Endpoint short-circuit band.
  CHECK(rel_err(geometric_mean_accretive(a, b, 1e-9), a) == 0.0);
  CHECK(rel_err(geometric_mean_accretive(a, b, 1.0 - 1e-9), b) == 0.0);
}
