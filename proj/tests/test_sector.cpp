#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "sectorix/cmat.hpp"
#include "sectorix/rng.hpp"
#include "sectorix/sector.hpp"

using namespace sectorix;

namespace {
constexpr double kPi = 3.14159265358979323846;

CMatrix diag_phase(std::initializer_list<double> angles) {
  const int n = static_cast<int>(angles.size());
  CMatrix m(n);
  int i = 0;
  for (double t : angles) {
    m(i, i) = std::polar(1.0, t);
    ++i;
  }
  return m;
}
}  // namespace

TEST_CASE("accretivity classification") {
  const auto r1 = is_accretive(CMatrix::identity(3));
  CHECK(r1.accretive);
  CHECK(r1.margin == doctest::Approx(1.0));

  const auto r2 = is_accretive(-1.0 * CMatrix::identity(3));
  CHECK_FALSE(r2.accretive);
  CHECK(r2.margin == doctest::Approx(-1.0));

  // Skew case: margin is zero, which does not clear the strict threshold.
  const auto r3 = is_accretive(cd(0, 1) * CMatrix::identity(2));
  CHECK_FALSE(r3.accretive);
  CHECK(std::abs(r3.margin) < 1e-14);
}

TEST_CASE("sector angle of fixed matrices") {
  CHECK(sector_angle(CMatrix::identity(4)) == doctest::Approx(0.0).epsilon(1e-9));

  // Hermitian positive definite input certifies angle exactly zero.
  Rng rng(5);
  CMatrix hpd = random_hermitian(3, rng);
  hpd = hpd * hpd.adjoint() + 0.3 * CMatrix::identity(3);
  CHECK(sector_angle(re_part(hpd)) == 0.0);

  // Normal matrix with eigenvalue arguments +-pi/6: the numerical range is
  // the segment between the eigenvalues, so the angle is pi/6.
  CHECK(sector_angle(diag_phase({kPi / 6, -kPi / 6})) == doctest::Approx(kPi / 6).epsilon(1e-8));

  // One-sided spectrum: arguments {pi/4, pi/8, 0} give angle pi/4.
  CHECK(sector_angle(diag_phase({kPi / 4, kPi / 8, 0.0})) == doctest::Approx(kPi / 4).epsilon(1e-8));

  // 1x1: the angle is the argument.
  CHECK(sector_angle(CMatrix::from_rows({{std::polar(2.0, 0.3)}})) ==
        doctest::Approx(0.3).epsilon(1e-8));

  CHECK_THROWS_AS(sector_angle(-1.0 * CMatrix::identity(2)), InvalidInput);
  CHECK_THROWS_AS(sector_angle(CMatrix::from_real({{0, 1}, {1, 0}})), InvalidInput);
}

TEST_CASE("bisection agrees with the dense grid scan") {
  int idx = 0;
  for (double alpha0 : {kPi / 6, kPi / 4, kPi / 3}) {
    for (int n : {2, 3, 5}) {
      for (int rep = 0; rep < 5; ++rep) {
        SectorGenSpec spec;
        spec.n = n;
        spec.alpha_max = alpha0;
        spec.cond_x = 5.0;
        spec.seed = derive_seed(20240601, static_cast<uint64_t>(idx++));
        spec.force_extremal = true;
        const SectorCertificate cert = gen_sector(spec);
        const double grid = sector_angle_grid(cert.a, 10000);
        CHECK(std::abs(cert.alpha - grid) < 1e-6);
      }
    }
  }
}

TEST_CASE("generated sector matrices honor the requested angle") {
  int idx = 0;
  for (double alpha0 : {0.0, kPi / 6, kPi / 3}) {
    for (int n : {1, 2, 4, 6}) {
      SectorGenSpec spec;
      spec.n = n;
      spec.alpha_max = alpha0;
      spec.cond_x = 10.0;
      spec.seed = derive_seed(977, static_cast<uint64_t>(idx++));
      const SectorCertificate cert = gen_sector(spec);

      CHECK(cert.alpha <= alpha0 + 1e-8);
      CHECK(cert.m > 0.0);
      CHECK(cert.M >= cert.m);
      CHECK(cert.h == cert.M / cert.m);
      CHECK(is_accretive(cert.a).accretive);

      // Cone membership at the certified angle.
      const CMatrix re = re_part(cert.a);
      const CMatrix im = im_part(cert.a);
      const double rot = kPi / 2.0 - cert.alpha;
      for (int side : {+1, -1}) {
        CMatrix r = std::cos(rot) * re;
        r -= (side * std::sin(rot)) * im;
        CHECK(herm_eigen_min(r) >= -1e-10 * std::max(1.0, frob_norm(cert.a)));
      }
    }
  }
}

TEST_CASE("generator pieces reconstruct the matrix") {
  SectorGenSpec spec;
  spec.n = 4;
  spec.alpha_max = kPi / 4;
  spec.cond_x = 7.0;
  spec.seed = 31337;
  const SectorGenParts parts = gen_sector_parts(spec);

  // A = X diag(e^{i theta}) X* rebuilt entry by entry.
  const int n = spec.n;
  CMatrix rebuilt(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cd s = 0.0;
      for (int k = 0; k < n; ++k)
        s += parts.x(i, k) * std::polar(1.0, parts.theta[k]) * std::conj(parts.x(j, k));
      rebuilt(i, j) = s;
    }
  CHECK(frob_norm(rebuilt - parts.a) < 1e-12 * std::max(1.0, frob_norm(parts.a)));

  // Hermitian part is X diag(cos theta) X*, positive definite.
  CMatrix re_built(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cd s = 0.0;
      for (int k = 0; k < n; ++k)
        s += parts.x(i, k) * std::cos(parts.theta[k]) * std::conj(parts.x(j, k));
      re_built(i, j) = s;
    }
  CHECK(frob_norm(re_built - re_part(parts.a)) < 1e-12 * std::max(1.0, frob_norm(parts.a)));
  CHECK(herm_eigen_min(re_part(parts.a)) > 0.0);

  // theta respects the bound, with one extremal entry.
  double max_theta = 0.0;
  for (double t : parts.theta) {
    CHECK(std::abs(t) <= spec.alpha_max);
    max_theta = std::max(max_theta, std::abs(t));
  }
  CHECK(max_theta == doctest::Approx(spec.alpha_max));

  // cond(X) <= cond_x by construction.
  const auto sv = singular_values(parts.x);
  CHECK(sv.values.front() / sv.values.back() <= spec.cond_x + 1e-9);
}

TEST_CASE("normal instances certify the angle exactly") {
  int idx = 0;
  for (double alpha0 : {kPi / 6, kPi / 4, kPi / 3}) {
    for (int rep = 0; rep < 10; ++rep) {
      SectorGenSpec spec;
      spec.n = 2 + rep % 5;
      spec.alpha_max = alpha0;
      spec.cond_x = 1.0;  // X unitary: the instance is normal
      spec.seed = derive_seed(555, static_cast<uint64_t>(idx++));
      spec.force_extremal = true;
      const SectorCertificate cert = gen_sector(spec);
      CHECK(std::abs(cert.alpha - alpha0) < 1e-8);
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  SectorGenSpec spec;
  spec.n = 5;
  spec.alpha_max = kPi / 3;
  spec.cond_x = 10.0;
  spec.seed = 424242;
  const SectorCertificate c1 = gen_sector(spec);
  const SectorCertificate c2 = gen_sector(spec);
  CHECK(frob_norm(c1.a - c2.a) == 0.0);
  CHECK(c1.alpha == c2.alpha);

  spec.seed = 424243;
  const SectorCertificate c3 = gen_sector(spec);
  CHECK(frob_norm(c1.a - c3.a) > 0.0);
}

TEST_CASE("alpha_max zero degenerates to positive definite output") {
  SectorGenSpec spec;
  spec.n = 4;
  spec.alpha_max = 0.0;
  spec.cond_x = 3.0;
  spec.seed = 99;
  const SectorCertificate cert = gen_sector(spec);
  CHECK(frob_norm(im_part(cert.a)) < 1e-12 * frob_norm(cert.a));
  CHECK(cert.alpha == 0.0);
  CHECK(cert.m > 0.0);
}

TEST_CASE("sums and inverses stay in the certified cone") {
  int idx = 0;
  for (int rep = 0; rep < 10; ++rep) {
    SectorGenSpec spec;
    spec.n = 2 + rep % 4;
    spec.alpha_max = kPi / 4;
    spec.cond_x = 8.0;
    spec.seed = derive_seed(7171, static_cast<uint64_t>(idx++));
    const SectorCertificate ca = gen_sector(spec);
    spec.seed = derive_seed(7171, static_cast<uint64_t>(idx++));
    const SectorCertificate cb = gen_sector(spec);
    const double alpha = std::max(ca.alpha, cb.alpha);

    CHECK(sector_angle(ca.a + cb.a) <= alpha + 1e-8);
    CHECK(sector_angle(inverse(ca.a)) <= ca.alpha + 1e-8);
  }
}

TEST_CASE("numerical range boundary samples") {
  // Identity: every sample is 1.
  for (const cd& z : nr_boundary(CMatrix::identity(3), 16)) {
    CHECK(z.real() == doctest::Approx(1.0));
    CHECK(z.imag() == doctest::Approx(0.0));
  }

  // Normal diag(1, i): the range is the segment joining 1 and i, on which
  // re + im = 1 identically.
  const CMatrix d = CMatrix::from_rows({{cd(1, 0), cd(0, 0)}, {cd(0, 0), cd(0, 1)}});
  for (const cd& z : nr_boundary(d, 64)) {
    CHECK(z.real() + z.imag() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(z.real() >= -1e-12);
    CHECK(z.real() <= 1.0 + 1e-12);
  }

  CHECK_THROWS_AS(nr_boundary(CMatrix::identity(2), 2), InvalidInput);

  // Cone soundness: every boundary sample of a certified matrix respects the
  // certified angle.
  int idx = 0;
  for (double alpha0 : {kPi / 6, kPi / 3}) {
    SectorGenSpec spec;
    spec.n = 4;
    spec.alpha_max = alpha0;
    spec.cond_x = 6.0;
    spec.seed = derive_seed(8811, static_cast<uint64_t>(idx++));
    const SectorCertificate cert = gen_sector(spec);
    const double scale = frob_norm(cert.a);
    for (const cd& z : nr_boundary(cert.a, 256)) {
      CHECK(z.real() >= -1e-8 * scale);
      CHECK(std::abs(z.imag()) <= std::tan(cert.alpha) * z.real() + 1e-6 * scale);
    }
  }
}

TEST_CASE("random positive definite matrices with pinned spectrum bounds") {
  CHECK(frob_norm(gen_hpd(3, 1.0, 1.0, 7) - CMatrix::identity(3)) == 0.0);

  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const double m = 0.5 + 0.1 * static_cast<double>(seed % 3);
    const double M = m * (1.0 + static_cast<double>(seed % 7));
    const CMatrix h = gen_hpd(n, m, M, derive_seed(3100, seed));

    CHECK(frob_norm(h - h.adjoint()) == 0.0);
    const auto ev = herm_eigenvalues(h);
    CHECK(ev.front() == doctest::Approx(M).epsilon(1e-10));
    CHECK(ev.back() == doctest::Approx(m).epsilon(1e-10));
    for (double v : ev) {
      CHECK(v >= m - 1e-10 * M);
      CHECK(v <= M + 1e-10 * M);
    }
  }

  // Determinism.
  CHECK(frob_norm(gen_hpd(4, 1, 10, 55) - gen_hpd(4, 1, 10, 55)) == 0.0);
  CHECK_THROWS_AS(gen_hpd(3, 0.0, 1.0, 1), InvalidInput);
  CHECK_THROWS_AS(gen_hpd(3, 2.0, 1.0, 1), InvalidInput);
  CHECK_THROWS_AS(gen_hpd(1, 1.0, 2.0, 1), InvalidInput);
}

TEST_CASE("haar unitary sampling") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const int n = 2 + static_cast<int>(seed % 5);
    const CMatrix u = haar_unitary(n, rng);
    CHECK(frob_norm(u.adjoint() * u - CMatrix::identity(n)) < 1e-12 * n);
    CHECK(std::abs(std::abs(det(u)) - 1.0) < 1e-12);
  }
}
