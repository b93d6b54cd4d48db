#include "sectorix/sector.hpp"

#include <algorithm>
#include <cmath>

namespace sectorix {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAngleTol = 1e-10;

// Hermitian part of e^{s i beta} A as a combination of the parts of A:
// re_part(e^{i beta} A) = cos(beta) re_part(A) - sin(beta) im_part(A).
CMatrix rotated_re(const CMatrix& re, const CMatrix& im, double beta, int side) {
  CMatrix r = std::cos(beta) * re;
  r -= (side * std::sin(beta)) * im;
  return r;
}

double rotated_min_eig(const CMatrix& re, const CMatrix& im, double beta, int side) {
  return herm_eigen_min(rotated_re(re, im, beta, side));
}

// Largest feasible rotation of one side: the biggest beta in [0, pi/2] with
// lambda_min(re_part(e^{s i beta} A)) >= 0. Feasibility is an interval
// containing 0 (the set of half-planes through 0 containing a convex set is
// an arc), so bisection on the predicate is sound.
double max_feasible_rotation(const CMatrix& re, const CMatrix& im, int side) {
  if (rotated_min_eig(re, im, kPi / 2.0, side) >= 0.0) return kPi / 2.0;
  double lo = 0.0, hi = kPi / 2.0;
  while (hi - lo > kAngleTol) {
    const double mid = 0.5 * (lo + hi);
    if (rotated_min_eig(re, im, mid, side) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

AccretiveResult is_accretive(const CMatrix& a, double tol) {
  const double margin = herm_eigen_min(re_part(a));
  return {margin > tol, margin};
}

double sector_angle(const CMatrix& a) {
  const CMatrix re = re_part(a);
  const CMatrix im = im_part(a);
  if (herm_eigen_min(re) <= 0.0)
    throw InvalidInput("sector_angle: matrix is not accretive");
  const double beta_pos = max_feasible_rotation(re, im, +1);
  const double beta_neg = max_feasible_rotation(re, im, -1);
  return std::max({0.0, kPi / 2.0 - beta_pos, kPi / 2.0 - beta_neg});
}

double sector_angle_grid(const CMatrix& a, int num_angles) {
  if (num_angles < 2) throw InvalidInput("sector_angle_grid: need at least 2 angles");
  const CMatrix re = re_part(a);
  const CMatrix im = im_part(a);
  if (herm_eigen_min(re) <= 0.0)
    throw InvalidInput("sector_angle_grid: matrix is not accretive");

  double alpha = 0.0;
  for (int side : {+1, -1}) {
    double beta_star = kPi / 2.0;
    double prev = 0.0;
    bool bracketed = false;
    for (int k = 1; k <= num_angles; ++k) {
      const double beta = (kPi / 2.0) * k / num_angles;
      if (rotated_min_eig(re, im, beta, side) < 0.0) {
        // Sign change in [prev, beta]; refine by bisection within the cell.
        double lo = prev, hi = beta;
        for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (rotated_min_eig(re, im, mid, side) >= 0.0)
            lo = mid;
          else
            hi = mid;
        }
        beta_star = lo;
        bracketed = true;
        break;
      }
      prev = beta;
    }
    if (!bracketed) beta_star = kPi / 2.0;
    alpha = std::max(alpha, kPi / 2.0 - beta_star);
  }
  return alpha;
}

std::vector<cd> nr_boundary(const CMatrix& a, int num_angles) {
  if (num_angles < 3) throw InvalidInput("nr_boundary: need at least 3 angles");
  const int n = a.dim();
  const CMatrix re = re_part(a);
  const CMatrix im = im_part(a);
  std::vector<cd> pts;
  pts.reserve(num_angles);
  for (int t = 0; t < num_angles; ++t) {
    const double theta = 2.0 * kPi * t / num_angles;
    // re_part(e^{-i theta} A) = cos(theta) re + sin(theta) im.
    CMatrix dir = std::cos(theta) * re;
    dir += std::sin(theta) * im;
    const HermEigen e = herm_eigen(dir);
    // Top eigenvector supports W(A) in direction theta.
    cd val = 0.0;
    for (int i = 0; i < n; ++i) {
      cd row = 0.0;
      for (int j = 0; j < n; ++j) row += a(i, j) * e.vectors(j, 0);
      val += std::conj(e.vectors(i, 0)) * row;
    }
    pts.push_back(val);
  }
  return pts;
}

SectorCertificate certify(const CMatrix& a) {
  SectorCertificate cert;
  cert.a = a;
  cert.alpha = sector_angle(a);  // throws when not accretive
  const std::vector<double> ev = herm_eigenvalues(re_part(a));
  cert.m = ev.back();
  cert.M = ev.front();
  cert.h = cert.M / cert.m;
  return cert;
}

SectorGenParts gen_sector_parts(const SectorGenSpec& spec) {
  if (spec.n < 1) throw InvalidInput("gen_sector: n must be >= 1");
  if (!(spec.alpha_max >= 0.0) || spec.alpha_max >= kPi / 2.0)
    throw InvalidInput("gen_sector: alpha_max must lie in [0, pi/2)");
  if (!(spec.cond_x >= 1.0)) throw InvalidInput("gen_sector: cond_x must be >= 1");

  Rng rng(spec.seed);
  SectorGenParts parts;
  parts.theta.resize(spec.n);
  for (int j = 0; j < spec.n; ++j)
    parts.theta[j] = rng.uniform(-spec.alpha_max, spec.alpha_max);
  if (spec.force_extremal && spec.n >= 1)
    parts.theta[0] = rng.coin() ? spec.alpha_max : -spec.alpha_max;

  // X = Q (I + delta D): its singular values are exactly 1 + delta d_j, so
  // cond(X) <= 1 + delta = cond_x deterministically (no rejection loop).
  const CMatrix q = haar_unitary(spec.n, rng);
  const double delta = spec.cond_x - 1.0;
  std::vector<double> colscale(spec.n);
  for (int j = 0; j < spec.n; ++j) colscale[j] = 1.0 + delta * rng.uniform01();
  parts.x = CMatrix(spec.n);
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.n; ++j) parts.x(i, j) = q(i, j) * colscale[j];

  // A = X diag(e^{i theta}) X*.
  CMatrix zx(spec.n);  // diag(e^{i theta}) X*
  for (int i = 0; i < spec.n; ++i) {
    const cd z = std::polar(1.0, parts.theta[i]);
    for (int j = 0; j < spec.n; ++j) zx(i, j) = z * std::conj(parts.x(j, i));
  }
  parts.a = parts.x * zx;
  return parts;
}

SectorCertificate gen_sector(const SectorGenSpec& spec) {
  return certify(gen_sector_parts(spec).a);
}

CMatrix gen_hpd(int n, double m, double M, uint64_t seed) {
  if (!(m > 0.0) || !(M >= m)) throw InvalidInput("gen_hpd: need 0 < m <= M");
  if (n < 1) throw InvalidInput("gen_hpd: n must be >= 1");
  if (m == M) return m * CMatrix::identity(n);
  if (n == 1) throw InvalidInput("gen_hpd: n must be >= 2 when m < M");

  Rng rng(seed);
  std::vector<double> lambda(n);
  lambda[0] = M;
  lambda[n - 1] = m;
  for (int i = 1; i + 1 < n; ++i) lambda[i] = rng.uniform(m, M);
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());

  const CMatrix u = haar_unitary(n, rng);
  CMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      cd s = 0.0;
      for (int k = 0; k < n; ++k) s += lambda[k] * u(i, k) * std::conj(u(j, k));
      h(i, j) = s;
      h(j, i) = std::conj(s);
    }
  for (int i = 0; i < n; ++i) h(i, i) = h(i, i).real();
  return h;
}

CMatrix ginibre(int n, Rng& rng) {
  CMatrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.cnormal();
  return g;
}

CMatrix haar_unitary(int n, Rng& rng) {
  // Modified Gram-Schmidt QR of a Ginibre sample; the diagonal of R comes out
  // real positive, which makes Q Haar-distributed.
  CMatrix g = ginibre(n, rng);
  CMatrix q(n);
  for (int j = 0; j < n; ++j) {
    std::vector<cd> v(n);
    for (int i = 0; i < n; ++i) v[i] = g(i, j);
    for (int c = 0; c < j; ++c) {
      cd proj = 0.0;
      for (int i = 0; i < n; ++i) proj += std::conj(q(i, c)) * v[i];
      for (int i = 0; i < n; ++i) v[i] -= proj * q(i, c);
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(v[i]);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericalError("haar_unitary: degenerate sample");
    for (int i = 0; i < n; ++i) q(i, j) = v[i] / norm;
  }
  return q;
}

CMatrix random_hermitian(int n, Rng& rng) {
  CMatrix h(n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = rng.normal();
    for (int j = i + 1; j < n; ++j) {
      h(i, j) = rng.cnormal();
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

}  // namespace sectorix
