#pragma once

// Accretive/sector classification and certification. A matrix is accretive
// when its Hermitian part is positive definite; it is a sector matrix with
// angle alpha when its numerical range lies in the closed cone
// {z : Re z > 0, |Im z| <= tan(alpha) Re z}. The certified angle is computed
// from the two-half-plane criterion: W(A) fits in the alpha-cone iff both
// rotations e^{+-i(pi/2-alpha)}A still have positive semidefinite Hermitian
// part. This module also hosts the seeded random instance builders used by
// the test sweeps.

#include <vector>

#include "sectorix/cmat.hpp"
#include "sectorix/rng.hpp"

namespace sectorix {

// A certified sector matrix: alpha is the minimal angle (to 1e-10 rad) whose
// cone contains the numerical range, m/M are the spectral bounds of the
// Hermitian part, h = M/m.
struct SectorCertificate {
  CMatrix a;
  double alpha = 0.0;
  double m = 0.0;
  double M = 0.0;
  double h = 1.0;
};

// Recipe for a random sector matrix A = X diag(e^{i theta_j}) X* with
// |theta_j| <= alpha_max and cond(X) <= cond_x.
struct SectorGenSpec {
  int n = 2;
  double alpha_max = 0.0;
  double cond_x = 1.0;
  uint64_t seed = 0;
  bool force_extremal = true;
};

struct AccretiveResult {
  bool accretive;
  double margin;  // lambda_min of the Hermitian part
};

// margin = lambda_min(re_part(a)); accretive iff margin > tol.
AccretiveResult is_accretive(const CMatrix& a, double tol = 0.0);

// Minimal certified sector angle, by per-side bisection on
// f_s(beta) = lambda_min(re_part(e^{s i beta} A)) over beta in [0, pi/2]
// (the feasible beta-set of each side is an interval containing 0).
// Absolute tolerance 1e-10 rad. Throws InvalidInput when not accretive.
double sector_angle(const CMatrix& a);

// Independent cross-check: scan f_s on a uniform grid of num_angles points
// per side, then refine the sign-change bracket by bisection. Slower and
// used only as an oracle against sector_angle.
double sector_angle_grid(const CMatrix& a, int num_angles);

// Boundary samples of the numerical range: for each of num_angles directions
// theta, returns x* A x for a top eigenvector x of re_part(e^{-i theta} A).
// All returned points lie in W(A); their hull converges to it.
std::vector<cd> nr_boundary(const CMatrix& a, int num_angles);

// Certify a as a sector matrix: minimal angle plus Hermitian-part bounds.
SectorCertificate certify(const CMatrix& a);

// Exposed pieces of a generated instance, for reconstruction oracles.
struct SectorGenParts {
  CMatrix a;
  CMatrix x;                  // the congruence factor
  std::vector<double> theta;  // the eigen-arguments, |theta_j| <= alpha_max
};
SectorGenParts gen_sector_parts(const SectorGenSpec& spec);

// Generate and certify. The certificate's alpha is recomputed from the
// matrix and satisfies alpha <= alpha_max + 1e-8. Deterministic in the seed.
SectorCertificate gen_sector(const SectorGenSpec& spec);

// Random Hermitian positive definite matrix with spectrum in [m, M]; both
// endpoints are realized exactly (so M/m is the exact condition number).
// m == M returns m*I. Deterministic in the seed.
CMatrix gen_hpd(int n, double m, double M, uint64_t seed);

// Random-matrix builders shared by generators, sweeps, and tests.
CMatrix ginibre(int n, Rng& rng);          // iid standard complex Gaussian
CMatrix haar_unitary(int n, Rng& rng);     // QR of a Ginibre sample
CMatrix random_hermitian(int n, Rng& rng); // Gaussian Hermitian ensemble

}  // namespace sectorix
