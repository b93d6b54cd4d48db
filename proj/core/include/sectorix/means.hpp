#pragma once

// Weighted matrix means of accretive matrices and the scalar constants they
// are compared against. The geometric mean of accretive (not necessarily
// Hermitian) matrices is defined by the integral
//   A #_v B = (sin(v pi)/pi) * Int_0^inf t^{v-1} (A^{-1} + t B^{-1})^{-1} dt,
// evaluated under the substitution t = e^s by an adaptive trapezoid rule.
// For Hermitian positive definite inputs this coincides with the closed form
// A^{1/2} (A^{-1/2} B A^{-1/2})^v A^{1/2}, which is used as an oracle.

#include <vector>

#include "sectorix/cmat.hpp"

namespace sectorix {

// Controls for the trapezoid evaluation of the integral representation.
//   h_s:      initial grid step (halved until successive sums agree).
//   eps_tail: half-range grows until the estimated dropped tail is below
//             eps_tail times the accumulated norm, per weight.
//   s_max:    hard cap on the half-range; exceeding it raises
//             ConvergenceError (weights very close to 0 or 1 need ranges
//             growing like 1/min(v, 1-v)).
struct QuadControls {
  double h_s = 0.25;
  double eps_tail = 1e-12;
  double s_max = 1000.0;
};

// ((1-v) A^{-1} + v B^{-1})^{-1}. Requires accretive operands.
CMatrix harmonic_mean(const CMatrix& a, const CMatrix& b, double v);

// (1-v) A + v B.
CMatrix arithmetic_mean(const CMatrix& a, const CMatrix& b, double v);

// The integral-representation geometric mean for accretive operands.
// v within 1e-6 of an endpoint returns that operand exactly.
CMatrix geometric_mean_accretive(const CMatrix& a, const CMatrix& b, double v,
                                 const QuadControls& quad = {});

// Same integral, several weights in one pass: the per-node inversion is
// shared across all weights, so this is much cheaper than repeated
// single-weight calls. results[i] corresponds to vs[i].
std::vector<CMatrix> geometric_mean_accretive_multi(const CMatrix& a, const CMatrix& b,
                                                    const std::vector<double>& vs,
                                                    const QuadControls& quad = {});

// Closed form A^{1/2} (A^{-1/2} B A^{-1/2})^v A^{1/2} for Hermitian positive
// definite operands; exactly Hermitian output.
CMatrix geometric_mean_hpd(const CMatrix& a, const CMatrix& b, double v);

// K(h) = (h+1)^2 / (4h), defined for h > 0; K >= 1 and K(h) = K(1/h).
double kantorovich(double h);

// max{K(m)^2, K(M)^2} for 0 < m <= M.
double kappa(double m, double M);

}  // namespace sectorix
