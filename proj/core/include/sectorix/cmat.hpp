#pragma once

// Dense complex matrices plus the spectral and factorization kernels the rest
// of the library is built on: Hermitian eigendecomposition (cyclic Jacobi),
// singular values, LU determinant/inverse, spectral powers and the Loewner
// order test. Everything targets small dense matrices (n <= 64) and is fully
// deterministic: no pivot randomization, no parallel reductions.

#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sectorix {

using cd = std::complex<double>;

// Raised when a caller violates an input contract (shape, range, parse).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a numerical routine cannot meet its contract.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inversion of a numerically singular matrix; carries s_min/s_max.
struct SingularMatrixError : NumericalError {
  SingularMatrixError(const std::string& what, double ratio)
      : NumericalError(what), sv_ratio(ratio) {}
  double sv_ratio;
};

// An iterative kernel hit its iteration or range limit.
struct ConvergenceError : NumericalError {
  using NumericalError::NumericalError;
};

// Square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n) : n_(check_dim(n)), a_(static_cast<size_t>(n) * n) {}

  static CMatrix identity(int n);
  // Build from rows of complex entries; all rows must share the outer size.
  static CMatrix from_rows(std::initializer_list<std::initializer_list<cd>> rows);
  // Build from rows of real entries.
  static CMatrix from_real(std::initializer_list<std::initializer_list<double>> rows);

  int dim() const { return n_; }
  cd& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const cd& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  cd* data() { return a_.data(); }
  const cd* data() const { return a_.data(); }

  CMatrix adjoint() const;
  cd trace() const;
  bool is_finite() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cd s);

 private:
  static int check_dim(int n) {
    if (n < 1) throw InvalidInput("matrix dimension must be >= 1");
    return n;
  }
  int n_ = 0;
  std::vector<cd> a_;
};

CMatrix operator+(const CMatrix& x, const CMatrix& y);
CMatrix operator-(const CMatrix& x, const CMatrix& y);
CMatrix operator*(const CMatrix& x, const CMatrix& y);
CMatrix operator*(cd s, const CMatrix& x);
CMatrix operator*(double s, const CMatrix& x);

// Hermitian part (A + A*)/2 and skew contribution (A - A*)/(2i); both results
// are Hermitian and A = re_part(A) + i * im_part(A).
CMatrix re_part(const CMatrix& a);
CMatrix im_part(const CMatrix& a);

double frob_norm(const CMatrix& a);
double max_abs(const CMatrix& a);

// Eigendecomposition of a Hermitian matrix. `values` are sorted descending and
// the columns of `vectors` are the matching orthonormal eigenvectors, so that
// vectors * diag(values) * vectors^* reconstructs the (symmetrized) input.
struct HermEigen {
  std::vector<double> values;
  CMatrix vectors;
};

// Input must be Hermitian within 1e-12 * max(1, ||H||_F); it is symmetrized
// exactly before the cyclic Jacobi iteration. Throws InvalidInput on a
// non-Hermitian input and ConvergenceError if sweeps hit the iteration cap.
HermEigen herm_eigen(const CMatrix& h);
// Same contract, eigenvalues only (descending); skips vector accumulation.
std::vector<double> herm_eigenvalues(const CMatrix& h);
double herm_eigen_min(const CMatrix& h);
double herm_eigen_max(const CMatrix& h);

// Singular values, descending. Computed from the eigenvalues of A^*A with
// tiny negative roundoff clamped to zero before the square root.
struct SingularSpectrum {
  std::vector<double> values;
};
SingularSpectrum singular_values(const CMatrix& a);

// Product of the k largest singular values, 1 <= k <= n.
double topk_sv_product(const CMatrix& a, int k);
double topk_sv_product(const SingularSpectrum& s, int k);

// Operator (spectral) norm: largest singular value.
double op_norm(const CMatrix& a);

// Determinant via partially pivoted LU.
cd det(const CMatrix& a);

// Inverse via LU. Requires s_min > 1e-13 * s_max; otherwise throws
// SingularMatrixError carrying the offending ratio.
CMatrix inverse(const CMatrix& a);

// Solve A X = B.
CMatrix solve(const CMatrix& a, const CMatrix& b);

// Spectral power of a Hermitian positive definite matrix. Requires
// lambda_min > 1e-12 * lambda_max; the result is exactly Hermitian.
CMatrix hpd_power(const CMatrix& h, double p);

// Spectral map of a Hermitian positive semidefinite matrix: eigenvalues are
// clamped below at zero before applying f. The result is exactly Hermitian.
CMatrix psd_apply(const CMatrix& h, const std::function<double(double)>& f);

// |A| = (A^*A)^{1/2}.
CMatrix abs_psd(const CMatrix& a);

// Loewner order test A <= B for Hermitian A, B.
// margin = lambda_min(B - A); holds iff margin >= -tol * max(1, ||A||, ||B||)
// with Frobenius norms for the scale.
struct LoewnerResult {
  bool holds;
  double margin;
};
LoewnerResult loewner_leq(const CMatrix& a, const CMatrix& b, double tol);

// Kronecker product, dim(x) * dim(y).
CMatrix kron(const CMatrix& x, const CMatrix& y);

// [[A, B], [C, D]] with four n x n blocks.
CMatrix block2x2(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d);

// Reusable buffers for repeated inversion of same-size matrices; used by
// quadrature inner loops. accumulate_inverse computes acc += w * m^{-1};
// invert writes m^{-1} into out. Neither checks conditioning beyond a zero
// pivot — callers own the conditioning of their integrands.
class InverseWorkspace {
 public:
  explicit InverseWorkspace(int n);
  void accumulate_inverse(const CMatrix& m, cd w, CMatrix& acc);
  void invert(const CMatrix& m, CMatrix& out);

 private:
  void factor(const CMatrix& m);
  int n_;
  std::vector<cd> lu_;
  std::vector<int> piv_;
  std::vector<cd> x_;
};

}  // namespace sectorix
