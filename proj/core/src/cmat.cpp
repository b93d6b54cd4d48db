#include "sectorix/cmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sectorix {

namespace {

void check_same_dim(const CMatrix& x, const CMatrix& y) {
  if (x.dim() != y.dim()) throw InvalidInput("matrix dimensions do not match");
}

}  // namespace

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cd>> rows) {
  const int n = static_cast<int>(rows.size());
  CMatrix m(n);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("from_rows: ragged rows");
    int j = 0;
    for (cd v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

CMatrix CMatrix::from_real(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  CMatrix m(n);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("from_real: ragged rows");
    int j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

cd CMatrix::trace() const {
  cd t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool CMatrix::is_finite() const {
  for (const cd& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  check_same_dim(*this, o);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  check_same_dim(*this, o);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cd s) {
  for (cd& v : a_) v *= s;
  return *this;
}

CMatrix operator+(const CMatrix& x, const CMatrix& y) {
  CMatrix r = x;
  r += y;
  return r;
}

CMatrix operator-(const CMatrix& x, const CMatrix& y) {
  CMatrix r = x;
  r -= y;
  return r;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
  check_same_dim(x, y);
  const int n = x.dim();
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cd xik = x(i, k);
      if (xik == cd(0.0)) continue;
      for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

CMatrix operator*(cd s, const CMatrix& x) {
  CMatrix r = x;
  r *= s;
  return r;
}

CMatrix operator*(double s, const CMatrix& x) { return cd(s) * x; }

CMatrix re_part(const CMatrix& a) {
  const int n = a.dim();
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return r;
}

CMatrix im_part(const CMatrix& a) {
  const int n = a.dim();
  CMatrix r(n);
  const cd half_over_i(0.0, -0.5);  // 1/(2i)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = half_over_i * (a(i, j) - std::conj(a(j, i)));
  return r;
}

double frob_norm(const CMatrix& a) {
  double s = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

namespace {

// Cyclic Jacobi for Hermitian matrices. Rotations zero a(p,q) through the
// unitary [[c, -s*e^{i phi}], [s*e^{-i phi}, c]] acting on the (p,q) plane,
// where a(p,q) = |a(p,q)| e^{i phi}. Quadratic convergence; the sweep cap is
// generous for n <= 64.
struct Jacobi {
  int n;
  std::vector<cd> a;   // working copy, kept Hermitian
  std::vector<cd> v;   // eigenvector accumulation (empty if not wanted)

  cd& A(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  cd& V(int i, int j) { return v[static_cast<size_t>(i) * n + j]; }

  double off_norm() const {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(a[static_cast<size_t>(i) * n + j]);
    return std::sqrt(s);
  }

  void rotate(int p, int q) {
    const cd apq = A(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;
    const cd phase = apq / abs_apq;
    const double app = A(p, p).real();
    const double aqq = A(q, q).real();
    const double zeta = (app - aqq) / (2.0 * abs_apq);
    double t;
    if (std::isinf(zeta)) {
      t = 0.0;
    } else if (zeta >= 0.0) {
      t = 1.0 / (zeta + std::sqrt(1.0 + zeta * zeta));
    } else {
      t = -1.0 / (-zeta + std::sqrt(1.0 + zeta * zeta));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const cd sp = s * phase;             // s * e^{i phi}
    const cd spc = s * std::conj(phase); // s * e^{-i phi}

    // A <- A U (columns p, q)
    for (int i = 0; i < n; ++i) {
      const cd aip = A(i, p);
      const cd aiq = A(i, q);
      A(i, p) = c * aip + spc * aiq;
      A(i, q) = -sp * aip + c * aiq;
    }
    // A <- U^* A (rows p, q)
    for (int j = 0; j < n; ++j) {
      const cd apj = A(p, j);
      const cd aqj = A(q, j);
      A(p, j) = c * apj + sp * aqj;
      A(q, j) = -spc * apj + c * aqj;
    }
    // Keep the working matrix exactly Hermitian on the rotated plane.
    A(p, q) = 0.0;
    A(q, p) = 0.0;
    A(p, p) = A(p, p).real();
    A(q, q) = A(q, q).real();

    if (!v.empty()) {
      for (int i = 0; i < n; ++i) {
        const cd vip = V(i, p);
        const cd viq = V(i, q);
        V(i, p) = c * vip + spc * viq;
        V(i, q) = -sp * vip + c * viq;
      }
    }
  }

  void run() {
    const double scale = std::sqrt(std::inner_product(
        a.begin(), a.end(), a.begin(), 0.0,
        [](double acc, double x) { return acc + x; },
        [](const cd& x, const cd& y) { return (x * std::conj(y)).real(); }));
    if (scale == 0.0) return;
    const double stop = 1e-15 * n * scale;
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      if (off_norm() <= stop) return;
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) rotate(p, q);
    }
    if (off_norm() <= 1e-12 * n * scale) return;  // good enough for the contract
    throw ConvergenceError("herm_eigen: Jacobi sweep limit reached");
  }
};

void check_hermitian(const CMatrix& h) {
  const int n = h.dim();
  double dev = 0.0, scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      dev += std::norm(h(i, j) - std::conj(h(j, i)));
      scale += std::norm(h(i, j));
    }
  if (std::sqrt(dev) > 1e-12 * std::max(1.0, std::sqrt(scale)))
    throw InvalidInput("herm_eigen: input is not Hermitian");
}

Jacobi make_jacobi(const CMatrix& h, bool want_vectors) {
  check_hermitian(h);
  const int n = h.dim();
  Jacobi j;
  j.n = n;
  j.a.resize(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      j.a[static_cast<size_t>(r) * n + c] = 0.5 * (h(r, c) + std::conj(h(c, r)));
  if (want_vectors) {
    j.v.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) j.v[static_cast<size_t>(i) * n + i] = 1.0;
  }
  return j;
}

}  // namespace

HermEigen herm_eigen(const CMatrix& h) {
  const int n = h.dim();
  Jacobi j = make_jacobi(h, true);
  j.run();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return j.a[static_cast<size_t>(x) * n + x].real() > j.a[static_cast<size_t>(y) * n + y].real();
  });
  HermEigen e;
  e.values.resize(n);
  e.vectors = CMatrix(n);
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    e.values[k] = j.a[static_cast<size_t>(src) * n + src].real();
    for (int i = 0; i < n; ++i) e.vectors(i, k) = j.v[static_cast<size_t>(i) * n + src];
  }
  return e;
}

std::vector<double> herm_eigenvalues(const CMatrix& h) {
  const int n = h.dim();
  Jacobi j = make_jacobi(h, false);
  j.run();
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = j.a[static_cast<size_t>(i) * n + i].real();
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

double herm_eigen_min(const CMatrix& h) { return herm_eigenvalues(h).back(); }
double herm_eigen_max(const CMatrix& h) { return herm_eigenvalues(h).front(); }

SingularSpectrum singular_values(const CMatrix& a) {
  const CMatrix ata = a.adjoint() * a;
  std::vector<double> ev = herm_eigenvalues(ata);
  SingularSpectrum s;
  s.values.resize(ev.size());
  for (size_t i = 0; i < ev.size(); ++i) s.values[i] = std::sqrt(std::max(ev[i], 0.0));
  return s;
}

double topk_sv_product(const SingularSpectrum& s, int k) {
  if (k < 1 || k > static_cast<int>(s.values.size()))
    throw InvalidInput("topk_sv_product: k out of range");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= s.values[i];
  return p;
}

double topk_sv_product(const CMatrix& a, int k) { return topk_sv_product(singular_values(a), k); }

double op_norm(const CMatrix& a) { return singular_values(a).values.front(); }

namespace {

// In-place partially pivoted LU on a row-major buffer. Returns the permutation
// sign, leaves L (unit diagonal) and U packed in `a`. A zero pivot is recorded
// rather than thrown so det can return 0.
struct LuResult {
  int sign = 1;
  bool singular = false;
};

LuResult lu_factor_inplace(std::vector<cd>& a, std::vector<int>& piv, int n) {
  LuResult res;
  piv.resize(n);
  for (int k = 0; k < n; ++k) {
    int pk = k;
    double best = std::abs(a[static_cast<size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double cand = std::abs(a[static_cast<size_t>(i) * n + k]);
      if (cand > best) {
        best = cand;
        pk = i;
      }
    }
    piv[k] = pk;
    if (pk != k) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(k) * n + j], a[static_cast<size_t>(pk) * n + j]);
      res.sign = -res.sign;
    }
    const cd pivot = a[static_cast<size_t>(k) * n + k];
    if (pivot == cd(0.0)) {
      res.singular = true;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      const cd m = a[static_cast<size_t>(i) * n + k] / pivot;
      a[static_cast<size_t>(i) * n + k] = m;
      if (m == cd(0.0)) continue;
      for (int j = k + 1; j < n; ++j)
        a[static_cast<size_t>(i) * n + j] -= m * a[static_cast<size_t>(k) * n + j];
    }
  }
  return res;
}

// Solve LU x = P b for one column already permuted into x.
void lu_solve_col(const std::vector<cd>& a, int n, cd* x) {
  for (int i = 1; i < n; ++i) {
    cd s = x[i];
    for (int j = 0; j < i; ++j) s -= a[static_cast<size_t>(i) * n + j] * x[j];
    x[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    cd s = x[i];
    for (int j = i + 1; j < n; ++j) s -= a[static_cast<size_t>(i) * n + j] * x[j];
    x[i] = s / a[static_cast<size_t>(i) * n + i];
  }
}

}  // namespace

cd det(const CMatrix& a) {
  const int n = a.dim();
  std::vector<cd> lu(a.data(), a.data() + static_cast<size_t>(n) * n);
  std::vector<int> piv;
  const LuResult r = lu_factor_inplace(lu, piv, n);
  if (r.singular) return 0.0;
  cd d = static_cast<double>(r.sign);
  for (int i = 0; i < n; ++i) d *= lu[static_cast<size_t>(i) * n + i];
  return d;
}

CMatrix solve(const CMatrix& a, const CMatrix& b) {
  check_same_dim(a, b);
  const int n = a.dim();
  std::vector<cd> lu(a.data(), a.data() + static_cast<size_t>(n) * n);
  std::vector<int> piv;
  const LuResult r = lu_factor_inplace(lu, piv, n);
  if (r.singular) throw SingularMatrixError("solve: zero pivot", 0.0);
  CMatrix x = b;
  // Apply row permutation.
  for (int k = 0; k < n; ++k)
    if (piv[k] != k)
      for (int j = 0; j < n; ++j) std::swap(x(k, j), x(piv[k], j));
  std::vector<cd> col(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) col[i] = x(i, j);
    lu_solve_col(lu, n, col.data());
    for (int i = 0; i < n; ++i) x(i, j) = col[i];
  }
  return x;
}

CMatrix inverse(const CMatrix& a) {
  const SingularSpectrum s = singular_values(a);
  const double smax = s.values.front();
  const double smin = s.values.back();
  if (smax == 0.0 || smin <= 1e-13 * smax) {
    const double ratio = smax == 0.0 ? 0.0 : smin / smax;
    throw SingularMatrixError(
        "inverse: matrix is numerically singular (s_min/s_max = " + std::to_string(ratio) + ")",
        ratio);
  }
  return solve(a, CMatrix::identity(a.dim()));
}

CMatrix hpd_power(const CMatrix& h, double p) {
  const HermEigen e = herm_eigen(h);
  const double lmax = e.values.front();
  const double lmin = e.values.back();
  if (lmax <= 0.0 || lmin <= 1e-12 * lmax)
    throw NumericalError("hpd_power: input is not positive definite (lambda_min = " +
                         std::to_string(lmin) + ")");
  const int n = h.dim();
  CMatrix r(n);
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) w[k] = std::pow(e.values[k], p);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      cd s = 0.0;
      for (int k = 0; k < n; ++k) s += w[k] * e.vectors(i, k) * std::conj(e.vectors(j, k));
      r(i, j) = s;
      r(j, i) = std::conj(s);
    }
  for (int i = 0; i < n; ++i) r(i, i) = r(i, i).real();
  return r;
}

CMatrix psd_apply(const CMatrix& h, const std::function<double(double)>& f) {
  const HermEigen e = herm_eigen(h);
  const int n = h.dim();
  CMatrix r(n);
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) w[k] = f(std::max(e.values[k], 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      cd s = 0.0;
      for (int k = 0; k < n; ++k) s += w[k] * e.vectors(i, k) * std::conj(e.vectors(j, k));
      r(i, j) = s;
      r(j, i) = std::conj(s);
    }
  for (int i = 0; i < n; ++i) r(i, i) = r(i, i).real();
  return r;
}

CMatrix abs_psd(const CMatrix& a) {
  return psd_apply(a.adjoint() * a, [](double x) { return std::sqrt(x); });
}

LoewnerResult loewner_leq(const CMatrix& a, const CMatrix& b, double tol) {
  check_same_dim(a, b);
  const CMatrix d = re_part(b - a);  // symmetrize roundoff away
  const double margin = herm_eigen_min(d);
  const double scale = std::max({1.0, frob_norm(a), frob_norm(b)});
  return {margin >= -tol * scale, margin};
}

CMatrix kron(const CMatrix& x, const CMatrix& y) {
  const int nx = x.dim(), ny = y.dim();
  if (nx > 1 && ny > static_cast<int>(4096 / nx)) throw InvalidInput("kron: result too large");
  CMatrix r(nx * ny);
  for (int ix = 0; ix < nx; ++ix)
    for (int jx = 0; jx < nx; ++jx) {
      const cd v = x(ix, jx);
      if (v == cd(0.0)) continue;
      for (int iy = 0; iy < ny; ++iy)
        for (int jy = 0; jy < ny; ++jy) r(ix * ny + iy, jx * ny + jy) = v * y(iy, jy);
    }
  return r;
}

CMatrix block2x2(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  const int n = a.dim();
  if (b.dim() != n || c.dim() != n || d.dim() != n)
    throw InvalidInput("block2x2: blocks must share one dimension");
  CMatrix r(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r(i, j) = a(i, j);
      r(i, n + j) = b(i, j);
      r(n + i, j) = c(i, j);
      r(n + i, n + j) = d(i, j);
    }
  return r;
}

InverseWorkspace::InverseWorkspace(int n)
    : n_(n), lu_(static_cast<size_t>(n) * n), piv_(n), x_(n) {}

void InverseWorkspace::factor(const CMatrix& m) {
  std::copy(m.data(), m.data() + lu_.size(), lu_.begin());
  const LuResult r = lu_factor_inplace(lu_, piv_, n_);
  if (r.singular) throw SingularMatrixError("workspace inversion: zero pivot", 0.0);
}

void InverseWorkspace::accumulate_inverse(const CMatrix& m, cd w, CMatrix& acc) {
  if (m.dim() != n_ || acc.dim() != n_) throw InvalidInput("accumulate_inverse: dimension mismatch");
  factor(m);
  for (int j = 0; j < n_; ++j) {
    // Column j of the permuted identity.
    for (int i = 0; i < n_; ++i) x_[i] = 0.0;
    x_[j] = 1.0;
    for (int k = 0; k < n_; ++k)
      if (piv_[k] != k) std::swap(x_[k], x_[piv_[k]]);
    lu_solve_col(lu_, n_, x_.data());
    for (int i = 0; i < n_; ++i) acc(i, j) += w * x_[i];
  }
}

void InverseWorkspace::invert(const CMatrix& m, CMatrix& out) {
  if (m.dim() != n_ || out.dim() != n_) throw InvalidInput("invert: dimension mismatch");
  factor(m);
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) x_[i] = 0.0;
    x_[j] = 1.0;
    for (int k = 0; k < n_; ++k)
      if (piv_[k] != k) std::swap(x_[k], x_[piv_[k]]);
    lu_solve_col(lu_, n_, x_.data());
    for (int i = 0; i < n_; ++i) out(i, j) = x_[i];
  }
}

}  // namespace sectorix
