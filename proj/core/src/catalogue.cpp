#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sectorix/checks.hpp"

// evaluate(): every catalogue id, dispatched by name. Conventions shared by
// all evaluators:
//   * inequalities are oriented as lhs <= rhs; "...>= bound" statements put
//     the bound on the lhs.
//   * scalar forms report slack = (rhs - lhs)/max(1, |rhs|); ordered-spectra
//     forms take the minimum of the per-index slacks; Loewner forms report
//     lambda_min(rhs - lhs)/max(1, ||rhs||_F).
//   * a violated hypothesis yields a vacuous result, never a failure.
//   * the effective cone angle is the certified angle of the operands, or
//     params.alpha_override when that is at least as large.

namespace sectorix {
namespace {

constexpr double kHalfPi = 1.5707963267948966;

double sec_pow(double alpha, double power) {
  return std::pow(std::cos(alpha), -power);
}

std::string dkey(const char* base, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s@%.17g", base, x);
  return buf;
}

CheckResult base_result(const std::string& id, const Instance& in) {
  CheckResult r;
  r.id = id;
  r.witness = in.cfg.seed;
  return r;
}

void set_vacuous(CheckResult& r, const std::string& reason) {
  r.hypotheses_met = false;
  r.vacuous_reason = reason;
  r.lhs.clear();
  r.rhs.clear();
  r.slack = 0.0;
  r.holds = true;
}

void finish_scalar(CheckResult& r, double lhs, double rhs, double tol) {
  r.lhs = {lhs};
  r.rhs = {rhs};
  r.slack = (rhs - lhs) / std::max(1.0, std::abs(rhs));
  r.holds = r.slack >= -tol;
}

void finish_ordered(CheckResult& r, std::vector<double> lhs,
                    std::vector<double> rhs, double tol) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < lhs.size(); ++j)
    worst = std::min(worst,
                     (rhs[j] - lhs[j]) / std::max(1.0, std::abs(rhs[j])));
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.slack = worst;
  r.holds = r.slack >= -tol;
}

void finish_loewner(CheckResult& r, const CMatrix& lhs, const CMatrix& rhs,
                    double tol) {
  const double viol = herm_eigen_max(re_part(lhs - rhs));
  r.lhs = {viol};
  r.rhs = {0.0};
  r.slack = -viol / std::max(1.0, frob_norm(rhs));
  r.holds = r.slack >= -tol;
}

bool is_hermitian(const CMatrix& x) {
  return frob_norm(x - x.adjoint()) <= 1e-10 * std::max(1.0, frob_norm(x));
}

// Hermitian square H * H (positive semidefinite for Hermitian H).
CMatrix herm_square(const CMatrix& h) { return h * h; }

double sq(double x) { return x * x; }

// Scalar unweighted means.
double s_har(double a, double b) { return 2.0 * a * b / (a + b); }
double s_avg(double a, double b) { return 0.5 * (a + b); }

// ---------------------------------------------------------------------------
// Shared evaluation context: the instance plus the resolved grid point.

struct Ctx {
  const Instance& in;
  const CheckParams& p;
  double tol;

  int n() const { return in.cfg.n; }

  // --- hypothesis primitives -----------------------------------------------

  // Certified angle of the operands vs. the requested override. Returns false
  // (and marks r vacuous) when the override is below the certified angle.
  bool effective_alpha(CheckResult& r, double cert, double* out) const {
    if (p.alpha_override >= 0.0) {
      if (p.alpha_override >= kHalfPi) {
        set_vacuous(r, "alpha_override must be below pi/2");
        return false;
      }
      if (p.alpha_override + 1e-12 < cert) {
        set_vacuous(r, "alpha_override below certified angle");
        return false;
      }
      *out = p.alpha_override;
    } else {
      *out = cert;
    }
    r.params.alpha = *out;
    return true;
  }

  bool need_sector_pair(CheckResult& r) const {
    if (!in.sector_ok) {
      set_vacuous(r, "operand is not accretive: " + in.sector_reason);
      return false;
    }
    return true;
  }

  bool need_v(CheckResult& r) const {
    if (p.v < 0.0 || p.v > 1.0) {
      set_vacuous(r, "weight v outside [0, 1]");
      return false;
    }
    r.params.v = p.v;
    return true;
  }

  bool need_psd(CheckResult& r, const CMatrix& x, const char* name,
                bool strictly) const {
    if (!is_hermitian(x)) {
      set_vacuous(r, std::string(name) + " is not Hermitian");
      return false;
    }
    const double lo = herm_eigen_min(x);
    if (strictly ? lo <= 0.0
                 : lo < -1e-10 * std::max(1.0, std::abs(herm_eigen_max(x)))) {
      set_vacuous(r, std::string(name) +
                         (strictly ? " is not positive definite"
                                   : " is not positive semidefinite"));
      return false;
    }
    return true;
  }

  bool need_normalized(CheckResult& r, const MapSpec& phi) const {
    std::vector<CMatrix> ids(static_cast<std::size_t>(phi.k),
                             CMatrix::identity(phi.n));
    const CMatrix u = apply_map(phi, ids);
    if (frob_norm(u - CMatrix::identity(phi.l)) > 1e-6 * phi.l) {
      set_vacuous(r, "map is not normalized");
      return false;
    }
    return true;
  }

  // --- cached instance-derived objects --------------------------------------

  const CMatrix& inv_a() const {
    return in.mat("sec_a.inv", [&] { return inverse(in.sec_a); });
  }
  const CMatrix& inv_b() const {
    return in.mat("sec_b.inv", [&] { return inverse(in.sec_b); });
  }
  const CMatrix& sec_sum() const {
    return in.mat("sec_sum", [&] { return in.sec_a + in.sec_b; });
  }
  const CMatrix& sum_inv() const {
    return in.mat("sec_sum.inv", [&] { return inverse(sec_sum()); });
  }
  const CMatrix& re_a() const {
    return in.mat("sec_a.re", [&] { return re_part(in.sec_a); });
  }
  const CMatrix& re_b() const {
    return in.mat("sec_b.re", [&] { return re_part(in.sec_b); });
  }
  const CMatrix& re_inv_a() const {
    return in.mat("sec_a.inv.re", [&] { return re_part(inv_a()); });
  }

  const std::vector<double>& re_a_eigs() const {
    return in.eigs("sec_a.re", [&] { return re_a(); });
  }
  const std::vector<double>& re_b_eigs() const {
    return in.eigs("sec_b.re", [&] { return re_b(); });
  }

  // Realized spectral bounds of the Hermitian parts of the sector pair.
  void pair_bounds(double* m, double* M) const {
    const auto& ea = re_a_eigs();
    const auto& eb = re_b_eigs();
    *m = std::min(ea.back(), eb.back());
    *M = std::max(ea.front(), eb.front());
  }
  void a_bounds(double* m, double* M) const {
    const auto& ea = re_a_eigs();
    *m = ea.back();
    *M = ea.front();
  }

  double topk(const SingularSpectrum& s, int k) const {
    return topk_sv_product(s, k);
  }
  double topk(const std::vector<double>& eigs_desc, int k) const {
    double acc = 1.0;
    for (int j = 0; j < k; ++j) acc *= eigs_desc[static_cast<std::size_t>(j)];
    return acc;
  }

  int check_k(const char* id) const {
    if (p.k < 1 || p.k > n())
      throw InvalidInput(std::string(id) + ": k must lie in [1, n]; got " +
                         std::to_string(p.k) + " with n = " +
                         std::to_string(n()));
    return p.k;
  }
};

// ---------------------------------------------------------------------------
// Arbitrary-pair product bounds (ordered singular-value lists only).

void eval_ga1(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("GA1", c.in);
  const int k = c.check_k("GA1");
  r.params.k = k;
  if (c.p.r < 1.0 || c.p.r > 2.0) {
    set_vacuous(r, "exponent r outside [1, 2]");
    out.push_back(std::move(r));
    return;
  }
  r.params.r = c.p.r;
  const auto& ssum = c.in.svs("any_sum", [&] { return c.in.any_a + c.in.any_b; });
  const auto& sa = c.in.svs("any_a", [&] { return c.in.any_a; });
  const auto& sb = c.in.svs("any_b", [&] { return c.in.any_b; });
  double lhs = 1.0, rhs = 1.0;
  for (int j = 0; j < k; ++j) {
    lhs *= std::pow(ssum.values[static_cast<std::size_t>(j)], c.p.r);
    rhs *= (1.0 + std::pow(sa.values[static_cast<std::size_t>(j)], c.p.r)) *
           (1.0 + std::pow(sb.values[static_cast<std::size_t>(j)], c.p.r));
  }
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_ga2(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("GA2", c.in);
  const int k = c.check_k("GA2");
  r.params.k = k;
  const auto f = concave_catalogue(c.p.f);  // throws on unknown name
  r.params.f = c.p.f;
  const auto& ssum = c.in.svs("any_sum", [&] { return c.in.any_a + c.in.any_b; });
  const auto& sa = c.in.svs("any_a", [&] { return c.in.any_a; });
  const auto& sb = c.in.svs("any_b", [&] { return c.in.any_b; });
  double lhs = 1.0, rhs = 1.0;
  for (int j = 0; j < k; ++j) {
    lhs *= 1.0 + f(ssum.values[static_cast<std::size_t>(j)]);
    rhs *= (1.0 + f(sa.values[static_cast<std::size_t>(j)])) *
           (1.0 + f(sb.values[static_cast<std::size_t>(j)]));
  }
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_ga34(const Ctx& c, bool shifted, std::vector<CheckResult>& out) {
  CheckResult r = base_result(shifted ? "GA4" : "GA3", c.in);
  const int k = c.check_k(shifted ? "GA4" : "GA3");
  r.params.k = k;
  if (!c.need_psd(r, c.in.psd_a, "first operand", false) ||
      !c.need_psd(r, c.in.psd_b, "second operand", false)) {
    out.push_back(std::move(r));
    return;
  }
  const auto& esum =
      c.in.eigs("psd_sum", [&] { return c.in.psd_a + c.in.psd_b; });
  const auto& ea = c.in.eigs("psd_a", [&] { return c.in.psd_a; });
  const auto& eb = c.in.eigs("psd_b", [&] { return c.in.psd_b; });
  double lhs = 1.0, rhs = 1.0;
  for (int j = 0; j < k; ++j) {
    const double t = esum[static_cast<std::size_t>(j)];
    lhs *= shifted ? 1.0 + t : t;
    rhs *= (1.0 + ea[static_cast<std::size_t>(j)]) *
           (1.0 + eb[static_cast<std::size_t>(j)]);
  }
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

// ---------------------------------------------------------------------------
// Hermitian-part comparisons for a single accretive / sector operand.

void eval_l11s(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("L11S", c.in);
  if (!c.need_sector_pair(r)) {
    out.push_back(std::move(r));
    return;
  }
  const auto& sa = c.in.svs("sec_a", [&] { return c.in.sec_a; });
  finish_ordered(r, c.re_a_eigs(), sa.values, c.tol);
  out.push_back(std::move(r));
}

void eval_l11d(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("L11D", c.in);
  if (!c.need_sector_pair(r)) {
    out.push_back(std::move(r));
    return;
  }
  finish_scalar(r, det(c.re_a()).real(), std::abs(det(c.in.sec_a)), c.tol);
  out.push_back(std::move(r));
}

void eval_l12s(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("L12S", c.in);
  double alpha;
  if (!c.need_sector_pair(r) || !c.effective_alpha(r, c.in.cert_a, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const double s2 = sec_pow(alpha, 2.0);
  const auto& sa = c.in.svs("sec_a", [&] { return c.in.sec_a; });
  std::vector<double> rhs = c.re_a_eigs();
  for (double& x : rhs) x *= s2;
  finish_ordered(r, sa.values, std::move(rhs), c.tol);
  out.push_back(std::move(r));
}

void eval_l12d(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("L12D", c.in);
  double alpha;
  if (!c.need_sector_pair(r) || !c.effective_alpha(r, c.in.cert_a, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  finish_scalar(r, std::abs(det(c.in.sec_a)),
                sec_pow(alpha, c.n()) * det(c.re_a()).real(), c.tol);
  out.push_back(std::move(r));
}

void eval_l13(const Ctx& c, std::vector<CheckResult>& out) {
  {
    CheckResult r = base_result("L13.1", c.in);
    if (!c.need_sector_pair(r)) {
      out.push_back(std::move(r));
    } else {
      const CMatrix re_inv =
          c.in.mat("sec_a.re.inv", [&] { return inverse(c.re_a()); });
      finish_loewner(r, c.re_inv_a(), re_inv, c.tol);
      out.push_back(std::move(r));
    }
  }
  {
    CheckResult r = base_result("L13.2", c.in);
    double alpha;
    if (!c.need_sector_pair(r) || !c.effective_alpha(r, c.in.cert_a, &alpha)) {
      out.push_back(std::move(r));
      return;
    }
    const CMatrix re_inv =
        c.in.mat("sec_a.re.inv", [&] { return inverse(c.re_a()); });
    finish_loewner(r, re_inv, sec_pow(alpha, 2.0) * c.re_inv_a(), c.tol);
    out.push_back(std::move(r));
  }
}

// ---------------------------------------------------------------------------
// Positive-definite norm lemmas.

void eval_bk1(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("BK1", c.in);
  if (!c.need_psd(r, c.in.psd_a, "first operand", false) ||
      !c.need_psd(r, c.in.psd_b, "second operand", false)) {
    out.push_back(std::move(r));
    return;
  }
  const double lhs = op_norm(c.in.psd_a * c.in.psd_b);
  const double rhs = 0.25 * sq(op_norm(c.in.psd_a + c.in.psd_b));
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_az2(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("AZ2", c.in);
  if (c.p.r < 1.0) {
    set_vacuous(r, "exponent r below 1");
    out.push_back(std::move(r));
    return;
  }
  r.params.r = c.p.r;
  if (!c.need_psd(r, c.in.psd_a, "first operand", false) ||
      !c.need_psd(r, c.in.psd_b, "second operand", false)) {
    out.push_back(std::move(r));
    return;
  }
  const double rr = c.p.r;
  const auto powr = [rr](double t) { return std::pow(t, rr); };
  const double lhs =
      op_norm(psd_apply(c.in.psd_a, powr) + psd_apply(c.in.psd_b, powr));
  const double rhs = op_norm(psd_apply(c.in.psd_a + c.in.psd_b, powr));
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_bk3(const Ctx& c, std::vector<CheckResult>& out) {
  constexpr double delta = 1e-6;
  CheckResult probe = base_result("BK3.1", c.in);
  if (!c.need_psd(probe, c.in.psd_a, "first operand", true) ||
      !c.need_psd(probe, c.in.psd_b, "second operand", true)) {
    CheckResult twin = probe;
    twin.id = "BK3.2";
    out.push_back(std::move(probe));
    out.push_back(std::move(twin));
    return;
  }
  const CMatrix bmh = hpd_power(c.in.psd_b, -0.5);
  const double r_hat = herm_eigen_max(re_part(bmh * c.in.psd_a * bmh));
  const double cross = op_norm(hpd_power(c.in.psd_a, 0.5) * bmh);
  {
    // Order relation at r(1 + delta) holds, so the norm bound must follow.
    CheckResult r = std::move(probe);
    r.params.r = r_hat * (1.0 + delta);
    finish_scalar(r, cross, std::sqrt(r_hat * (1.0 + delta)), c.tol);
    out.push_back(std::move(r));
  }
  {
    // Norm bound at r(1 - delta) fails, so the order relation must fail too:
    // the margin lambda_max(A - rB) is reported as the slack.
    CheckResult r = base_result("BK3.2", c.in);
    const double r_lo = r_hat * (1.0 - delta);
    r.params.r = r_lo;
    const double fail_margin =
        herm_eigen_max(re_part(c.in.psd_a - r_lo * c.in.psd_b));
    r.lhs = {-fail_margin};
    r.rhs = {0.0};
    r.slack = fail_margin / std::max(1.0, frob_norm(c.in.psd_a));
    r.holds = r.slack >= -c.tol;
    out.push_back(std::move(r));
  }
}

void eval_lin151(const Ctx& c, std::vector<CheckResult>& out) {
  constexpr double delta = 1e-6;
  const CMatrix& x = c.in.any_a;
  const int n = x.dim();
  const CMatrix absx = abs_psd(x);
  const double r_hat = op_norm(x);
  const double scale = std::max(1.0, r_hat);
  const CMatrix xadj = x.adjoint();
  const auto block_min = [&](double rr) {
    return herm_eigen_min(
        block2x2(rr * CMatrix::identity(n), x, xadj, rr * CMatrix::identity(n)));
  };
  {
    // All three equivalent statements hold at r(1 + delta).
    CheckResult r = base_result("LIN151.1", c.in);
    const double r_hi = r_hat * (1.0 + delta);
    r.params.r = r_hi;
    const double m1 = herm_eigen_min(r_hi * CMatrix::identity(n) - absx);
    const double m2 = r_hi - r_hat;
    const double m3 = block_min(r_hi);
    const double margin = std::min({m1, m2, m3});
    r.lhs = {-margin};
    r.rhs = {0.0};
    r.slack = margin / scale;
    r.holds = r.slack >= -c.tol;
    out.push_back(std::move(r));
  }
  {
    // All three fail together at r(1 - delta).
    CheckResult r = base_result("LIN151.2", c.in);
    const double r_lo = r_hat * (1.0 - delta);
    r.params.r = r_lo;
    const double f1 = -herm_eigen_min(r_lo * CMatrix::identity(n) - absx);
    const double f2 = r_hat - r_lo;
    const double f3 = -block_min(r_lo);
    const double margin = std::min({f1, f2, f3});
    r.lhs = {-margin};
    r.rhs = {0.0};
    r.slack = margin / scale;
    r.holds = r.slack >= -c.tol;
    out.push_back(std::move(r));
  }
}

// ---------------------------------------------------------------------------
// Sector mean comparisons (Loewner order).

bool sector_pair_alpha(const Ctx& c, CheckResult& r, double* alpha) {
  if (!c.need_sector_pair(r)) return false;
  return c.effective_alpha(r, std::max(c.in.cert_a, c.in.cert_b), alpha);
}

const CMatrix& cached_harmonic(const Ctx& c, double v) {
  return c.in.mat(dkey("sec.har", v), [&] {
    return harmonic_mean(c.in.sec_a, c.in.sec_b, v);
  });
}

const CMatrix& cached_arithmetic(const Ctx& c, double v) {
  return c.in.mat(dkey("sec.ari", v), [&] {
    return arithmetic_mean(c.in.sec_a, c.in.sec_b, v);
  });
}

void eval_txl(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("TXL", c.in);
  double alpha;
  if (!c.need_v(r) || !sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const CMatrix lhs =
      std::pow(std::cos(alpha), 2.0) * re_part(cached_harmonic(c, c.p.v));
  finish_loewner(r, lhs, re_part(c.in.geo(c.p.v, c.p.quad)), c.tol);
  out.push_back(std::move(r));
}

void eval_txr(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("TXR", c.in);
  double alpha;
  if (!c.need_v(r) || !sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  finish_loewner(r, re_part(c.in.geo(c.p.v, c.p.quad)),
                 sec_pow(alpha, 2.0) * re_part(cached_arithmetic(c, c.p.v)),
                 c.tol);
  out.push_back(std::move(r));
}

void eval_ref9(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("REF9", c.in);
  double alpha;
  if (!sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const CMatrix rhs =
      0.25 * sec_pow(alpha, 4.0) * re_part(c.inv_a() + c.inv_b());
  finish_loewner(r, re_part(c.sum_inv()), rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_ref7(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("REF7", c.in);
  double alpha;
  if (!c.need_v(r) || !sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const CMatrix lhs = re_part(inverse(cached_arithmetic(c, c.p.v)));
  const CMatrix rhs =
      sec_pow(alpha, 2.0) *
      re_part(arithmetic_mean(c.inv_a(), c.inv_b(), c.p.v));
  finish_loewner(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_ref8(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("REF8", c.in);
  double alpha;
  if (!sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const CMatrix rhs =
      0.25 * sec_pow(alpha, 2.0) * re_part(c.inv_a() + c.inv_b());
  finish_loewner(r, re_part(c.sum_inv()), rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_nf1(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("NF1", c.in);
  double alpha;
  if (!c.need_v(r) || !sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  finish_loewner(r, re_part(c.in.geo(c.p.v, c.p.quad)),
                 sec_pow(alpha, 2.0) * c.in.geo_re(c.p.v), c.tol);
  out.push_back(std::move(r));
}

void eval_nf11(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("NF11", c.in);
  double alpha;
  if (!c.need_v(r) || !sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const double rmin = std::min(c.p.v, 1.0 - c.p.v);
  const CMatrix avg_v = arithmetic_mean(c.re_a(), c.re_b(), c.p.v);
  const CMatrix gap =
      arithmetic_mean(c.re_a(), c.re_b(), 0.5) - c.in.geo_re(0.5);
  const CMatrix rhs = sec_pow(alpha, 2.0) * (avg_v - 2.0 * rmin * gap);
  finish_loewner(r, re_part(c.in.geo(c.p.v, c.p.quad)), rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_r1(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("R1", c.in);
  if (!c.need_v(r) || !c.need_sector_pair(r)) {
    out.push_back(std::move(r));
    return;
  }
  finish_loewner(r, c.in.geo_re(c.p.v), re_part(c.in.geo(c.p.v, c.p.quad)),
               c.tol);
  out.push_back(std::move(r));
}

void eval_svharm(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult probe = base_result("SVHARM.1", c.in);
  const int k = c.check_k("SVHARM");
  double alpha;
  if (!c.need_v(probe) || !sector_pair_alpha(c, probe, &alpha)) {
    probe.params.k = k;
    CheckResult l2 = probe, l3 = probe;
    l2.id = "SVHARM.2";
    l3.id = "SVHARM.3";
    out.push_back(std::move(probe));
    out.push_back(std::move(l2));
    out.push_back(std::move(l3));
    return;
  }
  const double v = c.p.v;
  const CMatrix& har = cached_harmonic(c, v);
  const CMatrix& ari = cached_arithmetic(c, v);
  const double ph = c.topk(c.in.svs(dkey("sec.har", v), [&] { return har; }), k);
  const double prh =
      c.topk(c.in.eigs(dkey("sec.har.re", v), [&] { return re_part(har); }), k);
  const double prn =
      c.topk(c.in.eigs(dkey("sec.ari.re", v), [&] { return re_part(ari); }), k);
  const double pn = c.topk(c.in.svs(dkey("sec.ari", v), [&] { return ari; }), k);
  const double s2k = sec_pow(alpha, 2.0 * k);
  const double s4k = s2k * s2k;
  const auto emit = [&](const char* id, double lhs, double rhs) {
    CheckResult r = base_result(id, c.in);
    r.params.k = k;
    r.params.v = v;
    r.params.alpha = alpha;
    finish_scalar(r, lhs, rhs, c.tol);
    out.push_back(std::move(r));
  };
  emit("SVHARM.1", ph, s2k * prh);
  emit("SVHARM.2", s2k * prh, s4k * prn);
  emit("SVHARM.3", s4k * prn, s4k * pn);
}

// ---------------------------------------------------------------------------
// Top-k singular-value product bounds with inverses.

void eval_f6(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("F6", c.in);
  const int k = c.check_k("F6");
  r.params.k = k;
  double alpha;
  if (!sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const int n = c.n();
  const double lhs =
      c.topk(c.in.svs("sec_sum.inv", [&] { return c.sum_inv(); }), k);
  const double pa = c.topk(c.in.svs("sec_a.inv1", [&] {
    return CMatrix::identity(n) + c.inv_a();
  }), k);
  const double pb = c.topk(c.in.svs("sec_b.inv1", [&] {
    return CMatrix::identity(n) + c.inv_b();
  }), k);
  const double rhs = sec_pow(alpha, 4.0 * k) / std::pow(4.0, k) * pa * pb;
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_f7(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("F7", c.in);
  const int k = c.check_k("F7");
  r.params.k = k;
  double alpha;
  if (!sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const int n = c.n();
  const double q = 0.25 * sec_pow(alpha, 2.0);
  const double lhs = c.topk(c.in.svs("sec_sum.inv1", [&] {
    return CMatrix::identity(n) + c.sum_inv();
  }), k);
  const double pa = c.topk(c.in.svs(dkey("sec_a.invq", alpha), [&] {
    return CMatrix::identity(n) + q * c.inv_a();
  }), k);
  const double pb = c.topk(c.in.svs(dkey("sec_b.invq", alpha), [&] {
    return CMatrix::identity(n) + q * c.inv_b();
  }), k);
  const double rhs = sec_pow(alpha, 2.0 * k) * pa * pb;
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_f90(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("F90", c.in);
  const int k = c.check_k("F90");
  r.params.k = k;
  double alpha;
  if (!sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const int n = c.n();
  const double s2 = sec_pow(alpha, 2.0);
  const double lhs =
      c.topk(c.in.svs("sec_sum", [&] { return c.sec_sum(); }), k);
  const double pa = c.topk(c.in.svs(dkey("sec_a.s2", alpha), [&] {
    return CMatrix::identity(n) + s2 * c.in.sec_a;
  }), k);
  const double pb = c.topk(c.in.svs(dkey("sec_b.s2", alpha), [&] {
    return CMatrix::identity(n) + s2 * c.in.sec_b;
  }), k);
  finish_scalar(r, lhs, pa * pb, c.tol);
  out.push_back(std::move(r));
}

// ---------------------------------------------------------------------------
// Determinant bounds.

void eval_d2233(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("D2233", c.in);
  double alpha;
  if (!sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const double lhs = std::pow(std::cos(alpha), c.n()) *
                     (std::abs(det(c.in.sec_a)) + std::abs(det(c.in.sec_b)));
  finish_scalar(r, lhs, std::abs(det(c.sec_sum())), c.tol);
  out.push_back(std::move(r));
}

void eval_d2244(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult probe = base_result("D2244.1", c.in);
  double alpha;
  if (!sector_pair_alpha(c, probe, &alpha)) {
    CheckResult l2 = probe, l3 = probe;
    l2.id = "D2244.2";
    l3.id = "D2244.3";
    out.push_back(std::move(probe));
    out.push_back(std::move(l2));
    out.push_back(std::move(l3));
    return;
  }
  const double da = std::abs(det(c.in.sec_a));
  const double db = std::abs(det(c.in.sec_b));
  const double ra = det(c.re_a()).real();
  const double rb = det(c.re_b()).real();
  const double sn = sec_pow(alpha, c.n());
  const auto emit = [&](const char* id, double lhs, double rhs) {
    CheckResult r = base_result(id, c.in);
    r.params.alpha = alpha;
    finish_scalar(r, lhs, rhs, c.tol);
    out.push_back(std::move(r));
  };
  emit("D2244.1", s_har(da, db), sn * s_har(ra, rb));
  emit("D2244.2", sn * s_har(ra, rb), sn * s_avg(ra, rb));
  emit("D2244.3", sn * s_avg(ra, rb), sn * s_avg(da, db));
}

void eval_d2255(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult probe = base_result("D2255.1", c.in);
  double alpha;
  if (!sector_pair_alpha(c, probe, &alpha)) {
    CheckResult l2 = probe, l3 = probe;
    l2.id = "D2255.2";
    l2.severity = Severity::finding;
    l3.id = "D2255.3";
    out.push_back(std::move(probe));
    out.push_back(std::move(l2));
    out.push_back(std::move(l3));
    return;
  }
  double m, M;
  c.pair_bounds(&m, &M);
  const double h = M / m;
  const double kinv2 = 1.0 / sq(kantorovich(h));
  const double da = std::abs(det(c.in.sec_a));
  const double db = std::abs(det(c.in.sec_b));
  const double ra = det(c.re_a()).real();
  const double rb = det(c.re_b()).real();
  const auto emit = [&](const char* id, double lhs, double rhs,
                        Severity sev) {
    CheckResult r = base_result(id, c.in);
    r.params.alpha = alpha;
    r.params.m = m;
    r.params.M = M;
    r.params.h = h;
    r.params.kappa = 1.0 / kinv2;
    r.severity = sev;
    finish_scalar(r, lhs, rhs, c.tol);
    out.push_back(std::move(r));
  };
  // Lower-bound chain: each ">= bound" link is oriented bound <= value.
  emit("D2255.1", s_har(ra, rb), s_har(da, db), Severity::proven);
  // The middle link's stated constant K^{-2}(h) compares a harmonic mean of
  // *determinants* (which range over [m^n, M^n]) against their arithmetic
  // mean, so the scalar reverse-mean bound it invokes does not apply at this
  // constant; violations are reported as findings. The corrected constant
  // K^{-1}(h^n) is exercised in the test suite.
  emit("D2255.2", kinv2 * s_avg(ra, rb), s_har(ra, rb), Severity::finding);
  emit("D2255.3", kinv2 * std::pow(std::cos(alpha), c.n()) * s_avg(da, db),
       kinv2 * s_avg(ra, rb), Severity::proven);
}

void eval_f10(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("F10", c.in);
  double alpha;
  if (!sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const int n = c.n();
  const CMatrix eye = CMatrix::identity(n);
  const double lhs = 1.0 / std::abs(det(c.sec_sum()));
  const double rhs = sec_pow(alpha, 3.0 * n) / std::pow(4.0, n) *
                     std::abs(det(eye + c.inv_a())) *
                     std::abs(det(eye + c.inv_b()));
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_f212(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("F212", c.in);
  double alpha;
  if (!sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const int n = c.n();
  const CMatrix eye = CMatrix::identity(n);
  const double q = 0.25 * sec_pow(alpha, 2.0);
  const double lhs = std::abs(det(eye + c.sum_inv()));
  const double rhs = sec_pow(alpha, n) *
                     std::abs(det(eye + q * c.inv_a())) *
                     std::abs(det(eye + q * c.inv_b()));
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_p22(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("P22", c.in);
  if (!c.in.sector_ok) {
    set_vacuous(r, "operand is not accretive: " + c.in.sector_reason);
    out.push_back(std::move(r));
    return;
  }
  double alpha;
  if (!c.effective_alpha(r, c.in.cert_p22, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  const double m = c.in.p22_m, M = c.in.p22_M;
  if (!(m > 0.0)) {
    set_vacuous(r, "sandwich lower bound is not positive");
    out.push_back(std::move(r));
    return;
  }
  // Verify the sandwich m*Re(A^{-1}) <= Re(B^{-1}) <= M*Re(A^{-1}).
  const CMatrix ra = re_part(inverse(c.in.p22_a));
  const CMatrix rb = re_part(inverse(c.in.p22_b));
  const double scale = 1e-8 * std::max(1.0, frob_norm(rb));
  if (herm_eigen_min(re_part(rb - m * ra)) < -scale ||
      herm_eigen_min(re_part(M * ra - rb)) < -scale) {
    set_vacuous(r, "sandwich condition does not hold");
    out.push_back(std::move(r));
    return;
  }
  const double kap = kappa(m, M);
  r.params.m = m;
  r.params.M = M;
  r.params.kappa = kap;
  const int n = c.n();
  const double lhs = std::pow(std::cos(alpha), 3.0 * n) * std::pow(kap, -n) /
                     std::pow(2.0, n) *
                     (std::abs(det(c.in.p22_a)) + std::abs(det(c.in.p22_b)));
  const double rhs =
      std::abs(det(harmonic_mean(c.in.p22_a, c.in.p22_b, 0.5)));
  finish_scalar(r, lhs, rhs, c.tol);
  out.push_back(std::move(r));
}

void eval_detsup(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("DETSUP", c.in);
  if (!c.need_psd(r, c.in.psd_a, "first operand", false) ||
      !c.need_psd(r, c.in.psd_b, "second operand", false)) {
    out.push_back(std::move(r));
    return;
  }
  finish_scalar(r, det(c.in.psd_a).real() + det(c.in.psd_b).real(),
                det(c.in.psd_a + c.in.psd_b).real(), c.tol);
  out.push_back(std::move(r));
}

// ---------------------------------------------------------------------------
// Squared comparisons.

void eval_sq(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("SQ", c.in);
  if (!c.need_psd(r, c.in.sq_a, "first operand", true) ||
      !c.need_psd(r, c.in.sq_b, "second operand", true)) {
    out.push_back(std::move(r));
    return;
  }
  const double gap_scale =
      1e-8 * std::max(1.0, std::max(frob_norm(c.in.sq_a), frob_norm(c.in.sq_b)));
  if (herm_eigen_min(re_part(c.in.sq_b - c.in.sq_a)) < -gap_scale) {
    set_vacuous(r, "operands are not ordered");
    out.push_back(std::move(r));
    return;
  }
  const auto& ea = c.in.eigs("sq_a", [&] { return c.in.sq_a; });
  const double m = ea.back(), M = ea.front(), h = M / m;
  r.params.m = m;
  r.params.M = M;
  r.params.h = h;
  r.params.kappa = kantorovich(h);
  finish_loewner(r, herm_square(c.in.sq_a),
                 kantorovich(h) * herm_square(c.in.sq_b), c.tol);
  out.push_back(std::move(r));
}

void set_bounds(CheckResult& r, double m, double M) {
  r.params.m = m;
  r.params.M = M;
  r.params.h = M / m;
}

void eval_p31(const Ctx& c, int part, std::vector<CheckResult>& out) {
  const char* id = part == 1 ? "P31I" : "P31II";
  CheckResult r = base_result(id, c.in);
  if (!c.need_v(r)) {
    out.push_back(std::move(r));
    return;
  }
  double alpha;
  if (part == 1) {
    if (!sector_pair_alpha(c, r, &alpha)) {
      out.push_back(std::move(r));
      return;
    }
  } else if (!c.need_sector_pair(r)) {
    out.push_back(std::move(r));
    return;
  }
  double m, M;
  c.pair_bounds(&m, &M);
  set_bounds(r, m, M);
  const double kh = kantorovich(M / m);
  r.params.kappa = kh;
  const CMatrix re_geo = re_part(c.in.geo(c.p.v, c.p.quad));
  const CMatrix& geo_re = c.in.geo_re(c.p.v);
  if (part == 1) {
    finish_loewner(r, herm_square(re_geo),
                   sec_pow(alpha, 4.0) * kh * herm_square(geo_re), c.tol);
  } else {
    finish_loewner(r, herm_square(geo_re), kh * herm_square(re_geo), c.tol);
  }
  out.push_back(std::move(r));
}

void eval_p31iii(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("P31III", c.in);
  double alpha;
  if (!c.need_sector_pair(r) || !c.effective_alpha(r, c.in.cert_a, &alpha) ||
      !c.need_normalized(r, c.in.lin_map)) {
    out.push_back(std::move(r));
    return;
  }
  double m, M;
  c.a_bounds(&m, &M);
  set_bounds(r, m, M);
  const double kh = kantorovich(M / m);
  r.params.kappa = kh;
  const CMatrix phi_reinv = c.in.mat("map.re_a.inv", [&] {
    return apply_map1(c.in.lin_map, inverse(c.re_a()));
  });
  const CMatrix phi_reinva = c.in.mat("map.re_inv_a", [&] {
    return apply_map1(c.in.lin_map, c.re_inv_a());
  });
  finish_loewner(r, herm_square(phi_reinv),
                 sec_pow(alpha, 4.0) * kh * herm_square(phi_reinva), c.tol);
  out.push_back(std::move(r));
}

void eval_rim(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("RIM", c.in);
  if (!c.need_v(r) || !c.need_sector_pair(r)) {
    out.push_back(std::move(r));
    return;
  }
  double m, M;
  c.pair_bounds(&m, &M);
  set_bounds(r, m, M);
  const double factor = 1.0 / std::sqrt(kantorovich(M / m));
  r.params.kappa = factor;
  finish_loewner(r, factor * c.in.geo_re(c.p.v),
                 re_part(c.in.geo(c.p.v, c.p.quad)), c.tol);
  out.push_back(std::move(r));
}

void eval_r7(const Ctx& c, std::vector<CheckResult>& out) {
  {
    CheckResult r = base_result("R7.1", c.in);
    if (!c.need_v(r) || !c.need_sector_pair(r)) {
      out.push_back(std::move(r));
    } else {
      finish_loewner(r, c.in.geo_re(c.p.v),
                     re_part(c.in.geo(c.p.v, c.p.quad)), c.tol);
      out.push_back(std::move(r));
    }
  }
  {
    CheckResult r = base_result("R7.2", c.in);
    double alpha;
    if (!c.need_v(r) || !sector_pair_alpha(c, r, &alpha)) {
      out.push_back(std::move(r));
      return;
    }
    finish_loewner(r, re_part(c.in.geo(c.p.v, c.p.quad)),
                   sec_pow(alpha, 2.0) * c.in.geo_re(c.p.v), c.tol);
    out.push_back(std::move(r));
  }
}

// ---------------------------------------------------------------------------
// Positive linear map comparisons for a single operand.

void eval_fff(const Ctx& c, bool reversed, std::vector<CheckResult>& out) {
  CheckResult r = base_result(reversed ? "FFFF" : "FFF", c.in);
  double alpha = 0.0;
  if (!c.need_sector_pair(r) || !c.need_normalized(r, c.in.lin_map) ||
      (reversed && !c.effective_alpha(r, c.in.cert_a, &alpha))) {
    out.push_back(std::move(r));
    return;
  }
  double m, M;
  c.a_bounds(&m, &M);
  set_bounds(r, m, M);
  const double kh = kantorovich(M / m);
  const CMatrix phi_reinv = c.in.mat("map.re_a.inv", [&] {
    return apply_map1(c.in.lin_map, inverse(c.re_a()));
  });
  const CMatrix phi_reinva = c.in.mat("map.re_inv_a", [&] {
    return apply_map1(c.in.lin_map, c.re_inv_a());
  });
  if (reversed) {
    const double factor = sec_pow(alpha, 2.0) * std::sqrt(kh);
    r.params.kappa = std::sqrt(kh);
    finish_loewner(r, phi_reinv, factor * phi_reinva, c.tol);
  } else {
    r.params.kappa = kh;
    finish_loewner(r, phi_reinva, kh * phi_reinv, c.tol);
  }
  out.push_back(std::move(r));
}

void eval_choi(const Ctx& c, bool squared, std::vector<CheckResult>& out) {
  CheckResult r = base_result(squared ? "CHOI2" : "CHOI", c.in);
  if (!c.need_sector_pair(r) || !c.need_normalized(r, c.in.lin_map)) {
    out.push_back(std::move(r));
    return;
  }
  const CMatrix& x = c.re_inv_a();  // positive definite for accretive input
  const CMatrix phi_x =
      c.in.mat("map.re_inv_a", [&] { return apply_map1(c.in.lin_map, x); });
  const CMatrix phi_xinv = c.in.mat("map.re_inv_a.inv", [&] {
    return apply_map1(c.in.lin_map, inverse(x));
  });
  const CMatrix phi_x_inv =
      c.in.mat("map.re_inv_a^-1", [&] { return inverse(phi_x); });
  if (!squared) {
    finish_loewner(r, phi_x_inv, phi_xinv, c.tol);
  } else {
    const auto& ex = c.in.eigs("sec_a.inv.re", [&] { return x; });
    const double m = ex.back(), M = ex.front();
    set_bounds(r, m, M);
    const double kh = kantorovich(M / m);
    r.params.kappa = kh;
    finish_loewner(r, herm_square(phi_x_inv), kh * herm_square(phi_xinv),
                   c.tol);
  }
  out.push_back(std::move(r));
}

void eval_cor8(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("COR8", c.in);
  double alpha;
  if (!c.need_sector_pair(r) || !c.effective_alpha(r, c.in.cert_a, &alpha) ||
      !c.need_normalized(r, c.in.lin_map)) {
    out.push_back(std::move(r));
    return;
  }
  double m, M;
  c.a_bounds(&m, &M);
  set_bounds(r, m, M);
  const double root_k = std::sqrt(kantorovich(M / m));
  r.params.kappa = root_k;
  const CMatrix x = c.in.mat("map.re_a.inv", [&] {
    return apply_map1(c.in.lin_map, inverse(c.re_a()));
  });
  const CMatrix y = c.in.mat("map.re_inv_a^-1", [&] {
    return inverse(apply_map1(c.in.lin_map, c.re_inv_a()));
  });
  const CMatrix s = x * y + y * x;
  finish_scalar(r, op_norm(s), 2.0 * sec_pow(alpha, 2.0) * root_k, c.tol);
  out.push_back(std::move(r));
}

// ---------------------------------------------------------------------------
// Positive multilinear map comparisons over the generated operand tuples.

struct TupleData {
  CMatrix phi_re;        // Phi(Re A_1, ..., Re A_k)
  CMatrix phi_re_inv;    // Phi(Re A_1, ...)^{-1}
  CMatrix phi_inv_re;    // Phi(Re(A_1^{-1}), ...)
  CMatrix phi_re_inv_s;  // Phi(Re^{-1}(A_1), ...)
};

const CMatrix& tuple_mat(const Ctx& c, int idx, const char* what,
                         const std::function<CMatrix()>& make) {
  char key[64];
  std::snprintf(key, sizeof key, "tuple%d.%s", idx, what);
  return c.in.mat(key, make);
}

TupleData tuple_data(const Ctx& c, int idx) {
  const TupleFamily& t = c.in.tuples[static_cast<std::size_t>(idx)];
  TupleData d;
  d.phi_re = tuple_mat(c, idx, "phi_re", [&] {
    std::vector<CMatrix> args;
    for (const CMatrix& op : t.ops) args.push_back(re_part(op));
    return apply_map(t.map, args);
  });
  d.phi_re_inv =
      tuple_mat(c, idx, "phi_re.inv", [&] { return inverse(d.phi_re); });
  d.phi_inv_re = tuple_mat(c, idx, "phi_inv_re", [&] {
    std::vector<CMatrix> args;
    for (const CMatrix& op : t.ops) args.push_back(re_part(inverse(op)));
    return apply_map(t.map, args);
  });
  d.phi_re_inv_s = tuple_mat(c, idx, "phi_re_inv_s", [&] {
    std::vector<CMatrix> args;
    for (const CMatrix& op : t.ops) args.push_back(inverse(re_part(op)));
    return apply_map(t.map, args);
  });
  return d;
}

// Shared per-tuple preamble; returns false when the result is already final.
bool tuple_preamble(const Ctx& c, const TupleFamily& t, CheckResult& r) {
  r.params.k = t.arity;
  if (!c.in.sector_ok || !(t.m > 0.0)) {
    set_vacuous(r, "tuple operand is not accretive");
    return false;
  }
  if (!c.need_normalized(r, t.map)) return false;
  set_bounds(r, t.m, t.M);
  return true;
}

void eval_mf12(const Ctx& c, std::vector<CheckResult>& out) {
  for (std::size_t i = 0; i < c.in.tuples.size(); ++i) {
    const TupleFamily& t = c.in.tuples[i];
    CheckResult r = base_result("MF12", c.in);
    if (!tuple_preamble(c, t, r)) {
      out.push_back(std::move(r));
      continue;
    }
    // Positive-definite tuple: the Hermitian parts themselves.
    const double hk = std::pow(t.M / t.m, t.arity);
    r.params.kappa = kantorovich(hk);
    const TupleData d = tuple_data(c, static_cast<int>(i));
    finish_loewner(r, d.phi_re_inv_s, kantorovich(hk) * d.phi_re_inv, c.tol);
    out.push_back(std::move(r));
  }
}

void eval_mf2(const Ctx& c, std::vector<CheckResult>& out) {
  for (std::size_t i = 0; i < c.in.tuples.size(); ++i) {
    const TupleFamily& t = c.in.tuples[i];
    CheckResult r = base_result("MF2", c.in);
    if (!tuple_preamble(c, t, r)) {
      out.push_back(std::move(r));
      continue;
    }
    const double hk = std::pow(t.M / t.m, t.arity);
    r.params.kappa = kantorovich(hk);
    const TupleData d = tuple_data(c, static_cast<int>(i));
    finish_loewner(r, d.phi_inv_re, kantorovich(hk) * d.phi_re_inv, c.tol);
    out.push_back(std::move(r));
  }
}

void eval_mf4(const Ctx& c, std::vector<CheckResult>& out) {
  for (std::size_t i = 0; i < c.in.tuples.size(); ++i) {
    const TupleFamily& t = c.in.tuples[i];
    CheckResult r = base_result("MF4", c.in);
    if (!tuple_preamble(c, t, r)) {
      out.push_back(std::move(r));
      continue;
    }
    const double mk = std::pow(t.m, t.arity);
    const double Mk = std::pow(t.M, t.arity);
    const TupleData d = tuple_data(c, static_cast<int>(i));
    const CMatrix lhs = Mk * mk * d.phi_re_inv_s + d.phi_re;
    finish_loewner(r, lhs, (Mk + mk) * CMatrix::identity(t.map.l), c.tol);
    out.push_back(std::move(r));
  }
}

void eval_tmm(const Ctx& c, std::vector<CheckResult>& out) {
  for (std::size_t i = 0; i < c.in.tuples.size(); ++i) {
    const TupleFamily& t = c.in.tuples[i];
    CheckResult r = base_result("TMM", c.in);
    if (!tuple_preamble(c, t, r)) {
      out.push_back(std::move(r));
      continue;
    }
    const double hk = std::pow(t.M / t.m, t.arity);
    const double k2 = sq(kantorovich(hk));
    r.params.kappa = k2;
    const TupleData d = tuple_data(c, static_cast<int>(i));
    finish_loewner(r, herm_square(d.phi_inv_re),
                   k2 * herm_square(d.phi_re_inv), c.tol);
    out.push_back(std::move(r));
  }
}

void eval_re1(const Ctx& c, std::vector<CheckResult>& out) {
  for (std::size_t i = 0; i < c.in.tuples.size(); ++i) {
    const TupleFamily& t = c.in.tuples[i];
    CheckResult r = base_result("RE1", c.in);
    if (c.p.p <= 0.0) {
      r.params.k = t.arity;
      set_vacuous(r, "power p must be positive");
      out.push_back(std::move(r));
      continue;
    }
    r.severity = c.p.p > 2.0 + 1e-12 ? Severity::finding : Severity::proven;
    if (!tuple_preamble(c, t, r)) {
      out.push_back(std::move(r));
      continue;
    }
    r.params.p = c.p.p;
    const double hk = std::pow(t.M / t.m, t.arity);
    const double kp = std::pow(kantorovich(hk), c.p.p);
    r.params.kappa = kp;
    const TupleData d = tuple_data(c, static_cast<int>(i));
    finish_loewner(r, hpd_power(d.phi_inv_re, c.p.p),
                   kp * hpd_power(d.phi_re, -c.p.p), c.tol);
    out.push_back(std::move(r));
  }
}

void eval_nat(const Ctx& c, std::vector<CheckResult>& out) {
  CheckResult r = base_result("NAT", c.in);
  double alpha;
  if (!sector_pair_alpha(c, r, &alpha)) {
    out.push_back(std::move(r));
    return;
  }
  double m, M;
  c.pair_bounds(&m, &M);
  set_bounds(r, m, M);
  r.params.kappa = kantorovich(M / m);
  finish_scalar(r, 1.0, kantorovich(M / m) / std::cos(alpha), c.tol);
  out.push_back(std::move(r));
}

}  // namespace

std::vector<CheckResult> evaluate(const std::string& id, const Instance& inst,
                                  const CheckParams& params, double tol) {
  if (tol <= 0.0) throw InvalidInput("evaluate: tol must be positive");
  const Ctx c{inst, params, tol};
  std::vector<CheckResult> out;
  if (id == "GA1") eval_ga1(c, out);
  else if (id == "GA2") eval_ga2(c, out);
  else if (id == "GA3") eval_ga34(c, false, out);
  else if (id == "GA4") eval_ga34(c, true, out);
  else if (id == "L11S") eval_l11s(c, out);
  else if (id == "L11D") eval_l11d(c, out);
  else if (id == "L12S") eval_l12s(c, out);
  else if (id == "L12D") eval_l12d(c, out);
  else if (id == "L13") eval_l13(c, out);
  else if (id == "BK1") eval_bk1(c, out);
  else if (id == "AZ2") eval_az2(c, out);
  else if (id == "BK3") eval_bk3(c, out);
  else if (id == "LIN151") eval_lin151(c, out);
  else if (id == "TXL") eval_txl(c, out);
  else if (id == "TXR") eval_txr(c, out);
  else if (id == "REF9") eval_ref9(c, out);
  else if (id == "REF7") eval_ref7(c, out);
  else if (id == "REF8") eval_ref8(c, out);
  else if (id == "NF1") eval_nf1(c, out);
  else if (id == "NF11") eval_nf11(c, out);
  else if (id == "R1") eval_r1(c, out);
  else if (id == "SVHARM") eval_svharm(c, out);
  else if (id == "F6") eval_f6(c, out);
  else if (id == "F7") eval_f7(c, out);
  else if (id == "F90") eval_f90(c, out);
  else if (id == "D2233") eval_d2233(c, out);
  else if (id == "D2244") eval_d2244(c, out);
  else if (id == "D2255") eval_d2255(c, out);
  else if (id == "F10") eval_f10(c, out);
  else if (id == "F212") eval_f212(c, out);
  else if (id == "P22") eval_p22(c, out);
  else if (id == "DETSUP") eval_detsup(c, out);
  else if (id == "SQ") eval_sq(c, out);
  else if (id == "P31I") eval_p31(c, 1, out);
  else if (id == "P31II") eval_p31(c, 2, out);
  else if (id == "P31III") eval_p31iii(c, out);
  else if (id == "RIM") eval_rim(c, out);
  else if (id == "R7") eval_r7(c, out);
  else if (id == "FFF") eval_fff(c, false, out);
  else if (id == "FFFF") eval_fff(c, true, out);
  else if (id == "CHOI") eval_choi(c, false, out);
  else if (id == "CHOI2") eval_choi(c, true, out);
  else if (id == "COR8") eval_cor8(c, out);
  else if (id == "MF12") eval_mf12(c, out);
  else if (id == "MF2") eval_mf2(c, out);
  else if (id == "MF4") eval_mf4(c, out);
  else if (id == "TMM") eval_tmm(c, out);
  else if (id == "RE1") eval_re1(c, out);
  else if (id == "NAT") eval_nat(c, out);
  else throw InvalidInput("evaluate: unknown check id '" + id + "'");
  return out;
}

}  // namespace sectorix
