#include "sectorix/means.hpp"

#include <algorithm>
#include <cmath>

#include "sectorix/sector.hpp"

namespace sectorix {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEndpointBand = 1e-6;  // weights this close to 0/1 short-circuit

void check_weight(double v) {
  if (!(v >= 0.0) || !(v <= 1.0)) throw InvalidInput("mean weight v must lie in [0, 1]");
}

void check_pair(const CMatrix& a, const CMatrix& b, const char* who) {
  if (a.dim() != b.dim()) throw InvalidInput(std::string(who) + ": dimension mismatch");
}

void check_accretive_pair(const CMatrix& a, const CMatrix& b, const char* who) {
  if (!is_accretive(a).accretive || !is_accretive(b).accretive)
    throw InvalidInput(std::string(who) + ": operand is not accretive");
}

// Stable weighted integrand after t = e^s: the weight and the inverse are
// arranged so every factor stays bounded on its half-line.
//   s >= 0: e^{vs} (A^{-1} + e^s B^{-1})^{-1} = e^{(v-1)s} (e^{-s}A^{-1} + B^{-1})^{-1}
//   s <  0: e^{vs} (A^{-1} + e^s B^{-1})^{-1} as written.
struct Integrand {
  const CMatrix& ainv;
  const CMatrix& binv;
  InverseWorkspace ws;
  CMatrix m;  // scratch

  Integrand(const CMatrix& ai, const CMatrix& bi)
      : ainv(ai), binv(bi), ws(ai.dim()), m(ai.dim()) {}

  // Fills `out` with the s-dependent inverse; the per-weight scalar is
  // weight_scalar(v, s).
  void eval(double s, CMatrix& out) {
    const int n = m.dim();
    if (s >= 0.0) {
      const double e = std::exp(-s);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = e * ainv(i, j) + binv(i, j);
    } else {
      const double e = std::exp(s);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = ainv(i, j) + e * binv(i, j);
    }
    ws.invert(m, out);
  }

  static double weight_scalar(double v, double s) {
    return s >= 0.0 ? std::exp((v - 1.0) * s) : std::exp(v * s);
  }
};

}  // namespace

CMatrix harmonic_mean(const CMatrix& a, const CMatrix& b, double v) {
  check_pair(a, b, "harmonic_mean");
  check_weight(v);
  check_accretive_pair(a, b, "harmonic_mean");
  if (v == 0.0) return a;
  if (v == 1.0) return b;
  CMatrix s = (1.0 - v) * inverse(a);
  s += v * inverse(b);
  return inverse(s);
}

CMatrix arithmetic_mean(const CMatrix& a, const CMatrix& b, double v) {
  check_pair(a, b, "arithmetic_mean");
  check_weight(v);
  CMatrix s = (1.0 - v) * a;
  s += v * b;
  return s;
}

std::vector<CMatrix> geometric_mean_accretive_multi(const CMatrix& a, const CMatrix& b,
                                                    const std::vector<double>& vs,
                                                    const QuadControls& quad) {
  check_pair(a, b, "geometric_mean_accretive");
  if (!(quad.h_s > 0.0) || quad.h_s > 1.0)
    throw InvalidInput("geometric_mean_accretive: h_s must lie in (0, 1]");
  if (!(quad.eps_tail > 0.0) || quad.eps_tail > 1e-6)
    throw InvalidInput("geometric_mean_accretive: eps_tail must lie in (0, 1e-6]");
  if (!(quad.s_max > 0.0)) throw InvalidInput("geometric_mean_accretive: s_max must be positive");
  for (double v : vs) check_weight(v);

  const int n = a.dim();
  std::vector<CMatrix> results(vs.size());
  std::vector<size_t> active;  // indices that need the integral
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] <= kEndpointBand)
      results[i] = a;
    else if (vs[i] >= 1.0 - kEndpointBand)
      results[i] = b;
    else
      active.push_back(i);
  }
  if (active.empty()) return results;

  check_accretive_pair(a, b, "geometric_mean_accretive");
  const CMatrix ainv = inverse(a);
  const CMatrix binv = inverse(b);
  Integrand f(ainv, binv);

  const size_t na = active.size();
  std::vector<double> v_act(na);
  for (size_t i = 0; i < na; ++i) v_act[i] = vs[active[i]];

  // raw[i] accumulates sum_k w_{v_i}(s_k) g(s_k); the mean is
  // (sin(v pi)/pi) * h * raw[i] once the grid has converged.
  std::vector<CMatrix> raw(na, CMatrix(n));
  CMatrix g(n);
  const double h0 = quad.h_s;

  f.eval(0.0, g);
  for (size_t i = 0; i < na; ++i) raw[i] += g;  // weight_scalar(v, 0) = 1

  // Expand each half-line until, for every weight, the estimated dropped
  // tail is below eps_tail relative to what has accumulated. The estimate
  // sums a geometric series at the asymptotic decay rate, so it is only
  // trusted once the edge term has started decreasing.
  double edge[2] = {0.0, 0.0};  // [0] right extent, [1] left extent (positive)
  for (int side = 0; side < 2; ++side) {
    const double sign = side == 0 ? 1.0 : -1.0;
    std::vector<double> prev_term(na, frob_norm(g));
    double s_abs = 0.0;
    while (true) {
      s_abs += h0;
      if (s_abs > quad.s_max)
        throw ConvergenceError(
            "geometric_mean_accretive: half-range limit reached before the tail threshold");
      f.eval(sign * s_abs, g);
      const double gnorm = frob_norm(g);
      for (size_t i = 0; i < na; ++i) raw[i] += Integrand::weight_scalar(v_act[i], sign * s_abs) * g;

      bool done = s_abs >= 6.0;
      for (size_t i = 0; i < na; ++i) {
        const double term = Integrand::weight_scalar(v_act[i], sign * s_abs) * gnorm;
        const double rate = side == 0 ? 1.0 - v_act[i] : v_act[i];
        const double rho = std::exp(-rate * h0);
        const double tail_est = term * rho / (1.0 - rho);
        if (term >= prev_term[i] || tail_est >= quad.eps_tail * std::max(frob_norm(raw[i]), 1e-300))
          done = false;
        prev_term[i] = term;
      }
      if (done) break;
    }
    edge[side] = s_abs;
  }

  // Refine: T(h/2) = T(h)/2 + (h/2) * sum over odd midpoints, i.e. the raw
  // accumulators just gain the midpoint terms. Stop when every weight's
  // successive trapezoid values agree to 1e-10 relative.
  double h = h0;
  const int max_halvings = 6;
  bool converged = false;
  for (int halving = 0; halving < max_halvings && !converged; ++halving) {
    const double hh = h / 2.0;
    std::vector<CMatrix> mid(na, CMatrix(n));
    const long count = std::lround((edge[0] + edge[1]) / h);
    for (long k = 0; k < count; ++k) {
      const double s = -edge[1] + hh + static_cast<double>(k) * h;
      f.eval(s, g);
      for (size_t i = 0; i < na; ++i) mid[i] += Integrand::weight_scalar(v_act[i], s) * g;
    }
    converged = true;
    for (size_t i = 0; i < na; ++i) {
      CMatrix refined = raw[i];
      refined += mid[i];
      // Compare h * raw against hh * refined.
      CMatrix diff = h * raw[i];
      diff -= hh * refined;
      const double rel = frob_norm(diff) / std::max(1.0, hh * frob_norm(refined));
      if (rel >= 1e-10) converged = false;
      raw[i] = std::move(refined);
    }
    h = hh;
  }
  if (!converged)
    throw ConvergenceError("geometric_mean_accretive: step-halving limit reached");

  for (size_t i = 0; i < na; ++i) {
    const double scale = std::sin(v_act[i] * kPi) / kPi * h;
    results[active[i]] = scale * raw[i];
  }
  return results;
}

CMatrix geometric_mean_accretive(const CMatrix& a, const CMatrix& b, double v,
                                 const QuadControls& quad) {
  return geometric_mean_accretive_multi(a, b, {v}, quad).front();
}

CMatrix geometric_mean_hpd(const CMatrix& a, const CMatrix& b, double v) {
  check_pair(a, b, "geometric_mean_hpd");
  check_weight(v);
  const double scale = std::max({1.0, frob_norm(a), frob_norm(b)});
  if (frob_norm(im_part(a)) > 1e-12 * scale || frob_norm(im_part(b)) > 1e-12 * scale)
    throw InvalidInput("geometric_mean_hpd: operand is not Hermitian");
  if (v == 0.0) return a;
  if (v == 1.0) return b;
  const CMatrix ah = re_part(a);
  const CMatrix bh = re_part(b);
  const CMatrix root = hpd_power(ah, 0.5);       // throws when not PD
  const CMatrix root_inv = hpd_power(ah, -0.5);
  const CMatrix inner = hpd_power(re_part(root_inv * bh * root_inv), v);
  return re_part(root * inner * root);
}

double kantorovich(double h) {
  if (!(h > 0.0)) throw InvalidInput("kantorovich: h must be positive");
  return (h + 1.0) * (h + 1.0) / (4.0 * h);
}

double kappa(double m, double M) {
  if (!(m > 0.0) || !(M >= m)) throw InvalidInput("kappa: need 0 < m <= M");
  const double km = kantorovich(m);
  const double kM = kantorovich(M);
  return std::max(km * km, kM * kM);
}

}  // namespace sectorix
