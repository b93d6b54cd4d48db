#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "sectorix/cmat.hpp"
#include "sectorix/means.hpp"
#include "sectorix/posmap.hpp"
#include "sectorix/sector.hpp"

namespace sectorix {

// Severity of a violated check. A `proven` violation is a genuine failure;
// a `finding` marks statements whose stated constant is not backed by a
// complete argument, so violations are reported separately and do not fail
// a run.
enum class Severity { proven, finding };

const char* severity_name(Severity s);

// Parameters a check was evaluated with. NaN / 0 / empty mean "not used".
struct UsedParams {
  static constexpr double unset = std::numeric_limits<double>::quiet_NaN();
  double v = unset;
  int k = 0;
  double r = unset;
  double p = unset;
  double alpha = unset;
  double m = unset;
  double M = unset;
  double h = unset;
  double kappa = unset;
  std::string f;
};

// Outcome of one inequality evaluation. For chains, each link is its own
// result with a ".<idx>" suffix on the id. lhs/rhs hold one entry for scalar
// comparisons and one entry per index j for the per-singular-value forms.
struct CheckResult {
  std::string id;
  bool hypotheses_met = true;
  std::string vacuous_reason;
  std::vector<double> lhs, rhs;
  double slack = 0.0;
  bool holds = true;
  Severity severity = Severity::proven;
  UsedParams params;
  std::uint64_t witness = 0;
};

// Requested evaluation parameters (grid point). alpha_override replaces the
// certified angle when it is at least as large; smaller values make the
// check vacuous.
struct CheckParams {
  int k = 1;
  double v = 0.5;
  double r = 1.0;
  double p = 1.0;
  std::string f = "t";
  double alpha_override = -1.0;
  QuadControls quad{};
};

// Which grid axes a catalogue entry consumes.
struct CheckInfo {
  std::string id;
  bool uses_k = false;
  bool uses_v = false;
  bool uses_r = false;
  bool uses_p = false;
  bool uses_f = false;
  bool uses_map = false;  // evaluated once per generated map arity
  int links = 1;          // number of results one evaluation emits
};

// The full list of dispatchable check ids, in catalogue order.
const std::vector<CheckInfo>& catalogue();

// Scalar handles for the operator-concave function family used by GA2.
// Names: "t", "sqrt", "t/(1+t)", "log1p". Throws InvalidInput on others.
std::function<double(double)> concave_catalogue(const std::string& name);

// Controls for building one instance bundle (all input families a trial
// needs, generated deterministically from `seed`).
struct InstanceConfig {
  int n = 3;
  double alpha = 0.5;
  double cond_x = 10.0;
  std::vector<int> map_arities = {1, 2};
  int map_l = 0;  // 0 -> n
  std::uint64_t seed = 0;
};

struct TupleFamily {
  int arity = 1;
  std::vector<CMatrix> ops;  // accretive operands
  MapSpec map;               // normalized positive (multi)linear map
  double m = 0, M = 0;       // realized common bounds on the real parts
};

// One trial's worth of generated inputs plus result caches. The caches make
// repeated evaluations over k/v/r/p grids cheap; they never change observable
// values.
struct Instance {
  InstanceConfig cfg;

  CMatrix any_a, any_b;    // arbitrary complex / Hermitian indefinite
  CMatrix psd_a, psd_b;    // positive definite pair
  CMatrix sq_a, sq_b;      // 0 < sq_a <= sq_b, bounds read from sq_a
  CMatrix sec_a, sec_b;    // sector pair
  double cert_a = 0, cert_b = 0;  // certified half-angles of sec_a, sec_b
  bool sector_ok = true;          // false when sec_a/sec_b fail accretivity
  std::string sector_reason;
  CMatrix p22_a, p22_b;    // sandwich-constructed pair
  double p22_m = 0, p22_M = 0;
  double cert_p22 = 0;
  MapSpec lin_map;         // normalized positive linear map (arity 1)
  std::vector<TupleFamily> tuples;

  Instance();

  // Cached derived objects, keyed by short labels (keys embed any parameter
  // the object depends on).
  const CMatrix& mat(const std::string& key,
                     const std::function<CMatrix()>& make) const;
  const SingularSpectrum& svs(const std::string& key,
                              const std::function<CMatrix()>& make) const;
  const std::vector<double>& eigs(const std::string& key,
                                  const std::function<CMatrix()>& make) const;

  // Weighted geometric means of the sector pair (and of its real parts),
  // cached per weight. prefetch_geo computes a whole weight grid in one
  // shared-quadrature pass.
  const CMatrix& geo(double v, const QuadControls& quad = {}) const;
  const CMatrix& geo_re(double v) const;
  void prefetch_geo(const std::vector<double>& vs,
                    const QuadControls& quad = {}) const;

 private:
  mutable std::map<std::string, CMatrix> mat_cache_;
  mutable std::map<std::string, SingularSpectrum> sv_cache_;
  mutable std::map<std::string, std::vector<double>> eig_cache_;
  mutable std::map<long long, CMatrix> geo_cache_, geo_re_cache_;
};

// Deterministically generates every input family for one trial.
Instance make_instance(const InstanceConfig& cfg);

// Builds an instance around a user-supplied pair (both pair slots and the
// single-operand families use these matrices). Maps default to the identity
// compression. Non-accretive inputs are accepted; sector checks then report
// vacuous.
Instance make_instance_from_pair(const CMatrix& a, const CMatrix& b,
                                 std::uint64_t seed = 0);

// Evaluates one catalogue id at one grid point. Chains emit one result per
// link. Throws InvalidInput for unknown ids or out-of-range parameters.
std::vector<CheckResult> evaluate(const std::string& id, const Instance& inst,
                                  const CheckParams& params = {},
                                  double tol = 1e-8);

// Fixed 3x3 demonstrations that the unweighted product bounds fail for
// general Hermitian matrices.
struct CounterexampleResult {
  std::string id;          // "sv" or "det"
  std::string first_label, second_label, product_label;
  double first = 0, second = 0, product = 0;
  bool violated = false;   // min(first, second) > product
  CMatrix a, b;
};

CounterexampleResult counterexample_sv();
CounterexampleResult counterexample_det();

}  // namespace sectorix
