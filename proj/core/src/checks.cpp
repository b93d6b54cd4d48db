#include "sectorix/checks.hpp"

#include <cmath>
#include <utility>

#include "sectorix/rng.hpp"

namespace sectorix {

const char* severity_name(Severity s) {
  return s == Severity::proven ? "proven" : "finding";
}

const std::vector<CheckInfo>& catalogue() {
  //                         id        k      v      r      p      f      map   links
  static const std::vector<CheckInfo> table = {
      {"GA1", true, false, true, false, false, false, 1},
      {"GA2", true, false, false, false, true, false, 1},
      {"GA3", true, false, false, false, false, false, 1},
      {"GA4", true, false, false, false, false, false, 1},
      {"L11S", false, false, false, false, false, false, 1},
      {"L11D", false, false, false, false, false, false, 1},
      {"L12S", false, false, false, false, false, false, 1},
      {"L12D", false, false, false, false, false, false, 1},
      {"L13", false, false, false, false, false, false, 2},
      {"BK1", false, false, false, false, false, false, 1},
      {"AZ2", false, false, true, false, false, false, 1},
      {"BK3", false, false, false, false, false, false, 2},
      {"LIN151", false, false, false, false, false, false, 2},
      {"TXL", false, true, false, false, false, false, 1},
      {"TXR", false, true, false, false, false, false, 1},
      {"REF9", false, false, false, false, false, false, 1},
      {"REF7", false, true, false, false, false, false, 1},
      {"REF8", false, false, false, false, false, false, 1},
      {"NF1", false, true, false, false, false, false, 1},
      {"NF11", false, true, false, false, false, false, 1},
      {"R1", false, true, false, false, false, false, 1},
      {"SVHARM", true, true, false, false, false, false, 3},
      {"F6", true, false, false, false, false, false, 1},
      {"F7", true, false, false, false, false, false, 1},
      {"F90", true, false, false, false, false, false, 1},
      {"D2233", false, false, false, false, false, false, 1},
      {"D2244", false, false, false, false, false, false, 3},
      {"D2255", false, false, false, false, false, false, 3},
      {"F10", false, false, false, false, false, false, 1},
      {"F212", false, false, false, false, false, false, 1},
      {"P22", false, false, false, false, false, false, 1},
      {"DETSUP", false, false, false, false, false, false, 1},
      {"SQ", false, false, false, false, false, false, 1},
      {"P31I", false, true, false, false, false, false, 1},
      {"P31II", false, true, false, false, false, false, 1},
      {"P31III", false, false, false, false, false, false, 1},
      {"RIM", false, true, false, false, false, false, 1},
      {"R7", false, true, false, false, false, false, 2},
      {"FFF", false, false, false, false, false, false, 1},
      {"FFFF", false, false, false, false, false, false, 1},
      {"CHOI", false, false, false, false, false, false, 1},
      {"CHOI2", false, false, false, false, false, false, 1},
      {"COR8", false, false, false, false, false, false, 1},
      {"MF12", false, false, false, false, false, true, 1},
      {"MF2", false, false, false, false, false, true, 1},
      {"MF4", false, false, false, false, false, true, 1},
      {"TMM", false, false, false, false, false, true, 1},
      {"RE1", false, false, false, true, false, true, 1},
      {"NAT", false, false, false, false, false, false, 1},
  };
  return table;
}

std::function<double(double)> concave_catalogue(const std::string& name) {
  if (name == "t") return [](double t) { return t; };
  if (name == "sqrt") return [](double t) { return std::sqrt(t); };
  if (name == "t/(1+t)") return [](double t) { return t / (1.0 + t); };
  if (name == "log1p") return [](double t) { return std::log1p(t); };
  throw InvalidInput("concave_catalogue: unknown function name '" + name +
                     "' (expected t, sqrt, t/(1+t), log1p)");
}

Instance::Instance() = default;

const CMatrix& Instance::mat(const std::string& key,
                             const std::function<CMatrix()>& make) const {
  auto it = mat_cache_.find(key);
  if (it == mat_cache_.end()) it = mat_cache_.emplace(key, make()).first;
  return it->second;
}

const SingularSpectrum& Instance::svs(
    const std::string& key, const std::function<CMatrix()>& make) const {
  auto it = sv_cache_.find(key);
  if (it == sv_cache_.end())
    it = sv_cache_.emplace(key, singular_values(make())).first;
  return it->second;
}

const std::vector<double>& Instance::eigs(
    const std::string& key, const std::function<CMatrix()>& make) const {
  auto it = eig_cache_.find(key);
  if (it == eig_cache_.end())
    it = eig_cache_.emplace(key, herm_eigenvalues(make())).first;
  return it->second;
}

namespace {

long long weight_key(double v) {
  return static_cast<long long>(std::llround(v * 1e12));
}

}  // namespace

const CMatrix& Instance::geo(double v, const QuadControls& quad) const {
  auto it = geo_cache_.find(weight_key(v));
  if (it == geo_cache_.end())
    it = geo_cache_
             .emplace(weight_key(v), geometric_mean_accretive(sec_a, sec_b, v, quad))
             .first;
  return it->second;
}

const CMatrix& Instance::geo_re(double v) const {
  auto it = geo_re_cache_.find(weight_key(v));
  if (it == geo_re_cache_.end())
    it = geo_re_cache_
             .emplace(weight_key(v),
                      geometric_mean_hpd(re_part(sec_a), re_part(sec_b), v))
             .first;
  return it->second;
}

void Instance::prefetch_geo(const std::vector<double>& vs,
                            const QuadControls& quad) const {
  std::vector<double> missing;
  for (double v : vs)
    if (geo_cache_.find(weight_key(v)) == geo_cache_.end()) missing.push_back(v);
  if (missing.empty()) return;
  std::vector<CMatrix> means =
      geometric_mean_accretive_multi(sec_a, sec_b, missing, quad);
  for (std::size_t i = 0; i < missing.size(); ++i)
    geo_cache_.emplace(weight_key(missing[i]), std::move(means[i]));
}

namespace {

// Stable per-family seed streams.
std::uint64_t fam(std::uint64_t seed, std::uint64_t idx) {
  return derive_seed(seed, idx);
}

MapKind cycle_kind(std::uint64_t u) {
  switch (u % 3) {
    case 0: return MapKind::compression;
    case 1: return MapKind::kraus;
    default: return MapKind::trace;
  }
}

}  // namespace

Instance make_instance(const InstanceConfig& cfg) {
  if (cfg.n < 1) throw InvalidInput("make_instance: n must be >= 1");
  if (!(cfg.alpha >= 0.0) || cfg.alpha >= 1.5707963267948966)
    throw InvalidInput("make_instance: alpha must lie in [0, pi/2)");
  Instance inst;
  inst.cfg = cfg;
  const int n = cfg.n;
  const std::uint64_t seed = cfg.seed;

  {
    Rng r(fam(seed, 0));
    inst.any_a = ginibre(n, r);
  }
  {
    Rng r(fam(seed, 1));
    inst.any_b = random_hermitian(n, r);
  }
  {
    Rng r(fam(seed, 2));
    const double ma = 0.2 + 0.6 * r.uniform01();
    const double Ma = ma * (1.5 + 8.5 * r.uniform01());
    inst.psd_a = gen_hpd(n, ma, Ma, fam(seed, 3));
    const double mb = 0.2 + 0.6 * r.uniform01();
    const double Mb = mb * (1.5 + 8.5 * r.uniform01());
    inst.psd_b = gen_hpd(n, mb, Mb, fam(seed, 4));
  }
  {
    Rng r(fam(seed, 5));
    const double m0 = 0.3 + 0.4 * r.uniform01();
    const double M0 = m0 * (1.5 + 7.0 * r.uniform01());
    inst.sq_a = gen_hpd(n, m0, M0, fam(seed, 6));
    CMatrix y = ginibre(n, r);
    const double scale = (0.2 + 0.8 * r.uniform01()) / n;
    inst.sq_b = inst.sq_a + scale * (y.adjoint() * y);
  }
  {
    SectorGenSpec gs;
    gs.n = n;
    gs.alpha_max = cfg.alpha;
    gs.cond_x = cfg.cond_x;
    gs.force_extremal = true;
    gs.seed = fam(seed, 7);
    const SectorCertificate ca = gen_sector(gs);
    gs.seed = fam(seed, 8);
    const SectorCertificate cb = gen_sector(gs);
    inst.sec_a = ca.a;
    inst.sec_b = cb.a;
    inst.cert_a = ca.alpha;
    inst.cert_b = cb.alpha;
  }
  {
    SectorGenSpec gs;
    gs.n = n;
    gs.alpha_max = cfg.alpha;
    gs.cond_x = cfg.cond_x;
    gs.force_extremal = true;
    gs.seed = fam(seed, 9);
    const SectorCertificate cpa = gen_sector(gs);
    inst.p22_a = cpa.a;
    Rng r(fam(seed, 10));
    const double m0 = 0.25 + 0.5 * r.uniform01();
    const double M0 = m0 * (1.3 + 2.2 * r.uniform01());
    const CMatrix c = gen_hpd(n, m0, M0, fam(seed, 11));
    const CMatrix rinv = re_part(inverse(inst.p22_a));
    const CMatrix rh = hpd_power(rinv, 0.5);
    const CMatrix re_binv = re_part(rh * c * rh);
    CMatrix im_binv = CMatrix(n);  // zero
    if (cfg.alpha > 0.0) {
      CMatrix w = random_hermitian(n, r);
      const double lim = std::tan(cfg.alpha) * herm_eigen_min(re_binv);
      const double t = 0.8 * r.uniform01() * lim / std::max(1e-300, op_norm(w));
      im_binv = t * w;
    }
    inst.p22_b = inverse(re_binv + cd(0, 1) * im_binv);
    // Read the sandwich bounds back from the realized relative spectrum.
    const CMatrix rmh = hpd_power(rinv, -0.5);
    const std::vector<double> rel = herm_eigenvalues(re_part(rmh * re_binv * rmh));
    inst.p22_m = rel.back();
    inst.p22_M = rel.front();
    inst.cert_p22 = std::max(cpa.alpha, certify(inst.p22_b).alpha);
  }
  {
    const int l = cfg.map_l > 0 ? cfg.map_l : n;
    inst.lin_map = gen_map(cycle_kind(fam(seed, 12)), n, std::min(l, n), 1,
                           fam(seed, 13));
    int idx = 0;
    for (int arity : cfg.map_arities) {
      TupleFamily t;
      t.arity = arity;
      double m = 0, M = 0;
      for (int j = 0; j < arity; ++j) {
        SectorGenSpec gs;
        gs.n = n;
        gs.alpha_max = cfg.alpha;
        gs.cond_x = cfg.cond_x;
        gs.force_extremal = true;
        gs.seed = fam(seed, 100 + 10 * idx + static_cast<std::uint64_t>(j));
        t.ops.push_back(gen_sector(gs).a);
        const std::vector<double> ev = herm_eigenvalues(re_part(t.ops.back()));
        if (j == 0 || ev.back() < m) m = ev.back();
        if (j == 0 || ev.front() > M) M = ev.front();
      }
      t.m = m;
      t.M = M;
      if (arity == 1) {
        t.map = gen_map(cycle_kind(fam(seed, 200 + idx)), n, std::min(l, n), 1,
                        fam(seed, 300 + idx));
      } else {
        long long cap = 1;
        for (int j = 0; j < arity; ++j) cap *= n;
        const int lt = static_cast<int>(std::min<long long>(l, cap));
        t.map = gen_map(MapKind::tensor_compression, n, lt, arity,
                        fam(seed, 300 + idx));
      }
      inst.tuples.push_back(std::move(t));
      ++idx;
    }
  }
  return inst;
}

Instance make_instance_from_pair(const CMatrix& a, const CMatrix& b,
                                 std::uint64_t seed) {
  if (a.dim() != b.dim())
    throw InvalidInput("make_instance_from_pair: dimension mismatch");
  InstanceConfig cfg;
  cfg.n = a.dim();
  cfg.alpha = 0.0;
  cfg.seed = seed;
  Instance inst;
  inst.cfg = cfg;
  inst.any_a = a;
  inst.any_b = b;
  inst.psd_a = a;
  inst.psd_b = b;
  inst.sq_a = a;
  inst.sq_b = b;
  inst.sec_a = a;
  inst.sec_b = b;
  inst.p22_a = a;
  inst.p22_b = b;
  try {
    inst.cert_a = certify(a).alpha;
    inst.cert_b = certify(b).alpha;
    inst.cert_p22 = std::max(inst.cert_a, inst.cert_b);
    const CMatrix ra = re_part(inverse(a));
    const CMatrix rb = re_part(inverse(b));
    const CMatrix rmh = hpd_power(ra, -0.5);
    const std::vector<double> rel = herm_eigenvalues(re_part(rmh * rb * rmh));
    inst.p22_m = rel.back();
    inst.p22_M = rel.front();
  } catch (const InvalidInput& e) {
    inst.sector_ok = false;
    inst.sector_reason = e.what();
  } catch (const NumericalError& e) {
    inst.sector_ok = false;
    inst.sector_reason = e.what();
  }
  inst.lin_map = identity_compression(cfg.n);
  TupleFamily t;
  t.arity = 1;
  t.ops.push_back(a);
  if (inst.sector_ok) {
    const std::vector<double> ev = herm_eigenvalues(re_part(a));
    t.m = ev.back();
    t.M = ev.front();
  }
  t.map = identity_compression(cfg.n);
  inst.tuples.push_back(std::move(t));
  return inst;
}

}  // namespace sectorix
