#include "sectorix/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <utility>

#include "sectorix/rng.hpp"

namespace sectorix {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Ids whose evaluation pulls the quadrature geometric mean; their presence
// decides whether instances prefetch the whole weight grid in one pass.
bool uses_quadrature_mean(const std::string& id) {
  static const std::set<std::string> users{"R1",  "TXL", "TXR",  "NF1", "NF11",
                                           "R7",  "RIM", "P31I", "P31II"};
  return users.count(id) != 0;
}

struct OrderedViolation {
  std::uint64_t ordinal;  // global evaluation index: stable across threads
  Violation v;
};

struct Accumulator {
  std::map<std::string, ResultRow> rows;
  std::vector<OrderedViolation> failures;
  std::vector<OrderedViolation> findings;
};

void merge_min(ResultRow& into, double slack, std::uint64_t seed) {
  if (slack < into.min_slack ||
      (slack == into.min_slack && seed < into.worst_seed)) {
    into.min_slack = slack;
    into.worst_seed = seed;
  }
}

void merge_rows(Accumulator& into, const Accumulator& from) {
  for (const auto& [id, row] : from.rows) {
    ResultRow& dst = into.rows[id];
    dst.id = id;
    dst.evals += row.evals;
    dst.passes += row.passes;
    dst.vacuous += row.vacuous;
    if (row.evals > row.vacuous) merge_min(dst, row.min_slack, row.worst_seed);
  }
  into.failures.insert(into.failures.end(), from.failures.begin(),
                       from.failures.end());
  into.findings.insert(into.findings.end(), from.findings.begin(),
                       from.findings.end());
}

std::vector<CheckInfo> resolve_ids(const SweepConfig& cfg) {
  const auto& cat = catalogue();
  if (cfg.ids.empty() ||
      (cfg.ids.size() == 1 && cfg.ids.front() == "all"))
    return cat;
  std::vector<CheckInfo> picked;
  for (const std::string& id : cfg.ids) {
    const auto it =
        std::find_if(cat.begin(), cat.end(),
                     [&](const CheckInfo& info) { return info.id == id; });
    if (it == cat.end())
      throw InvalidInput("sweep: unknown check id '" + id + "'");
    if (std::find_if(picked.begin(), picked.end(), [&](const CheckInfo& p) {
          return p.id == id;
        }) == picked.end())
      picked.push_back(*it);
  }
  return picked;
}

void validate(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw InvalidInput("sweep: trials must be >= 1");
  if (!(cfg.tol > 0.0)) throw InvalidInput("sweep: tol must be positive");
  if (cfg.n_values.empty()) throw InvalidInput("sweep: n_values is empty");
  for (int n : cfg.n_values)
    if (n < 1) throw InvalidInput("sweep: n values must be >= 1");
  if (cfg.alphas.empty()) throw InvalidInput("sweep: alphas is empty");
  for (double a : cfg.alphas)
    if (!(a >= 0.0) || !(a < kHalfPi))
      throw InvalidInput("sweep: alpha values must lie in [0, pi/2)");
  if (cfg.v_grid.empty()) throw InvalidInput("sweep: v_grid is empty");
  if (cfg.r_grid.empty()) throw InvalidInput("sweep: r_grid is empty");
  if (cfg.p_grid.empty()) throw InvalidInput("sweep: p_grid is empty");
  if (cfg.f_names.empty()) throw InvalidInput("sweep: f_names is empty");
  if (cfg.map_arities.empty())
    throw InvalidInput("sweep: map_arities is empty");
  for (int k : cfg.map_arities)
    if (k < 1) throw InvalidInput("sweep: map arities must be >= 1");
  if (cfg.threads < 0) throw InvalidInput("sweep: threads must be >= 0");
  if (!(cfg.cond_x >= 1.0))
    throw InvalidInput("sweep: cond_x must be >= 1");
}

unsigned resolve_threads(int configured) {
  if (configured > 0) return static_cast<unsigned>(configured);
  if (const char* env = std::getenv("SECTORIX_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0)
      return static_cast<unsigned>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Evaluates one id on one instance over the parameter grids its catalogue
// entry consumes, updating the worker-local accumulator.
void run_check(const CheckInfo& info, const Instance& inst,
               const SweepConfig& cfg, std::uint64_t unit,
               std::uint64_t* intra, Accumulator& acc) {
  static const std::vector<double> one{1.0};
  static const std::vector<std::string> linear{"t"};
  const std::vector<double>& vs = info.uses_v ? cfg.v_grid : one;
  const std::vector<double>& rs = info.uses_r ? cfg.r_grid : one;
  const std::vector<double>& ps = info.uses_p ? cfg.p_grid : one;
  const std::vector<std::string>& fs = info.uses_f ? cfg.f_names : linear;
  const int kmax = info.uses_k ? inst.cfg.n : 1;

  for (int k = 1; k <= kmax; ++k)
    for (double v : vs)
      for (double r : rs)
        for (double p : ps)
          for (const std::string& f : fs) {
            CheckParams cp;
            cp.k = k;
            cp.v = v;
            cp.r = r;
            cp.p = p;
            cp.f = f;
            cp.quad = cfg.quad;
            for (const CheckResult& res :
                 evaluate(info.id, inst, cp, cfg.tol)) {
              const std::uint64_t ordinal = unit * 1000000ull + (*intra)++;
              ResultRow& row = acc.rows[res.id];
              row.id = res.id;
              ++row.evals;
              if (!res.hypotheses_met) {
                ++row.vacuous;
                continue;
              }
              if (res.holds) ++row.passes;
              merge_min(row, res.slack, inst.cfg.seed);
              if (!res.holds) {
                Violation viol;
                viol.id = res.id;
                viol.severity = res.severity;
                viol.n = inst.cfg.n;
                viol.alpha = inst.cfg.alpha;
                viol.seed = inst.cfg.seed;
                viol.slack = res.slack;
                viol.params = res.params;
                auto& sink = res.severity == Severity::proven ? acc.failures
                                                              : acc.findings;
                sink.push_back({ordinal, std::move(viol)});
              }
            }
          }
}

}  // namespace

Report sweep(const SweepConfig& config) {
  validate(config);
  const std::vector<CheckInfo> infos = resolve_ids(config);

  bool want_prefetch = false;
  for (const CheckInfo& info : infos)
    if (uses_quadrature_mean(info.id)) want_prefetch = true;
  std::vector<double> prefetch_vs = config.v_grid;
  prefetch_vs.push_back(0.5);  // refinement gap term
  std::sort(prefetch_vs.begin(), prefetch_vs.end());
  prefetch_vs.erase(std::unique(prefetch_vs.begin(), prefetch_vs.end()),
                    prefetch_vs.end());

  const std::uint64_t cells =
      static_cast<std::uint64_t>(config.n_values.size()) *
      config.alphas.size();
  const std::uint64_t units = cells * static_cast<std::uint64_t>(config.trials);

  const auto run_unit = [&](std::uint64_t unit, Accumulator& acc) {
    const std::uint64_t cell = unit / static_cast<std::uint64_t>(config.trials);
    InstanceConfig icfg;
    icfg.n = config.n_values[cell / config.alphas.size()];
    icfg.alpha = config.alphas[cell % config.alphas.size()];
    icfg.cond_x = config.cond_x;
    icfg.map_arities = config.map_arities;
    icfg.map_l = config.map_l;
    icfg.seed = derive_seed(config.seed, unit);
    const Instance inst = make_instance(icfg);
    if (want_prefetch) inst.prefetch_geo(prefetch_vs, config.quad);
    std::uint64_t intra = 0;
    for (const CheckInfo& info : infos)
      run_check(info, inst, config, unit, &intra, acc);
  };

  const unsigned worker_count = static_cast<unsigned>(std::min<std::uint64_t>(
      resolve_threads(config.threads), std::max<std::uint64_t>(units, 1)));
  std::vector<Accumulator> partial(worker_count);
  std::exception_ptr first_error;
  std::atomic<bool> abort{false};

  if (worker_count <= 1) {
    for (std::uint64_t u = 0; u < units; ++u) run_unit(u, partial[0]);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> workers;
    std::mutex error_mutex;
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back([&, w] {
        for (;;) {
          const std::uint64_t u = next.fetch_add(1);
          if (u >= units || abort.load()) return;
          try {
            run_unit(u, partial[w]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            abort.store(true);
            return;
          }
        }
      });
    }
    for (std::thread& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  Accumulator total;
  for (const Accumulator& acc : partial) merge_rows(total, acc);

  Report report;
  report.config = config;
  report.rows.reserve(total.rows.size());
  for (auto& [id, row] : total.rows) report.rows.push_back(std::move(row));
  const auto by_ordinal = [](const OrderedViolation& a,
                             const OrderedViolation& b) {
    return a.ordinal < b.ordinal;
  };
  std::sort(total.failures.begin(), total.failures.end(), by_ordinal);
  std::sort(total.findings.begin(), total.findings.end(), by_ordinal);
  report.failures.reserve(total.failures.size());
  for (auto& ov : total.failures) report.failures.push_back(std::move(ov.v));
  report.findings.reserve(total.findings.size());
  for (auto& ov : total.findings) report.findings.push_back(std::move(ov.v));
  return report;
}

}  // namespace sectorix
