#include "sectorix/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sectorix {

namespace {

using njson = nlohmann::json;

njson parse_or_throw(const std::string& text, const char* what) {
  njson j = njson::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw InvalidInput(std::string(what) + ": malformed JSON");
  return j;
}

// Emits a JSON array of numbers formatted with fmt17.
void append_num_array(std::string& out, const std::vector<double>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += fmt17(xs[i]);
  }
  out += ']';
}

void append_string_array(std::string& out, const std::vector<std::string>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += json_escape(xs[i]);
    out += '"';
  }
  out += ']';
}

void append_int_array(std::string& out, const std::vector<int>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  out += ']';
}

// The set parameters of a result, as a JSON object. Unset fields (NaN
// doubles, k = 0, empty f) are omitted so the object reads as "what this
// evaluation actually consumed".
std::string params_to_json(const UsedParams& p) {
  std::string out = "{";
  bool first = true;
  const auto add = [&](const char* name, const std::string& value) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += name;
    out += "\":";
    out += value;
  };
  if (p.k != 0) add("k", std::to_string(p.k));
  if (!std::isnan(p.v)) add("v", fmt17(p.v));
  if (!std::isnan(p.r)) add("r", fmt17(p.r));
  if (!std::isnan(p.p)) add("p", fmt17(p.p));
  if (!std::isnan(p.alpha)) add("alpha", fmt17(p.alpha));
  if (!std::isnan(p.m)) add("m", fmt17(p.m));
  if (!std::isnan(p.M)) add("M", fmt17(p.M));
  if (!std::isnan(p.h)) add("h", fmt17(p.h));
  if (!std::isnan(p.kappa)) add("kappa", fmt17(p.kappa));
  if (!p.f.empty()) add("f", "\"" + json_escape(p.f) + "\"");
  out += '}';
  return out;
}

// Same fields flattened for CSV / human output.
std::string params_brief(const UsedParams& p, bool human) {
  const auto num = [&](double x) { return human ? fmt6(x) : fmt17(x); };
  std::string out;
  const auto add = [&](const char* name, const std::string& value) {
    if (!out.empty()) out += human ? " " : ";";
    out += name;
    out += '=';
    out += value;
  };
  if (p.k != 0) add("k", std::to_string(p.k));
  if (!std::isnan(p.v)) add("v", num(p.v));
  if (!std::isnan(p.r)) add("r", num(p.r));
  if (!std::isnan(p.p)) add("p", num(p.p));
  if (!std::isnan(p.alpha)) add("alpha", num(p.alpha));
  if (!std::isnan(p.m)) add("m", num(p.m));
  if (!std::isnan(p.M)) add("M", num(p.M));
  if (!std::isnan(p.h)) add("h", num(p.h));
  if (!std::isnan(p.kappa)) add("kappa", num(p.kappa));
  if (!p.f.empty()) add("f", p.f);
  return out;
}

void append_violation_json(std::string& out, const Violation& v) {
  out += "{\"id\":\"" + json_escape(v.id) + "\",\"severity\":\"";
  out += severity_name(v.severity);
  out += "\",\"n\":" + std::to_string(v.n);
  out += ",\"alpha\":" + fmt17(v.alpha);
  out += ",\"seed\":" + std::to_string(v.seed);
  out += ",\"slack\":" + fmt17(v.slack);
  out += ",\"params\":" + params_to_json(v.params) + "}";
}

void append_violation_csv(std::string& out, const Violation& v) {
  out += v.id;
  out += ',';
  out += severity_name(v.severity);
  out += ',' + std::to_string(v.n);
  out += ',' + fmt17(v.alpha);
  out += ',' + std::to_string(v.seed);
  out += ',' + fmt17(v.slack);
  out += ',' + params_brief(v.params, /*human=*/false);
  out += '\n';
}

std::string config_to_json(const SweepConfig& c) {
  std::string out = "{\"ids\":";
  append_string_array(out, c.ids);
  out += ",\"n_values\":";
  append_int_array(out, c.n_values);
  out += ",\"alphas\":";
  append_num_array(out, c.alphas);
  out += ",\"v_grid\":";
  append_num_array(out, c.v_grid);
  out += ",\"r_grid\":";
  append_num_array(out, c.r_grid);
  out += ",\"p_grid\":";
  append_num_array(out, c.p_grid);
  out += ",\"f_names\":";
  append_string_array(out, c.f_names);
  out += ",\"trials\":" + std::to_string(c.trials);
  out += ",\"seed\":" + std::to_string(c.seed);
  out += ",\"tol\":" + fmt17(c.tol);
  out += ",\"cond_x\":" + fmt17(c.cond_x);
  out += ",\"map_arities\":";
  append_int_array(out, c.map_arities);
  out += ",\"map_l\":" + std::to_string(c.map_l);
  out += ",\"quad\":{\"h_s\":" + fmt17(c.quad.h_s) +
         ",\"eps_tail\":" + fmt17(c.quad.eps_tail) +
         ",\"s_max\":" + fmt17(c.quad.s_max) + "}";
  out += '}';
  return out;
}

bool row_has_slack(const ResultRow& r) { return r.evals > r.vacuous; }

}  // namespace

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x",
                        static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string matrix_to_json(const CMatrix& a) {
  const int n = a.dim();
  bool real = true;
  for (int i = 0; i < n && real; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j).imag() != 0.0) {
        real = false;
        break;
      }
  std::string out = "{\"n\":" + std::to_string(n) + ",\"re\":[";
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += '[';
    for (int j = 0; j < n; ++j) {
      if (j) out += ',';
      out += fmt17(a(i, j).real());
    }
    out += ']';
  }
  out += ']';
  if (!real) {
    out += ",\"im\":[";
    for (int i = 0; i < n; ++i) {
      if (i) out += ',';
      out += '[';
      for (int j = 0; j < n; ++j) {
        if (j) out += ',';
        out += fmt17(a(i, j).imag());
      }
      out += ']';
    }
    out += ']';
  }
  out += '}';
  return out;
}

namespace {

// Reads one n x n part ("re" or "im") into the matrix.
void read_part(const njson& j, const char* key, int n, bool imag, CMatrix& a) {
  const njson& part = j.at(key);
  if (!part.is_array() || static_cast<int>(part.size()) != n)
    throw InvalidInput(std::string("matrix JSON: '") + key + "' must be an " +
                       std::to_string(n) + "-row array");
  for (int i = 0; i < n; ++i) {
    const njson& row = part[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InvalidInput(std::string("matrix JSON: '") + key + "' row " +
                         std::to_string(i) + " must have " + std::to_string(n) +
                         " entries");
    for (int j2 = 0; j2 < n; ++j2) {
      const njson& cell = row[static_cast<std::size_t>(j2)];
      if (!cell.is_number())
        throw InvalidInput(std::string("matrix JSON: '") + key + "' entry (" +
                           std::to_string(i) + "," + std::to_string(j2) +
                           ") is not a number");
      const double x = cell.get<double>();
      if (imag)
        a(i, j2) = cd(a(i, j2).real(), x);
      else
        a(i, j2) = cd(x, a(i, j2).imag());
    }
  }
}

}  // namespace

CMatrix matrix_from_json(const std::string& text) {
  const njson j = parse_or_throw(text, "matrix JSON");
  if (!j.is_object()) throw InvalidInput("matrix JSON: root must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw InvalidInput("matrix JSON: missing integer field 'n'");
  const int n = j.at("n").get<int>();
  if (n < 1) throw InvalidInput("matrix JSON: 'n' must be >= 1");
  if (n > 4096) throw InvalidInput("matrix JSON: 'n' is implausibly large");
  if (!j.contains("re")) throw InvalidInput("matrix JSON: missing field 're'");
  CMatrix a(n);
  read_part(j, "re", n, /*imag=*/false, a);
  if (j.contains("im")) read_part(j, "im", n, /*imag=*/true, a);
  if (!a.is_finite())
    throw InvalidInput("matrix JSON: entries must be finite");
  return a;
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw InvalidInput("cannot read file '" + path + "'");
  return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open file '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw InvalidInput("cannot write file '" + path + "'");
}

CMatrix load_matrix(const std::string& path) {
  std::string text;
  try {
    text = load_text(path);
  } catch (const InvalidInput& e) {
    throw InvalidInput(e.what());  // already names the path
  }
  try {
    return matrix_from_json(text);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void save_matrix(const std::string& path, const CMatrix& a) {
  save_text(path, matrix_to_json(a) + "\n");
}

std::string map_spec_to_json(const MapSpec& spec) {
  std::string out = "{\"kind\":\"";
  out += map_kind_name(spec.kind);
  out += "\",\"n\":" + std::to_string(spec.n);
  out += ",\"l\":" + std::to_string(spec.l);
  out += ",\"k\":" + std::to_string(spec.k);
  out += ",\"seed\":" + std::to_string(spec.seed);
  out += '}';
  return out;
}

MapSpec map_spec_from_json(const std::string& text) {
  const njson j = parse_or_throw(text, "map JSON");
  if (!j.is_object()) throw InvalidInput("map JSON: root must be an object");
  for (const char* key : {"kind", "n", "l", "k", "seed"})
    if (!j.contains(key))
      throw InvalidInput(std::string("map JSON: missing field '") + key + "'");
  if (!j.at("kind").is_string())
    throw InvalidInput("map JSON: 'kind' must be a string");
  for (const char* key : {"n", "l", "k", "seed"})
    if (!j.at(key).is_number_integer())
      throw InvalidInput(std::string("map JSON: '") + key +
                         "' must be an integer");
  const MapKind kind = map_kind_from_name(j.at("kind").get<std::string>());
  return gen_map(kind, j.at("n").get<int>(), j.at("l").get<int>(),
                 j.at("k").get<int>(), j.at("seed").get<std::uint64_t>());
}

std::string report_to_json(const Report& report) {
  std::string out = "{\"config\":" + config_to_json(report.config);
  out += ",\"results\":[";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ResultRow& r = report.rows[i];
    if (i) out += ',';
    out += "{\"id\":\"" + json_escape(r.id) + "\"";
    out += ",\"trials\":" + std::to_string(r.evals);
    out += ",\"passes\":" + std::to_string(r.passes);
    out += ",\"vacuous\":" + std::to_string(r.vacuous);
    out += ",\"min_slack\":";
    out += row_has_slack(r) ? fmt17(r.min_slack) : "null";
    out += ",\"worst_seed\":" + std::to_string(r.worst_seed);
    out += '}';
  }
  out += "],\"failures\":[";
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    if (i) out += ',';
    append_violation_json(out, report.failures[i]);
  }
  out += "],\"findings\":[";
  for (std::size_t i = 0; i < report.findings.size(); ++i) {
    if (i) out += ',';
    append_violation_json(out, report.findings[i]);
  }
  out += "]}";
  return out;
}

std::string report_to_csv(const Report& report) {
  std::string out = "id,trials,passes,vacuous,min_slack,worst_seed\n";
  for (const ResultRow& r : report.rows) {
    out += r.id;
    out += ',' + std::to_string(r.evals);
    out += ',' + std::to_string(r.passes);
    out += ',' + std::to_string(r.vacuous);
    out += ',';
    if (row_has_slack(r)) out += fmt17(r.min_slack);
    out += ',' + std::to_string(r.worst_seed);
    out += '\n';
  }
  out += "\nfailures\nid,severity,n,alpha,seed,slack,params\n";
  for (const Violation& v : report.failures) append_violation_csv(out, v);
  out += "\nfindings\nid,severity,n,alpha,seed,slack,params\n";
  for (const Violation& v : report.findings) append_violation_csv(out, v);
  return out;
}

std::string report_to_human(const Report& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %9s %9s %8s %13s %20s\n", "id",
                "trials", "passes", "vacuous", "min_slack", "worst_seed");
  out += line;
  for (const ResultRow& r : report.rows) {
    std::snprintf(line, sizeof line, "%-10s %9lld %9lld %8lld %13s %20llu\n",
                  r.id.c_str(), r.evals, r.passes, r.vacuous,
                  row_has_slack(r) ? fmt6(r.min_slack).c_str() : "-",
                  static_cast<unsigned long long>(r.worst_seed));
    out += line;
  }
  const auto violations = [&](const char* title,
                              const std::vector<Violation>& vs) {
    std::snprintf(line, sizeof line, "\n%s: %zu\n", title, vs.size());
    out += line;
    for (const Violation& v : vs) {
      std::snprintf(line, sizeof line,
                    "  %-10s n=%d alpha=%s seed=%llu slack=%s %s\n",
                    v.id.c_str(), v.n, fmt6(v.alpha).c_str(),
                    static_cast<unsigned long long>(v.seed),
                    fmt6(v.slack).c_str(),
                    params_brief(v.params, /*human=*/true).c_str());
      out += line;
    }
  };
  violations("genuine failures", report.failures);
  violations("findings (statements flagged, violations are not library bugs)",
             report.findings);
  return out;
}

std::string results_to_json(const std::vector<CheckResult>& results) {
  std::string out = "[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CheckResult& r = results[i];
    if (i) out += ',';
    out += "{\"id\":\"" + json_escape(r.id) + "\"";
    out += ",\"hypotheses_met\":";
    out += r.hypotheses_met ? "true" : "false";
    if (!r.vacuous_reason.empty())
      out += ",\"vacuous_reason\":\"" + json_escape(r.vacuous_reason) + "\"";
    out += ",\"holds\":";
    out += r.holds ? "true" : "false";
    out += ",\"severity\":\"";
    out += severity_name(r.severity);
    out += "\",\"slack\":" + fmt17(r.slack);
    out += ",\"lhs\":";
    append_num_array(out, r.lhs);
    out += ",\"rhs\":";
    append_num_array(out, r.rhs);
    out += ",\"params\":" + params_to_json(r.params);
    out += ",\"witness\":" + std::to_string(r.witness);
    out += '}';
  }
  out += ']';
  return out;
}

namespace {
std::string joined17(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += fmt17(xs[i]);
  }
  return out;
}
}  // namespace

std::string results_to_csv(const std::vector<CheckResult>& results) {
  std::string out =
      "id,hypotheses_met,holds,severity,slack,lhs,rhs,params,vacuous_reason\n";
  for (const CheckResult& r : results) {
    out += r.id;
    out += r.hypotheses_met ? ",1" : ",0";
    out += r.holds ? ",1" : ",0";
    out += ',';
    out += severity_name(r.severity);
    out += ',' + fmt17(r.slack);
    out += ',' + joined17(r.lhs);
    out += ',' + joined17(r.rhs);
    out += ',' + params_brief(r.params, /*human=*/false);
    out += ',';
    out += r.vacuous_reason;  // reasons contain no commas
    out += '\n';
  }
  return out;
}

std::string results_to_human(const std::vector<CheckResult>& results) {
  std::string out;
  char line[200];
  for (const CheckResult& r : results) {
    const char* verdict = !r.hypotheses_met ? "VACUOUS"
                          : r.holds         ? "pass"
                                            : "VIOLATED";
    std::snprintf(line, sizeof line, "%-10s %-8s slack=%-12s %s%s\n",
                  r.id.c_str(), verdict, fmt6(r.slack).c_str(),
                  params_brief(r.params, /*human=*/true).c_str(),
                  r.hypotheses_met ? "" : (" [" + r.vacuous_reason + "]").c_str());
    out += line;
  }
  return out;
}

std::string counterexample_to_json(const CounterexampleResult& ce) {
  std::string out = "{\"id\":\"" + json_escape(ce.id) + "\"";
  out += ",\"first_label\":\"" + json_escape(ce.first_label) + "\"";
  out += ",\"second_label\":\"" + json_escape(ce.second_label) + "\"";
  out += ",\"product_label\":\"" + json_escape(ce.product_label) + "\"";
  out += ",\"first\":" + fmt17(ce.first);
  out += ",\"second\":" + fmt17(ce.second);
  out += ",\"product\":" + fmt17(ce.product);
  out += ",\"violated\":";
  out += ce.violated ? "true" : "false";
  out += ",\"a\":" + matrix_to_json(ce.a);
  out += ",\"b\":" + matrix_to_json(ce.b);
  out += '}';
  return out;
}

std::string counterexample_to_csv(const CounterexampleResult& ce) {
  std::string out = "id,quantity,value\n";
  out += ce.id + "," + ce.first_label + "," + fmt17(ce.first) + "\n";
  out += ce.id + "," + ce.second_label + "," + fmt17(ce.second) + "\n";
  out += ce.id + "," + ce.product_label + "," + fmt17(ce.product) + "\n";
  out += ce.id + ",violated," + (ce.violated ? "1" : "0") + "\n";
  return out;
}

std::string counterexample_to_human(const CounterexampleResult& ce) {
  std::string out;
  out += "  " + ce.first_label + " = " + fmt6(ce.first) + "\n";
  out += "  " + ce.second_label + " = " + fmt6(ce.second) + "\n";
  out += "  " + ce.product_label + " = " + fmt6(ce.product) + "\n";
  out += ce.violated
             ? "naive product inequality VIOLATED (both left-hand values "
               "exceed the product bound)\n"
             : "naive product inequality not violated\n";
  return out;
}

}  // namespace sectorix
