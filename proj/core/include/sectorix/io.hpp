#pragma once

#include <string>
#include <vector>

#include "sectorix/checks.hpp"
#include "sectorix/posmap.hpp"
#include "sectorix/sweep.hpp"

namespace sectorix {

// Numeric formatting used by every machine-readable emitter: 17 significant
// digits, enough for a lossless double round trip, so JSON and CSV carry
// field-by-field identical content. Human tables round to 6 significant
// digits and are display-only.
std::string fmt17(double x);
std::string fmt6(double x);
std::string json_escape(const std::string& s);

// Matrix files: {"n": int, "re": [[...], ...], "im": [[...], ...]},
// row-major; "im" may be omitted for a real matrix (and is omitted on write
// when exactly zero). Parsers throw InvalidInput naming the offending field;
// the file loaders prefix the path.
std::string matrix_to_json(const CMatrix& a);
CMatrix matrix_from_json(const std::string& text);
CMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const CMatrix& a);

// Map specs serialize as the generator inputs {"kind", "n", "l", "k",
// "seed"}; the isometry data is regenerated from the seed on load, never
// stored raw.
std::string map_spec_to_json(const MapSpec& spec);
MapSpec map_spec_from_json(const std::string& text);

// Sweep reports. JSON: {"config": {...}, "results": [{"id", "trials",
// "passes", "vacuous", "min_slack", "worst_seed"}, ...], "failures": [...],
// "findings": [...]}. A row whose evaluations were all vacuous has no
// defined min_slack and serializes it as null (empty in CSV). The config
// block omits the worker-thread knob: it cannot affect any number, and
// reports must be byte-identical across thread counts. CSV emits the same
// tables as header-prefixed blocks separated by blank lines.
std::string report_to_json(const Report& report);
std::string report_to_csv(const Report& report);
std::string report_to_human(const Report& report);

// Single-evaluation output for the check subcommand.
std::string results_to_json(const std::vector<CheckResult>& results);
std::string results_to_csv(const std::vector<CheckResult>& results);
std::string results_to_human(const std::vector<CheckResult>& results);

// Fixed counterexample output.
std::string counterexample_to_json(const CounterexampleResult& ce);
std::string counterexample_to_csv(const CounterexampleResult& ce);
std::string counterexample_to_human(const CounterexampleResult& ce);

// Whole-file helpers; throw InvalidInput with the path on failure.
std::string load_text(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace sectorix
