#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dzeta/fe_engine.hpp"

namespace dzeta::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "dzeta-fe/1";

/// "2", "-1.5+0.3i", "0.3i", "i", or "re,im".
Complex parse_complex(const std::string& text);

/// const | exp:BETA | delta:N | char:MOD:INDEX | periodic:v1,v2,... |
/// finite:v1,v2,... | delta-form
CoefficientSequence parse_sequence(const std::string& text);

/// Periodic table from a sequence spec (char:..., periodic:...) or a bare list.
std::vector<Complex> parse_table(const std::string& text);

json complex_json(Complex z);
Complex complex_from_json(const json& j);

json report_json(const FEReport& r);
json value_json(const std::string& function, const json& inputs, const SeriesValue& v);

/// One verification case of a suite file.
struct SuiteCase {
  TheoremId theorem = TheoremId::t5;
  EvalPoint point;
  FEParams params;
  bool expect_refusal = false;
  std::string expect_reason;  // substring the refusal must contain
  int criterion = 0;
  bool relative = false;      // compare residual_rel instead of residual_abs
  std::string label;
};

struct Suite {
  std::string name;
  std::vector<SuiteCase> cases;
};

FEParams params_from_json(const json& j, FEParams base = {});
Suite load_suite(const std::filesystem::path& file);

/// Directory holding the bundled suite files: $DZETA_SUITES, else the
/// source tree location recorded at build time.
std::filesystem::path suite_dir();

/// Pool size from DZETA_THREADS (default: hardware concurrency).
int thread_count();

/// Runs the cases on a worker pool; results are in case order.
std::vector<FEReport> run_cases(const std::vector<SuiteCase>& cases, int threads);

/// Whether a report satisfies its case (pass, or the expected refusal).
bool case_ok(const SuiteCase& c, const FEReport& r);

/// Full command-line entry point; returns the process exit code
/// (0 ok, 1 error or failed check, 2 refusal).
int run(int argc, char** argv);

}  // namespace dzeta::cli
