#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscriesz/parallel.hpp"

namespace oscriesz {

using json = nlohmann::json;

// Everything a suite run depends on. A fixed config (seed included) must
// produce a byte-identical report, so no field may default to anything
// machine-dependent except threads, which cannot influence results.
struct RunConfig {
  std::string suite;
  double alpha = 0.0;
  double a = 1.0;
  int jmax = 40;
  double p = 2.0;
  double delta = 0.0;
  int n = 2;
  std::uint64_t seed = 7;
  double grid_scale = 1.0;
  double tol_ratio = 3.0;
  int threads = 0;  // 0 = hardware default
  std::string out_path;
  std::string format = "json";  // json | csv

  ExecMode exec_mode() const {
    return threads == 1 ? ExecMode::serial : ExecMode::parallel;
  }
  json to_json() const;
};

// One verified statement: pass iff ratio <= 1 (ratio = observed error or
// constant divided by its bound or tolerance).
struct CaseRecord {
  json inputs;
  double observed = 0.0;
  double bound_or_oracle = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

CaseRecord make_case(json inputs, double observed, double bound);

struct Report {
  RunConfig config;
  std::vector<CaseRecord> cases;
  bool pass = false;
  double worst_ratio = 0.0;
  long runtime_ms = 0;  // console-only; excluded from serialized output so
                        // identical configs serialize byte-identically

  void finalize();
  json to_json() const;
  std::string to_json_string() const;
  std::string to_csv_string() const;
};

// Executes the named suite. Throws std::invalid_argument on unknown names.
Report run_suite(const RunConfig& config);

std::vector<std::string> suite_names();
std::string list_suites();

}  // namespace oscriesz
