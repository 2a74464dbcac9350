#pragma once

#include <functional>
#include <string>
#include <vector>

#include "starq/report.hpp"

namespace starq {

struct RunConfig {
  enum class Backend { Exact, Float };
  Backend backend = Backend::Exact;
  double hbar = 1.0;  // numeric binding for the float backend
  double tolerance = 1e-10;
  unsigned long seed = 12345;
  int witten_trunc = 8;
  int cliffordization_draws = 1000;
  int wick_draws = 200;
  std::vector<std::string> reps = {"d4", "d5", "d6"};

  bool exact() const { return backend == Backend::Exact; }
  const char* backend_name() const { return exact() ? "exact" : "float"; }
};

void suite_cliffordization(const RunConfig& cfg, Recorder& rec);
void suite_wick(const RunConfig& cfg, Recorder& rec);
void suite_oscillator(const RunConfig& cfg, Recorder& rec);
void suite_landau(const RunConfig& cfg, Recorder& rec);
void suite_susy(const RunConfig& cfg, Recorder& rec);
void suite_dirac(const RunConfig& cfg, Recorder& rec);
void suite_fw(const RunConfig& cfg, Recorder& rec);

const std::vector<std::string>& suite_names();
// Runs the named suites ("all" expands to every suite); throws
// std::invalid_argument on an unknown name.
void run_suites(const std::vector<std::string>& names, const RunConfig& cfg, Recorder& rec);

}  // namespace starq
