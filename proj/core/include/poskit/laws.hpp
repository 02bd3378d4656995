#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace poskit {

struct LawResult {
  std::string name;
  std::string law;
  bool pass = false;
  std::string witness;
  long cases = 0;
};

struct SuiteOptions {
  uint64_t seed = 0;
  int max_size = 3;      // exhaustive poset enumerations go up to this size
  unsigned grid_q = 8;   // value grid for exhaustive scalar laws
  unsigned depth = 2;    // closure depth for density search
  int samples = 200;     // randomized-instance count per law
};

std::vector<LawResult> quantale_laws(const SuiteOptions& opts);
std::vector<LawResult> poscomp_laws(const SuiteOptions& opts);
std::vector<LawResult> vietoris_laws(const SuiteOptions& opts);
std::vector<LawResult> dualalg_laws(const SuiteOptions& opts);
std::vector<LawResult> seqdelta_laws(const SuiteOptions& opts);
std::vector<LawResult> metric_laws(const SuiteOptions& opts);

// All suites in a fixed order, keyed by suite name.
std::vector<std::pair<std::string, std::vector<LawResult>>> run_all_laws(const SuiteOptions& opts);

}  // namespace poskit
