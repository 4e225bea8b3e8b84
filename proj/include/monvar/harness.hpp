#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monvar/catalog.hpp"

namespace monvar {

// One verified claim: a stable identifier, the outcome, and a short
// human-readable detail (witnesses, counts, timings of subchecks).
struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct HarnessOptions {
  Phi1Bound phi1;                    // truncation used wherever a basis is expanded
  std::uint64_t seed = 0x20260823;  // drives every randomized check
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const HarnessOptions& opts = {});
std::vector<SuiteResult> run_all(const HarnessOptions& opts = {});

std::string report_to_text(const std::vector<SuiteResult>& results);
std::string report_to_json(const std::vector<SuiteResult>& results);

}  // namespace monvar
