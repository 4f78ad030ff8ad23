#pragma once

#include "fbca/fuzz.hpp"
#include "fbca/report.hpp"

#include <json.hpp>

namespace fbca {

// Aggregate verification over the shipped fixtures plus fuzzed instances.
// Missing fixture files are skipped (vacuous pass). json_report is an array
// of {check, instance, verdict, witness?}.
struct SuiteResult {
  Report report;
  nlohmann::json json_report;
  bool pass = true;
};

SuiteResult run_suite(const std::string &fixture_dir, const FuzzConfig &fuzz,
                      uint64_t fuzz_count);

} // namespace fbca
