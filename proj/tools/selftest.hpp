#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mperturb::cli {

struct SuiteResult {
  std::string name;
  /// Module and operation exercised, e.g. "groebner_engine/reduced_groebner".
  std::string provenance;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  /// Negative control: the Groebner engine silently skips every second
  /// critical pair.
  bool drop_pairs = false;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

nlohmann::ordered_json to_json(const std::vector<SuiteResult>& results, const SelftestOptions& options);

}  // namespace mperturb::cli
