#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liepair {

struct PropertyResult {
  std::string module;
  std::string property;
  std::size_t instances = 0;
  bool passed = true;
  std::string witness;  // first failure, empty on success
  std::size_t max_k = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool ok() const;
};

/// axioms, brackets, gauge-bridge, appendix, cohomology, all.
std::vector<std::string> suite_names();

/// Runs a property campaign; `scale` multiplies the instance counts.
/// Throws ParseError for an unknown suite.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t scale = 1);

}  // namespace liepair
