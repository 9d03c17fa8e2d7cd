#ifndef QHOL_SUITES_HPP
#define QHOL_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhol/io.hpp"

namespace qhol {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Suite-specific default when unset.
  std::optional<int> max_degree;
  /// When present, q-dependent suites use this matrix instead of random ones.
  std::optional<SessionConfig> config;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::size_t instances = 0;
  /// Largest violation measure seen (relative error or norm ratio, per suite).
  double worst = 0.0;
  std::string worst_instance;
  std::vector<std::string> notes;
};

const std::vector<std::string>& suite_names();

/// Runs the named property suite. Deterministic for a fixed seed.
/// Throws BadParams for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace qhol

#endif
