#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tosc/corpus.hpp"

namespace tosc {

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  /// Copy budget for point enumerations.
  std::size_t budget = 5;
  std::string corpus_dir = TOSC_CORPUS_DIR;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
};

/// Identifiers "C1" .. "C13".
std::vector<std::string> criterion_ids();

/// Runs one acceptance criterion. Throws std::invalid_argument for an
/// unknown id.
CriterionResult run_criterion(const std::string& id, const SuiteOptions& options);

std::vector<CriterionResult> run_all_criteria(const SuiteOptions& options);

}  // namespace tosc
