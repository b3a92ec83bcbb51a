#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tosc/dsl.hpp"

namespace tosc {

using Json = nlohmann::ordered_json;

struct RunOptions {
  /// Copy budget for per-point tables.
  std::size_t budget = 2;
  std::uint64_t seed = 20240611;
  /// Stage for `osc` tasks without an explicit stage.
  std::optional<std::size_t> alpha;
  /// Verbs reported as skipped instead of run.
  std::vector<std::string> skip_verbs;
  std::string corpus_dir = TOSC_CORPUS_DIR;
};

struct TaskResult {
  Json json;
  /// Some checked property failed.
  bool violation = false;
};

/// Verbs: eval, osc, dnorm, indices, glue, stepapprox, series, classify and
/// check. Throws std::invalid_argument for unknown verbs, undefined names
/// and malformed arguments.
TaskResult run_task(const Document& doc, const Document::Task& task, const RunOptions& options);

/// All tasks in declaration order under "tasks".
TaskResult run_document(const Document& doc, const RunOptions& options);

/// Address-keyed table of a function over enumerate_points(budget).
Json point_table(const FuncTree& f, std::size_t budget);
Json point_table(const Profile& g, std::size_t budget);

/// Indented "key: value" lines for terminal output.
std::string render_text(const Json& j);

}  // namespace tosc
