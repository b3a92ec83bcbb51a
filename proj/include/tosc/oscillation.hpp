#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tosc/func.hpp"

namespace tosc {

/// limsup - liminf at every point, infinite where f is unbounded nearby.
Profile osc_classical(const FuncTree& f);

/// U of x |-> limsup_{y->x} (|f(y) - f(x)| + prev(y)).
Profile osc_next(const FuncTree& f, const Profile& prev);

/// osc_n f, starting from the zero profile.
Profile osc_alpha(const FuncTree& f, std::size_t n);

/// Upper bound for the stabilization stage on a space.
std::size_t stabilization_bound(const SpaceTree& space);

struct DIndexTrace {
  std::size_t index = 0;
  std::size_t bound = 0;
  /// osc_0 .. osc_{index+1}.
  std::vector<Profile> stages;
  const Profile& stable() const { return stages[index]; }
};

/// Least n with osc_n f = osc_{n+1} f. Throws std::logic_error if the bound
/// is exceeded.
DIndexTrace d_index_trace(const FuncTree& f);
std::size_t d_index(const FuncTree& f);
Profile stable_osc(const FuncTree& f);

SubsetTree strong_continuity_points(const FuncTree& f);

struct UVDecomposition {
  FuncTree u;
  FuncTree v;
  std::size_t tau = 0;
  Extended d_norm;
  /// All invariants (u - v = f, u, v >= 0, both lsc, sup(u + v) = d_norm).
  bool verified = false;
  std::string failure;
};

Extended dbsc_norm(const FuncTree& f);
/// nullopt when the norm is infinite.
std::optional<UVDecomposition> uv_decomposition(const FuncTree& f);

enum class Verdict { Dsc, NotDetermined };
const char* verdict_name(Verdict v);

struct DscStep {
  SubsetTree k;
  /// i_D of f restricted to k; absent for the final empty set.
  std::optional<std::size_t> eta;
};

struct IndexTrace {
  std::size_t d_index = 0;
  std::vector<DscStep> dsc_chain;
  std::size_t dsc_index = 0;
  Verdict verdict = Verdict::Dsc;
};

IndexTrace dsc_index(const FuncTree& f);

/// All nonempty closed subsets with description size <= max_size obtained
/// from per-node flags, plus single overrides of copy 0.
std::vector<SubsetTree> closed_family(const SpaceTree& space, std::size_t max_size);

struct StrongContinuityReport {
  std::size_t sets_checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> messages;
};

/// Strong continuity points of f|L: nonempty, dense and G_delta in L, and
/// some point of L has finite stable oscillation.
StrongContinuityReport check_thm51(const FuncTree& f, std::size_t max_size = 12);
StrongContinuityReport check_thm51(const FuncTree& f, const std::vector<SubsetTree>& family);

}  // namespace tosc
