#pragma once

#include <map>
#include <vector>

#include "tosc/oscillation.hpp"

namespace tosc {

/// The points of a space whose tail copy numbers are all below k, with their
/// parent/child structure made explicit.
class UnfoldedSpace {
 public:
  struct Node {
    PointAddress addr;
    std::size_t parent;
    std::vector<std::size_t> prefix;
    /// copies[c] lists the roots of tail copy c, one per period member.
    std::vector<std::vector<std::size_t>> copies;
    /// A limit point whose copies k, k+1, ... are not materialized.
    bool truncated = false;
    /// One past the last point of this point's subtree (pre-order).
    std::size_t end = 0;
  };

  /// Throws std::invalid_argument for k = 0.
  UnfoldedSpace(const SpaceTree& space, std::size_t k);

  std::size_t k() const { return k_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  /// Index of a materialized address, or size() when absent.
  std::size_t find(const PointAddress& addr) const;

  /// (height + 1) * longest period.
  static std::size_t certified_depth(const SpaceTree& space);

 private:
  std::size_t add(const SpaceTree& t, std::size_t parent, PointAddress addr);
  std::size_t k_;
  std::vector<Node> nodes_;
  std::map<PointAddress, std::size_t> index_;
};

/// Per-point values on an unfolding.
using OracleValues = std::vector<Rational>;

OracleValues oracle_eval(const UnfoldedSpace& u, const FuncTree& f);

/// inf over c < k of the max of g over {x} and the materialized tail copies
/// c, c+1, ... of x.
Rational oracle_limsup(const UnfoldedSpace& u, const OracleValues& g, std::size_t x);
Rational oracle_limsup(const FuncTree& f, const PointAddress& x, std::size_t k);

/// osc_n f recomputed from scratch on the k-unfolding.
OracleValues oracle_osc_alpha(const UnfoldedSpace& u, const FuncTree& f, std::size_t n);

struct OracleAgreement {
  std::size_t points = 0;
  std::size_t mismatches = 0;
  /// Points where the engine reports infinity.
  std::size_t infinite_points = 0;
  /// Of those, points whose oracle value failed to grow strictly with k.
  std::size_t non_divergent = 0;
  bool ok() const { return mismatches == 0 && non_divergent == 0; }
};

/// Compares osc_n f with the oracle at the certified depth. Where the engine
/// is infinite, the oracle values at depths K < 2K < 4K must increase
/// strictly.
OracleAgreement compare_osc_with_oracle(const FuncTree& f, std::size_t n);

struct DNormBounds {
  Rational lower;
  Extended upper;
  std::size_t depth = 0;
};

/// Lower bound: least nonnegative solution of the lower semicontinuity
/// constraints u(p) >= u(a), v(p) >= v(a) for tail ancestors a of p, with
/// u - v = f, maximized over the unfolding. Upper bound: sup(u + v) of the
/// engine's decomposition. Throws std::invalid_argument for unbounded f.
DNormBounds dnorm_bounds(const FuncTree& f, std::size_t k = 0);

struct OracleClass {
  bool is_closed = false;
  bool is_open = false;
  bool is_locally_closed = false;
};

/// Limit-point closure test on the k-unfolding.
OracleClass oracle_classify(const SpaceTree& space, const SubsetTree& s, std::size_t k);

}  // namespace tosc
