#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tosc/space.hpp"

namespace tosc {

/// Subset of a SpaceTree. Shape-aligned membership flags; every tail copy of
/// a limit node uses the period members' sets unless one of finitely many
/// (copy, member) overrides replaces it. Values are kept canonical (overrides
/// equal to the default are dropped), so == is set equality.
class SubsetTree {
 public:
  struct Override;
  using Children = std::vector<SubsetTree>;

  SubsetTree(bool member, Children prefix, Children period, std::vector<Override> overrides = {});

  static SubsetTree uniform(const SpaceTree& space, bool member);
  static SubsetTree full(const SpaceTree& space) { return uniform(space, true); }
  static SubsetTree empty(const SpaceTree& space) { return uniform(space, false); }
  static SubsetTree singleton(const SpaceTree& space, const PointAddress& addr);
  /// One flag per description node, in pre-order (see Flat).
  static SubsetTree from_flags(const SpaceTree& space, const std::vector<bool>& flags);
  /// The finite set of points whose tail copy numbers are all below n.
  static SubsetTree truncation(const SpaceTree& space, std::uint64_t n);

  bool member() const { return node_->member; }
  const Children& prefix() const { return node_->prefix; }
  const Children& period() const { return node_->period; }
  const std::vector<Override>& overrides() const { return node_->overrides; }

  /// The set used for member `member` of tail copy `copy`.
  const SubsetTree& member_subset(std::uint64_t copy, std::size_t member) const;
  /// 1 + the largest overridden copy number at this node; 0 without overrides.
  std::uint64_t override_limit() const;
  /// Largest override_limit anywhere in the description.
  std::uint64_t max_override_depth() const;

  bool contains(const PointAddress& addr) const;
  bool is_empty() const;
  bool is_full() const;
  /// True when all flags agree and there are no overrides.
  bool is_uniform() const;
  bool matches(const SpaceTree& space) const;
  SpaceTree shape() const;
  std::size_t description_size() const;

  SubsetTree complement() const;
  SubsetTree closure() const;
  SubsetTree interior() const;

  friend SubsetTree unite(const SubsetTree& a, const SubsetTree& b);
  friend SubsetTree intersect(const SubsetTree& a, const SubsetTree& b);
  friend SubsetTree minus(const SubsetTree& a, const SubsetTree& b);

  friend bool operator==(const SubsetTree& a, const SubsetTree& b);

 private:
  struct Node {
    bool member;
    Children prefix;
    Children period;
    std::vector<Override> overrides;
  };
  std::shared_ptr<const Node> node_;
};

struct SubsetTree::Override {
  std::uint64_t copy;
  std::size_t member;
  SubsetTree set;
  friend bool operator==(const Override&, const Override&) = default;
};

struct SubsetClass {
  bool is_closed = false;
  bool is_open = false;
  bool is_ambiguous = false;
  /// Difference of two closed sets (open in its closure).
  bool is_locally_closed = false;
};

/// Throws std::invalid_argument on shape mismatch.
SubsetClass classify_subset(const SpaceTree& space, const SubsetTree& s);
bool is_closed(const SubsetTree& s);
bool is_open(const SubsetTree& s);
bool is_subset(const SubsetTree& a, const SubsetTree& b);

/// Closed, increasing in n, finite exhaustion of s: the members of s whose
/// tail copy numbers are all below n.
SubsetTree exhaustion(const SubsetTree& s, std::uint64_t n);

/// Points of Cantor-Bendixson rank exactly r (a difference of derived sets).
SubsetTree rank_layer(const SpaceTree& space, std::size_t r);

/// The same set presented on unroll_space(shape, depth).
SubsetTree unroll_subset(const SubsetTree& s, std::size_t depth);

/// Members among enumerate_points(space, budget).
std::vector<PointAddress> members(const SpaceTree& space, const SubsetTree& s, std::size_t budget);

}  // namespace tosc
