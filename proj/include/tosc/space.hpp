#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tosc/tree.hpp"

namespace tosc {

struct Point {
  friend bool operator==(Point, Point) { return true; }
};

/// Finitely presented countable compact space. See Tree for the meaning of
/// prefix and period children.
using SpaceTree = Tree<Point>;

SpaceTree leaf();
SpaceTree limit(SpaceTree::Children prefix, SpaceTree::Children period);

/// omega^k + 1 as the k-fold nested limit of leaves.
SpaceTree ordinal_power(std::size_t k);

template <class L>
SpaceTree shape_of(const Tree<L>& t) {
  return map_tree(t, [](const Tree<L>&) { return Point{}; });
}

/// Cantor-Bendixson rank of the root point.
std::size_t rank(const SpaceTree& space);
/// Largest Cantor-Bendixson rank of any point of the space.
std::size_t height(const SpaceTree& space);
std::size_t point_rank(const SpaceTree& space, const PointAddress& addr);

/// Throws std::out_of_range when some selector does not fit its node.
void validate_address(const SpaceTree& space, const PointAddress& addr);
bool is_valid_address(const SpaceTree& space, const PointAddress& addr);

/// Breadth-first list of all points whose tail copy numbers are all below
/// `copy_budget`. Prefix children come before tail copies, copies in
/// increasing order, period members in list order.
std::vector<PointAddress> enumerate_points(const SpaceTree& space, std::size_t copy_budget);

/// 1 + the largest copy number used on the path (0 when there is none).
std::uint64_t copy_depth(const PointAddress& addr);

/// "ε" for the root; selectors "P<i>" and "T<c>.<m>" joined by '.'; the
/// member index is omitted when the period has a single member.
std::string format_address(const SpaceTree& space, const PointAddress& addr);
/// Inverse of format_address; also accepts "root" and explicit ".0" members.
PointAddress parse_address(std::string_view text);

/// A homeomorphic presentation of a space in which the first `depth` tail
/// copies of every limit node are listed as prefix children.
class Unrolled {
 public:
  Unrolled(SpaceTree original, std::size_t depth);

  const SpaceTree& original() const { return original_; }
  const SpaceTree& space() const { return space_; }
  std::size_t depth() const { return depth_; }

  PointAddress to_unrolled(const PointAddress& original_addr) const;
  PointAddress to_original(const PointAddress& unrolled_addr) const;

 private:
  SpaceTree original_;
  std::size_t depth_;
  SpaceTree space_;
};

SpaceTree unroll_space(const SpaceTree& space, std::size_t depth);

}  // namespace tosc
