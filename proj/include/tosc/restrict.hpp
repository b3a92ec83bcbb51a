#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tosc/space.hpp"
#include "tosc/subset.hpp"

namespace tosc {

/// The subspace cut out by a nonempty closed SubsetTree, presented as a
/// SpaceTree of its own, with address translation in both directions.
class Restriction {
 public:
  /// Throws std::invalid_argument when the set is empty, not closed, or does
  /// not match the space.
  Restriction(SpaceTree original, SubsetTree closed_set);

  const SpaceTree& original() const { return original_; }
  const SubsetTree& set() const { return set_; }
  const SpaceTree& space() const { return space_; }

  PointAddress to_original(const PointAddress& restricted) const;
  /// nullopt for points outside the set.
  std::optional<PointAddress> from_original(const PointAddress& original) const;

  /// The subset of the original space corresponding to a subset of the
  /// restricted one.
  SubsetTree lift(const SubsetTree& restricted_subset) const;

  struct Prov;

 private:
  SpaceTree original_;
  SubsetTree set_;
  SpaceTree space_;
  PointAddress root_rel_;
  std::shared_ptr<const Prov> root_prov_;
};

/// Where each child of a restricted node came from.
struct Restriction::Prov {
  struct PrefixOrigin {
    PointAddress rel;  // relative to the parent's original address
    bool absolute;     // rel is an address in the original space
    std::shared_ptr<const Prov> child;
  };
  struct PeriodOrigin {
    std::size_t member;
    std::uint64_t offset;  // restricted copy c is original copy c + offset
    PointAddress suffix;   // path from the original member root
    std::shared_ptr<const Prov> child;
  };
  std::vector<PrefixOrigin> prefix;
  std::vector<PeriodOrigin> period;
};

}  // namespace tosc
