#pragma once

#include "tosc/rational.hpp"
#include "tosc/restrict.hpp"
#include "tosc/space.hpp"
#include "tosc/subset.hpp"

namespace tosc {

/// Node annotation of a FuncTree. `value` is the function at the node's
/// representative point (every tail copy 0); tail copy c of a limit node is
/// the period member's annotation shifted by c * drift.
struct FuncLabel {
  Rational value;
  Rational drift;
  friend bool operator==(const FuncLabel&, const FuncLabel&) = default;
};

using FuncTree = Tree<FuncLabel>;
/// [0, inf]-valued function given per description node; tail copies repeat.
using Profile = Tree<Extended>;

FuncTree func_node(Rational value, FuncTree::Children prefix = {}, FuncTree::Children period = {},
                   Rational drift = Rational(0));
FuncTree constant(const SpaceTree& space, const Rational& c);
/// Indicator of an override-free subset.
FuncTree indicator(const SpaceTree& space, const SubsetTree& s);
/// Value 1 at the root, 0 elsewhere.
FuncTree chi_root(const SpaceTree& space);
/// Value (Cantor-Bendixson rank mod 2) at every point.
FuncTree rank_parity(const SpaceTree& space);

Rational eval(const FuncTree& f, const PointAddress& x);
Extended eval(const Profile& g, const PointAddress& x);

bool has_drift(const FuncTree& f);
Profile zero_profile(const SpaceTree& space);
/// Throws std::domain_error when f has drift.
Profile to_profile(const FuncTree& f);

FuncTree add(const FuncTree& f, const FuncTree& g);
FuncTree negate(const FuncTree& f);
FuncTree subtract(const FuncTree& f, const FuncTree& g);
FuncTree scale(const Rational& q, const FuncTree& f);
/// Drift-free arguments only (std::domain_error otherwise).
FuncTree abs(const FuncTree& f);
FuncTree pointwise_max(const FuncTree& f, const FuncTree& g);
/// Adds c to every value (a constant shift).
FuncTree shift(const FuncTree& f, const Rational& c);

Profile add(const Profile& a, const Profile& b);
/// Scaling by 0 gives the zero profile.
Profile scale(const Rational& q, const Profile& g);
Profile pointwise_max(const Profile& a, const Profile& b);
/// a <= b at every point.
bool leq(const Profile& a, const Profile& b);
Profile restrict_values(const Profile& g, const SubsetTree& keep, const Extended& outside);

/// Exact sup / inf over the members of a nonempty subset (std::invalid_argument
/// on the empty set).
Extended sup_over(const FuncTree& f, const SubsetTree& s);
Extended inf_over(const FuncTree& f, const SubsetTree& s);
Extended sup_over(const Profile& g, const SubsetTree& s);
Extended sup_all(const FuncTree& f);
Extended inf_all(const FuncTree& f);
Extended sup_all(const Profile& g);
Extended inf_all(const Profile& g);
/// sup |f|.
Extended sup_norm(const FuncTree& f);

/// limsup_{y -> x} over neighborhoods containing x.
Extended limsup_at(const FuncTree& f, const PointAddress& x);
Extended liminf_at(const FuncTree& f, const PointAddress& x);
Extended limsup_at(const Profile& g, const PointAddress& x);

Profile usc_envelope(const Profile& g);
Profile usc_envelope(const FuncTree& f);

bool is_usc(const Profile& g);
bool is_usc(const FuncTree& f);
bool is_lsc(const FuncTree& f);
bool is_continuous(const FuncTree& f);
/// Continuity of the restriction of f to an arbitrary subset.
bool is_continuous_on(const FuncTree& f, const SubsetTree& w);

/// f on the restricted presentation.
FuncTree restrict_func(const Restriction& r, const FuncTree& f);
Profile restrict_profile(const Restriction& r, const Profile& g);

/// The same function on unroll_space(shape, depth).
FuncTree unroll_func(const FuncTree& f, std::size_t depth);
Profile unroll_profile(const Profile& g, std::size_t depth);

}  // namespace tosc
