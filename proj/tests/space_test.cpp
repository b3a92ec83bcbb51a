#include <doctest.h>

#include "tosc/corpus.hpp"
#include "tosc/oracle.hpp"

using namespace tosc;

namespace {

std::vector<std::string> names(const SpaceTree& s, std::size_t budget) {
  std::vector<std::string> out;
  for (const auto& a : enumerate_points(s, budget)) out.push_back(format_address(s, a));
  return out;
}

}  // namespace

TEST_CASE("rank of small spaces") {
  CHECK(rank(leaf()) == 0);
  CHECK(rank(ordinal_power(1)) == 1);
  CHECK(rank(ordinal_power(3)) == 3);
  CHECK(height(limit({ordinal_power(2)}, {leaf()})) == 2);
  CHECK(rank(limit({ordinal_power(2)}, {leaf()})) == 1);
}

TEST_CASE("rank agrees with iterated removal of isolated points") {
  // Derived sets on the depth-6 unfolding of omega^3 + 1: the limit points
  // of a truncated unfolding are exactly the nodes with materialized copies.
  const SpaceTree s = ordinal_power(3);
  const UnfoldedSpace u(s, 6);
  std::vector<bool> alive(u.size(), true);
  std::size_t steps = 0;
  while (alive[0]) {
    std::vector<bool> next(u.size(), false);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!alive[i]) continue;
      for (const auto& copy : u.node(i).copies) {
        for (std::size_t r : copy) next[i] = next[i] || alive[r];
      }
    }
    alive = next;
    ++steps;
  }
  CHECK(steps == rank(s) + 1);
}

TEST_CASE("enumeration order and counts") {
  CHECK(names(ordinal_power(1), 2) == std::vector<std::string>{"ε", "T0", "T1"});
  CHECK(names(leaf(), 5) == std::vector<std::string>{"ε"});
  CHECK(enumerate_points(ordinal_power(2), 2).size() == 7);
  const SpaceTree s = limit({leaf()}, {leaf(), ordinal_power(1)});
  CHECK(names(s, 1) == std::vector<std::string>{"ε", "P0", "T0.0", "T0.1", "T0.1.T0"});
}

TEST_CASE("enumerations grow by prefix") {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    const SpaceTree s = random_space(rng, 3, 9);
    for (std::size_t k = 1; k < 4; ++k) {
      const auto small = enumerate_points(s, k);
      const auto big = enumerate_points(s, k + 1);
      for (const auto& a : small) CHECK(std::find(big.begin(), big.end(), a) != big.end());
    }
  }
}

TEST_CASE("address strings round trip") {
  const SpaceTree s = limit({leaf()}, {leaf(), ordinal_power(1)});
  for (const auto& a : enumerate_points(s, 3)) CHECK(parse_address(format_address(s, a)) == a);
  CHECK(parse_address("root").empty());
  CHECK_THROWS_AS(parse_address("Q1"), std::invalid_argument);
  CHECK_THROWS_AS(validate_address(s, parse_address("P1")), std::out_of_range);
}

TEST_CASE("classification examples") {
  const SpaceTree w = ordinal_power(1);
  const auto full = classify_subset(w, SubsetTree::full(w));
  CHECK((full.is_closed && full.is_open && full.is_ambiguous));
  const SubsetTree root = SubsetTree::singleton(w, {});
  const auto r = classify_subset(w, root);
  CHECK(r.is_closed);
  CHECK_FALSE(r.is_open);
  CHECK(r.is_ambiguous);
  const auto l = classify_subset(w, root.complement());
  CHECK(l.is_open);
  CHECK_FALSE(l.is_closed);
  CHECK(l.is_ambiguous);
}

TEST_CASE("classification agrees with truncated unfoldings") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const SpaceTree s = random_space(rng, 3, 8);
    const SubsetTree a = random_subset(rng, s);
    const SubsetClass c = classify_subset(s, a);
    for (std::size_t k = 1; k <= 6; ++k) {
      const OracleClass o = oracle_classify(s, a, k + a.max_override_depth());
      CHECK(o.is_closed == c.is_closed);
      CHECK(o.is_open == c.is_open);
      CHECK(o.is_locally_closed == c.is_locally_closed);
    }
  }
}

TEST_CASE("set algebra matches pointwise membership") {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    const SpaceTree s = random_space(rng, 3, 8);
    const SubsetTree a = random_subset(rng, s);
    const SubsetTree b = random_subset(rng, s);
    const SubsetTree u = unite(a, b), n = intersect(a, b), d = minus(a, b), c = a.complement();
    for (const auto* t : {&u, &n, &d, &c}) CHECK(classify_subset(s, *t).is_ambiguous);
    for (const auto& x : enumerate_points(s, 4)) {
      CHECK(u.contains(x) == (a.contains(x) || b.contains(x)));
      CHECK(n.contains(x) == (a.contains(x) && b.contains(x)));
      CHECK(d.contains(x) == (a.contains(x) && !b.contains(x)));
      CHECK(c.contains(x) == !a.contains(x));
    }
  }
}

TEST_CASE("restriction examples") {
  const SpaceTree w2 = ordinal_power(2);
  CHECK(Restriction(w2, SubsetTree::full(w2)).space() == w2);
  CHECK(Restriction(w2, rank_layer(w2, 0).complement()).space() == ordinal_power(1));
  const SpaceTree w1 = ordinal_power(1);
  CHECK(Restriction(w1, SubsetTree::singleton(w1, {})).space() == leaf());
  CHECK_THROWS_AS(Restriction(w1, SubsetTree::empty(w1)), std::invalid_argument);
  CHECK_THROWS_AS(Restriction(w1, SubsetTree::singleton(w1, {}).complement()), std::invalid_argument);
}

TEST_CASE("restriction translates addresses and keeps height") {
  Rng rng(17);
  int tried = 0;
  for (int i = 0; i < 200 && tried < 60; ++i) {
    const SpaceTree s = random_space(rng, 3, 8);
    const SubsetTree c = random_subset(rng, s).closure();
    if (c.is_empty()) continue;
    ++tried;
    const Restriction r(s, c);
    CHECK(height(r.space()) <= height(s));
    for (const auto& y : enumerate_points(r.space(), 3)) {
      const PointAddress x = r.to_original(y);
      CHECK(c.contains(x));
      CHECK(r.from_original(x) == y);
    }
    for (const auto& x : enumerate_points(s, 3)) CHECK(r.from_original(x).has_value() == c.contains(x));
    const SubsetTree t = random_subset(rng, r.space());
    const SubsetTree lifted = r.lift(t);
    for (const auto& y : enumerate_points(r.space(), 3)) CHECK(lifted.contains(r.to_original(y)) == t.contains(y));
  }
  CHECK(tried == 60);
}
