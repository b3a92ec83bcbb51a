#include <doctest.h>

#include "tosc/corpus.hpp"
#include "tosc/oracle.hpp"

using namespace tosc;

TEST_CASE("unfolding layout") {
  const UnfoldedSpace u(ordinal_power(2), 3);
  CHECK(u.size() == 13);
  CHECK(u.node(0).copies.size() == 3);
  CHECK(u.find(parse_address("T2.T1")) < u.size());
  CHECK(u.find(parse_address("T3")) == u.size());
  CHECK(UnfoldedSpace::certified_depth(ordinal_power(3)) == 4);
  CHECK(UnfoldedSpace::certified_depth(limit({}, {leaf(), leaf()})) == 4);
}

TEST_CASE("oracle values of the reference functions") {
  const FuncTree chi = chi_root(ordinal_power(1));
  CHECK(oracle_limsup(chi, {}, 4) == Rational(1));
  const UnfoldedSpace u1(ordinal_power(1), 4);
  const OracleValues o1 = oracle_osc_alpha(u1, chi, 1);
  CHECK(o1[0] == Rational(1));
  for (std::size_t i = 1; i < u1.size(); ++i) CHECK(o1[i] == Rational(0));

  const FuncTree alt = alternating_family(3);
  const UnfoldedSpace u3(ordinal_power(3), 4);
  CHECK(oracle_osc_alpha(u3, alt, 3)[0] == Rational(3));
  CHECK(oracle_osc_alpha(u3, alt, 2)[0] == Rational(2));
  CHECK(oracle_osc_alpha(u3, alt, 3) == oracle_osc_alpha(u3, alt, 4));

  const UnfoldedSpace up(shape_of(alternating_period()), 4);
  CHECK(oracle_osc_alpha(up, alternating_period(), 1)[0] == Rational(1));
}

TEST_CASE("engine agrees with the oracle") {
  for (const auto& nf : named_examples()) {
    for (std::size_t n = 0; n <= 4; ++n) CHECK(compare_osc_with_oracle(nf.func, n).ok());
  }
  const OracleAgreement d = compare_osc_with_oracle(drift_example(), 1);
  CHECK(d.infinite_points == 1);
  CHECK(d.non_divergent == 0);
}

TEST_CASE("D-norm bounds") {
  const DNormBounds c = dnorm_bounds(chi_root(ordinal_power(1)));
  CHECK(c.lower == Rational(2));
  CHECK(c.upper == Extended(2));
  const DNormBounds a = dnorm_bounds(alternating_family(3));
  CHECK(a.lower == Rational(4));
  CHECK(a.upper == Extended(4));
  CHECK_THROWS_AS(dnorm_bounds(drift_example()), std::invalid_argument);
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    const FuncTree f = random_func(rng, random_space(rng, 3, 8), false);
    const DNormBounds b = dnorm_bounds(f);
    CHECK(Extended(b.lower) <= b.upper);
    CHECK(b.upper == dbsc_norm(f));
  }
}

TEST_CASE("oracle classification of a singleton") {
  const SpaceTree w = ordinal_power(1);
  const OracleClass r = oracle_classify(w, SubsetTree::singleton(w, {}), 3);
  CHECK(r.is_closed);
  CHECK_FALSE(r.is_open);
  CHECK(r.is_locally_closed);
}
