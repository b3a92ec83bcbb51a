#include <doctest.h>

#include "tosc/corpus.hpp"

using namespace tosc;

namespace {

Profile prof(Extended v, Profile::Children period = {}) { return Profile(std::move(v), {}, std::move(period)); }

}  // namespace

TEST_CASE("first stage of the indicator of a limit point") {
  const FuncTree chi = chi_root(ordinal_power(1));
  CHECK(osc_alpha(chi, 1) == prof(1, {prof(0)}));
  CHECK(osc_classical(chi) == prof(1, {prof(0)}));
  CHECK(d_index(chi) == 1);
  CHECK(dbsc_norm(chi) == Extended(2));
}

TEST_CASE("nested indicator needs two stages") {
  const FuncTree f = alternating_family(2);
  CHECK(osc_alpha(f, 1) == prof(1, {prof(1, {prof(0)})}));
  CHECK(osc_alpha(f, 2) == prof(2, {prof(1, {prof(0)})}));
  CHECK(d_index(f) == 2);
  CHECK(dbsc_norm(f) == Extended(2));
}

TEST_CASE("rank-3 alternating") {
  const FuncTree f = alternating_family(3);
  CHECK(osc_alpha(f, 3) == prof(3, {prof(2, {prof(1, {prof(0)})})}));
  CHECK(d_index(f) == 3);
  CHECK(dbsc_norm(f) == Extended(4));
  CHECK(d_index(constant(ordinal_power(3), Rational(7))) == 0);
}

TEST_CASE("alternating period doubles the first stage") {
  const FuncTree f = alternating_period();
  CHECK(eval(osc_alpha(f, 1), {}) == Extended(1));
  CHECK(eval(osc_classical(f), {}) == Extended(2));
}

TEST_CASE("drift produces infinite oscillation") {
  const FuncTree f = drift_example();
  CHECK(eval(osc_alpha(f, 1), {}) == Extended::pos_inf());
  CHECK(eval(osc_alpha(f, 1), parse_address("T2")) == Extended(0));
  CHECK(dbsc_norm(f) == Extended::pos_inf());
  CHECK_FALSE(uv_decomposition(f).has_value());
}

TEST_CASE("stages stabilize within the bound") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const FuncTree f = random_func(rng, random_space(rng, 3, 9), i % 4 == 0);
    const DIndexTrace t = d_index_trace(f);
    CHECK(t.index <= t.bound);
    CHECK(osc_next(f, t.stable()) == t.stable());
  }
}

TEST_CASE("uv decomposition of the indicator") {
  const auto d = uv_decomposition(chi_root(ordinal_power(1)));
  REQUIRE(d.has_value());
  CHECK(d->verified);
  CHECK(d->tau == 1);
  CHECK(d->d_norm == Extended(2));
  CHECK(d->u == constant(ordinal_power(1), Rational(1)));
  CHECK(d->v == func_node(0, {}, {func_node(1)}));
}

TEST_CASE("DSC index chains") {
  const IndexTrace b = dsc_index(alternating_family(3));
  CHECK(b.dsc_index == 1);
  CHECK(b.dsc_chain.size() == 2);
  CHECK(b.dsc_chain[0].eta == std::optional<std::size_t>(3));
  CHECK(b.dsc_chain[1].k.is_empty());
  const IndexTrace d = dsc_index(drift_example());
  CHECK(d.dsc_index == 2);
  CHECK(d.dsc_chain[1].k == SubsetTree::singleton(ordinal_power(1), {}));
  CHECK(d.verdict == Verdict::Dsc);
  const IndexTrace n = dsc_index(nested_drift_example());
  CHECK(n.dsc_index == 3);
  CHECK(n.dsc_chain[1].k == rank_layer(ordinal_power(2), 0).complement());
  CHECK(n.dsc_chain[2].k == SubsetTree::singleton(ordinal_power(2), {}));
}

TEST_CASE("strong continuity points") {
  const SubsetTree scp = strong_continuity_points(alternating_family(2));
  CHECK(scp == rank_layer(ordinal_power(2), 0));
  const StrongContinuityReport r = check_thm51(alternating_family(2));
  CHECK(r.sets_checked > 0);
  CHECK(r.violations == 0);
}
