#include <doctest.h>

#include "tosc/corpus.hpp"

using namespace tosc;

namespace {

const SpaceTree w1 = ordinal_power(1);

}  // namespace

TEST_CASE("continuous extension from a closed set") {
  const FuncTree f = func_node(2, {}, {func_node(2)});
  const SubsetTree c = SubsetTree::singleton(w1, {});
  const PresentedFunction e = tietze_extend(f, c);
  CHECK(e.is_continuous());
  for (const auto& x : enumerate_points(w1, 4)) CHECK(e.eval(x) == Rational(2));
  CHECK_THROWS_AS(tietze_extend(chi_root(w1), SubsetTree::full(w1)), std::invalid_argument);
  CHECK_THROWS_AS(tietze_extend(f, c.complement()), std::invalid_argument);
}

TEST_CASE("extension keeps values on the set") {
  Rng rng(31);
  int done = 0;
  for (int i = 0; i < 300 && done < 40; ++i) {
    const SpaceTree s = random_space(rng, 3, 8);
    const SubsetTree c = random_subset(rng, s).closure();
    const FuncTree f = random_continuous(rng, s);
    if (c.is_empty()) continue;
    ++done;
    const PresentedFunction e = tietze_extend(f, c);
    CHECK(e.is_continuous());
    for (const auto& x : members(s, c, 3)) CHECK(e.eval(x) == eval(f, x));
  }
}

TEST_CASE("gluing two constants along the limit point") {
  const SubsetTree root = SubsetTree::singleton(w1, {});
  const auto s = glue_stabilizing(w1, {{root, constant(w1, 1)}, {root.complement(), constant(w1, 0)}});
  CHECK(s->target({}) == Rational(1));
  CHECK(s->target(parse_address("T4")) == Rational(0));
  // Term n is 1 on copies >= n - 1 and captures copy c from n = c + 1 on.
  CHECK(s->capture_index(parse_address("T4")) == 5);
  CHECK(s->value(3, parse_address("T4")) == Rational(1));
  CHECK(s->value(5, parse_address("T4")) == Rational(0));
  CHECK(check_stabilization(*s, 5, 10).violations == 0);
  CHECK_THROWS_AS(glue_stabilizing(w1, {{root, constant(w1, 1)}}), std::invalid_argument);
  CHECK_THROWS_AS(glue_stabilizing(w1, {{SubsetTree::full(w1), chi_root(w1)}}), std::invalid_argument);
}

TEST_CASE("rank layers give a stabilizing witness") {
  const LayerReport r = check_layer_decomposition(alternating_family(3), 3);
  CHECK(r.ok());
}

TEST_CASE("step approximation within 3/n") {
  const FuncTree f = func_node(Rational(2, 3), {}, {func_node(Rational(1, 5), {}, {func_node(Rational(-7, 4))}), func_node(Rational(3, 2))});
  for (std::size_t n = 2; n <= 12; ++n) {
    const StepApproximation s = step_approximation(f, n);
    CHECK(s.error <= Rational(3, static_cast<long>(n)));
    CHECK(check_step_approximation(f, s, 3).ok());
  }
  const StepApproximation s = step_approximation(f, 4);
  // k = round(4 f): 2/3 -> 3, 1/5 -> 1, -7/4 -> -7, 3/2 -> 6.
  CHECK(eval(s.step, {}) == Rational(3, 4));
  CHECK(eval(s.step, parse_address("T0.0.T0")) == Rational(-7, 4));
  CHECK_THROWS_AS(step_approximation(drift_example(), 3), std::invalid_argument);
}

TEST_CASE("geometric series") {
  const FuncTree chi = chi_root(w1);
  const SeriesSpec s{w1, {constant(w1, 1)}, SeriesSpec::GeometricTail{chi, Rational(1, 2)}};
  CHECK(s.term(1) == constant(w1, 1));
  CHECK(s.term(3) == scale(Rational(1, 4), chi));
  CHECK(s.target() == func_node(2, {}, {func_node(1)}));
  CHECK(s.remainder(3) == scale(Rational(1, 4), chi));
  CHECK(add(s.partial_sum(4), s.remainder(4)) == s.target());
  const SeriesSpec bad{w1, {}, SeriesSpec::GeometricTail{chi, Rational(1)}};
  CHECK_FALSE(bad.hypothesis_violation().empty());
}

TEST_CASE("tail oscillation bound is tight for the indicator series") {
  const FuncTree chi = chi_root(w1);
  const SeriesSpec s{w1, {}, SeriesSpec::GeometricTail{chi, Rational(1, 2)}};
  const TailOscReport r = lemma53_check(s, 4);
  CHECK(r.hypothesis_ok);
  CHECK(r.violations == 0);
  CHECK(r.min_slack == Extended(0));
  CHECK(r.norm_conclusion);
  const BlockReport b = cor54_check(s);
  CHECK(b.ok());
  CHECK(b.alpha == 1);
}

TEST_CASE("summable gluing reproduces partial sums") {
  const SubsetTree root = SubsetTree::singleton(w1, {});
  const SeriesSpec s{w1, {}, SeriesSpec::GeometricTail{constant(w1, 1), Rational(1, 3)}};
  const auto g = glue_dsc(w1, {{root, series_sequence(s)}, {root.complement(), constant_sequence(constant(w1, 0))}});
  CHECK(check_summability(*g, 4, 8).violations == 0);
  CHECK(g->target({}) == Rational(1, 2));
}
