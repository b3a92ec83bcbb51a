#include <doctest.h>

#include "tosc/corpus.hpp"
#include "tosc/report.hpp"

using namespace tosc;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("reading the indicator of a limit point") {
  const Document d = parse_document("space S = lim(; pt)\nfunc f on S = (1 ; ; 0)\n");
  CHECK(d.spaces.at("S") == ordinal_power(1));
  CHECK(d.funcs.at("f").func == chi_root(ordinal_power(1)));
  CHECK(d.funcs.at("f").space == "S");
}

TEST_CASE("spaces print canonically") {
  CHECK(print_space(ordinal_power(1)) == "lim(; pt)");
  CHECK(print_space(limit({leaf()}, {})) == "lim(pt;)");
  CHECK(print_space(limit({leaf(), ordinal_power(1)}, {leaf()})) == "lim(pt, lim(; pt); pt)");
  CHECK(parse_space("lim ( pt , lim(;pt) ; pt ) # comment") == limit({leaf(), ordinal_power(1)}, {leaf()}));
}

TEST_CASE("drift binds by shape") {
  const SpaceTree w1 = ordinal_power(1), w2 = ordinal_power(2);
  CHECK(parse_func("(0 ; ; 0 drift 1)", w1) == drift_example());
  CHECK(parse_func("0 drift 1", w1) == drift_example());
  CHECK(parse_func("(0 ; ; 0 drift 1 drift 1)", w2) == nested_drift_example());
  CHECK(print_func(nested_drift_example()) == "(0 ; ; 0 drift 1 drift 1)");
  // A bare drift on a limit belongs to that limit only.
  const FuncTree top_only = func_node(0, {}, {constant(w1, 0)}, 1);
  CHECK(print_func(top_only) == "0 drift 1");
  CHECK(parse_func(print_func(top_only), w2) == top_only);
  CHECK(print_func(chi_root(w1)) == "(1 ; ; 0)");
  CHECK(print_func(constant(w2, Rational(-3, 2))) == "-3/2");
}

TEST_CASE("sets with overrides") {
  const SpaceTree w1 = ordinal_power(1);
  const SubsetTree s = parse_set("(0 ; ; 0 | 2.0: 1, 0.0: 1)", w1);
  CHECK(s.contains(parse_address("T0")));
  CHECK_FALSE(s.contains(parse_address("T1")));
  CHECK(s.contains(parse_address("T2")));
  CHECK(print_set(s) == "(0 ; ; 0 | 0.0: 1, 2.0: 1)");
  CHECK(print_set(SubsetTree::full(ordinal_power(3))) == "1");
  CHECK(parse_set("(1 ; ; 1 | 3.0: 1)", w1) == SubsetTree::full(w1));
}

TEST_CASE("error reports carry a position") {
  CHECK(error_of("space S = lim(; pt)\nfunc f on S = (1/0 ; ; 0)") == "2:16: malformed rational: zero denominator");
  CHECK(error_of("func f on S = 1") == "1:11: unknown space 'S'");
  CHECK(error_of("space S = pt\nspace S = pt") == "2:7: duplicate name 'S'");
  CHECK(error_of("space S = lim(; pt)\nfunc f on S = (1 ; ; 0, 0)").find("shape mismatch") != std::string::npos);
  CHECK(error_of("space S = lim(; pt)\nseries s on S = [g]") == "2:18: unknown func 'g'");
  CHECK(error_of("space S = lim(; pt") == "1:19: expected ')', found end of input");
  CHECK(error_of("space S = pt\nfunc f on S = 1 drift 2").find("unexpected") == std::string::npos);
}

TEST_CASE("documents round trip") {
  const auto files = load_corpus();
  CHECK(files.size() >= 20);
  for (const auto& f : files) {
    const std::string printed = print_document(f.doc);
    CHECK(parse_document(printed) == f.doc);
    CHECK(print_document(parse_document(printed)) == printed);
  }
  Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const SpaceTree s = random_space(rng, 3, 9);
    const FuncTree f = random_func(rng, s, true);
    const SubsetTree a = random_subset(rng, s);
    CHECK(parse_space(print_space(s)) == s);
    CHECK(parse_func(print_func(f), s) == f);
    CHECK(parse_set(print_set(a), s) == a);
  }
}

TEST_CASE("task reports") {
  const Document d = parse_document(
      "space S = lim(; pt)\nfunc f on S = (1 ; ; 0)\ntask osc(f, 2)\ntask dnorm(f)\ntask eval(f, T3)\n");
  const TaskResult osc = run_task(d, d.tasks[0], RunOptions{});
  CHECK(osc.json["profile"]["ε"] == "1");
  CHECK(osc.json["profile"]["T0"] == "0");
  CHECK(osc.json["oracle_agreement"] == true);
  const TaskResult dn = run_task(d, d.tasks[1], RunOptions{});
  CHECK(dn.json["d_norm"] == "2");
  CHECK(dn.json["tau"] == 1);
  CHECK(dn.json["oracle_lower"] == "2");
  CHECK_FALSE(dn.violation);
  CHECK(run_task(d, d.tasks[2], RunOptions{}).json["values"]["T3"] == "0");
  CHECK(run_document(d, RunOptions{}).json.dump() == run_document(d, RunOptions{}).json.dump());
  const Document bad = parse_document("task osc(g)");
  CHECK_THROWS_AS(run_task(bad, bad.tasks[0], RunOptions{}), std::invalid_argument);
}
