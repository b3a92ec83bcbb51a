#include "tosc/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tosc {

FuncTree alternating_family(std::size_t k) { return rank_parity(ordinal_power(k)); }

FuncTree alternating_period() { return func_node(0, {}, {func_node(1), func_node(-1)}); }

FuncTree drift_example() { return func_node(0, {}, {func_node(0)}, 1); }

FuncTree nested_drift_example() { return func_node(0, {}, {drift_example()}, 1); }

std::vector<NamedFunc> named_examples() {
  std::vector<NamedFunc> out;
  out.push_back({"constant_w2", constant(ordinal_power(2), Rational(3))});
  for (std::size_t k = 1; k <= 3; ++k) out.push_back({"alternating_w" + std::to_string(k), alternating_family(k)});
  out.push_back({"alternating_period", alternating_period()});
  out.push_back({"half_steps", func_node(0, {func_node(1, {}, {func_node(1, {}, {func_node(1)})})},
                                         {func_node(Rational(1, 2), {}, {func_node(Rational(-1, 2))})})});
  out.push_back({"drift", drift_example()});
  out.push_back({"nested_drift", nested_drift_example()});
  return out;
}

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational small_value(Rng& rng) { return Rational(static_cast<long>(pick(rng, 0, 8)) - 4, 2); }

SpaceTree grow(Rng& rng, std::size_t height, std::size_t& budget, bool force_limit) {
  if (budget == 0) return leaf();
  --budget;
  if (height == 0 || budget == 0 || (!force_limit && coin(rng, 0.35))) return leaf();
  SpaceTree::Children prefix, period;
  const std::size_t np = pick(rng, 0, 1);
  const std::size_t nq = coin(rng, 0.25) ? 2 : 1;
  for (std::size_t i = 0; i < nq && budget > 0; ++i) period.push_back(grow(rng, height - 1, budget, false));
  if (period.empty()) period.push_back(leaf());
  for (std::size_t i = 0; i < np && budget > 0; ++i) prefix.push_back(grow(rng, height - 1, budget, false));
  return limit(std::move(prefix), std::move(period));
}

}  // namespace

SpaceTree random_space(Rng& rng, std::size_t max_height, std::size_t max_size) {
  // A period member always needs one node, hence the reserve.
  std::size_t budget = max_size > 1 ? max_size - 1 : 0;
  return grow(rng, max_height, budget, max_height > 0 && max_size > 1);
}

FuncTree random_func(Rng& rng, const SpaceTree& space, bool allow_drift) {
  FuncTree::Children prefix, period;
  for (const auto& c : space.prefix()) prefix.push_back(random_func(rng, c, allow_drift));
  for (const auto& c : space.period()) period.push_back(random_func(rng, c, allow_drift));
  Rational drift(0);
  if (allow_drift && space.is_limit() && coin(rng, 0.3)) drift = Rational(coin(rng, 0.5) ? 1 : -1);
  return FuncTree(FuncLabel{small_value(rng), drift}, std::move(prefix), std::move(period));
}

FuncTree random_continuous(Rng& rng, const SpaceTree& space) {
  const Rational v = small_value(rng);
  FuncTree::Children prefix, period;
  for (const auto& c : space.prefix()) prefix.push_back(random_continuous(rng, c));
  for (const auto& c : space.period()) period.push_back(constant(c, v));
  return FuncTree(FuncLabel{v, Rational(0)}, std::move(prefix), std::move(period));
}

SubsetTree random_subset(Rng& rng, const SpaceTree& space) {
  SubsetTree::Children prefix, period;
  for (const auto& c : space.prefix()) prefix.push_back(random_subset(rng, c));
  for (const auto& c : space.period()) period.push_back(random_subset(rng, c));
  std::vector<SubsetTree::Override> overrides;
  if (space.is_limit() && coin(rng, 0.3)) {
    const std::size_t m = pick(rng, 0, space.period().size() - 1);
    overrides.push_back({pick(rng, 0, 2), m, random_subset(rng, space.period()[m])});
  }
  return SubsetTree(coin(rng, 0.5), std::move(prefix), std::move(period), std::move(overrides));
}

std::vector<std::pair<SubsetTree, FuncTree>> random_partition(Rng& rng, const SpaceTree& space) {
  const SubsetTree a = random_subset(rng, space);
  std::vector<SubsetTree> sets;
  if (coin(rng, 0.5)) {
    const SubsetTree b = random_subset(rng, space);
    sets = {intersect(a, b), minus(a, b), a.complement()};
  } else {
    sets = {a, a.complement()};
  }
  std::vector<std::pair<SubsetTree, FuncTree>> out;
  for (auto& s : sets) {
    if (!s.is_empty()) out.emplace_back(std::move(s), random_continuous(rng, space));
  }
  return out;
}

SeriesSpec random_series(Rng& rng, const SpaceTree& space, bool continuous) {
  static const Rational ratios[] = {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(2, 3), Rational(-3, 4)};
  SeriesSpec s{space, {}, std::nullopt};
  const std::size_t terms = pick(rng, 0, 2);
  auto term = [&] { return continuous ? random_continuous(rng, space) : random_func(rng, space, false); };
  for (std::size_t i = 0; i < terms; ++i) s.terms.push_back(term());
  s.tail = SeriesSpec::GeometricTail{term(), ratios[pick(rng, 0, 4)]};
  return s;
}

std::vector<CorpusFile> load_corpus(const std::string& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".dsc") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusFile> out;
  for (const auto& p : paths) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      out.push_back({p.string(), parse_document(ss.str())});
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), p.filename().string() + ": " + e.reason());
    }
  }
  return out;
}

std::vector<NamedFunc> corpus_functions(std::uint64_t seed, std::size_t random_count,
                                        const std::vector<CorpusFile>& files) {
  std::vector<NamedFunc> out = named_examples();
  for (const auto& file : files) {
    const std::string stem = std::filesystem::path(file.path).stem().string();
    for (const auto& [name, f] : file.doc.funcs) out.push_back({stem + ":" + name, f.func});
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    const SpaceTree space = random_space(rng, 3, 9);
    out.push_back({"random" + std::to_string(i), random_func(rng, space, coin(rng, 0.2))});
  }
  return out;
}

}  // namespace tosc
