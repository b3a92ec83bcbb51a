#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tosc/dsl.hpp"

namespace tosc {

using Rng = std::mt19937_64;

struct NamedFunc {
  std::string name;
  FuncTree func;
};

/// Rank parity on omega^k + 1: sup norm 1, D-index k.
FuncTree alternating_family(std::size_t k);
/// Value 0 at the limit of a tail alternating between 1 and -1.
FuncTree alternating_period();
/// Leaves 0, 1, 2, ... accumulating at 0.
FuncTree drift_example();
/// Each inner limit of omega^2 + 1 carries a drifting tail, and the inner
/// limits themselves drift.
FuncTree nested_drift_example();

/// Hand-picked functions with known indices, bounded ones first.
std::vector<NamedFunc> named_examples();

/// Random space of height <= max_height with at most max_size description
/// nodes; the root is a limit whenever max_height > 0.
SpaceTree random_space(Rng& rng, std::size_t max_height, std::size_t max_size);
/// Values in {-2, -3/2, ..., 2}; drift in {-1, 1} on some limits when allowed.
FuncTree random_func(Rng& rng, const SpaceTree& space, bool allow_drift);
/// Continuous: every tail equals its limit value.
FuncTree random_continuous(Rng& rng, const SpaceTree& space);
/// Random flags with an occasional copy override.
SubsetTree random_subset(Rng& rng, const SpaceTree& space);
/// Two or three pieces covering the space, each paired with a continuous
/// function.
std::vector<std::pair<SubsetTree, FuncTree>> random_partition(Rng& rng, const SpaceTree& space);
/// Up to two explicit bounded terms and a bounded geometric tail with
/// ratio of absolute value below 1; all terms continuous when asked.
SeriesSpec random_series(Rng& rng, const SpaceTree& space, bool continuous = false);

struct CorpusFile {
  std::string path;
  Document doc;
};

/// Every *.dsc file of a directory, sorted by file name. Throws ParseError
/// (prefixed with the path) on a malformed file.
std::vector<CorpusFile> load_corpus(const std::string& dir = TOSC_CORPUS_DIR);

/// Named examples, the functions of the corpus files and `random_count`
/// random functions on spaces of height <= 3.
std::vector<NamedFunc> corpus_functions(std::uint64_t seed, std::size_t random_count,
                                        const std::vector<CorpusFile>& files);

}  // namespace tosc
