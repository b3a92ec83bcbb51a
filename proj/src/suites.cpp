#include "tosc/suites.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "tosc/oracle.hpp"
#include "tosc/report.hpp"

namespace tosc {

namespace {

/// Shared inputs of the suites, built from the options.
struct Inputs {
  std::vector<CorpusFile> files;
  std::vector<NamedFunc> functions;
  std::vector<NamedFunc> bounded;
};

Inputs make_inputs(const SuiteOptions& o) {
  Inputs in;
  in.files = load_corpus(o.corpus_dir);
  in.functions = corpus_functions(o.seed, 100, in.files);
  for (const auto& f : in.functions) {
    if (!has_drift(f.func)) in.bounded.push_back(f);
  }
  return in;
}

/// Collects failures; the first few are kept for the detail line.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (notes.size() < 3) notes.push_back(what);
  }
  void guard(const std::string& what, const std::function<bool()>& body) {
    try {
      check(body(), what);
    } catch (const std::exception& e) {
      check(false, what + " threw: " + e.what());
    }
  }
  std::string detail(const std::string& prefix) const {
    std::string out = prefix + "; " + std::to_string(cases) + " checks, " + std::to_string(failures) + " failed";
    for (const auto& n : notes) out += "; " + n;
    return out;
  }
};

bool pointwise_leq(const Profile& a, const Profile& b) { return leq(a, b); }

CriterionResult c1(const SuiteOptions& o) {
  Tally t;
  Rng rng(o.seed ^ 0xC1);
  for (std::size_t i = 0; i < 300; ++i) {
    const FuncTree f = random_func(rng, random_space(rng, 3, 9), i % 5 == 0);
    t.guard("sandwich on random" + std::to_string(i), [&] {
      const Profile one = osc_alpha(f, 1);
      const Profile classical = osc_classical(f);
      return pointwise_leq(one, classical) && pointwise_leq(classical, scale(Rational(2), one));
    });
  }
  const FuncTree alt = alternating_period();
  const Extended osc1 = eval(osc_alpha(alt, 1), {});
  const Extended osc = eval(osc_classical(alt), {});
  t.check(osc == Rational(2) * osc1 && osc1 == Extended(1), "alternating period misses the upper bound");
  return {"C1", "oscillation sandwich", t.failures == 0,
          t.detail("300 random functions, alternating period osc = " + osc.str() + ", osc_1 = " + osc1.str())};
}

CriterionResult c2(const SuiteOptions& o) {
  const Inputs in = make_inputs(o);
  Tally t;
  for (const auto& nf : in.functions) {
    t.guard(nf.name, [&] {
      const DIndexTrace tr = d_index_trace(nf.func);
      std::vector<Profile> stages = tr.stages;
      stages.push_back(osc_next(nf.func, stages.back()));
      for (std::size_t n = 0; n < stages.size(); ++n) {
        if (!is_usc(stages[n])) return false;
        if (n > 0 && !pointwise_leq(stages[n - 1], stages[n])) return false;
      }
      return true;
    });
  }
  return {"C2", "usc and monotone stages", t.failures == 0,
          t.detail(std::to_string(in.functions.size()) + " corpus functions")};
}

// Oracle stages n and n + 1 agree, and stages n - 1 and n do not.
bool oracle_confirms_index(const FuncTree& f, std::size_t n) {
  const SpaceTree space = shape_of(f);
  const UnfoldedSpace u(space, UnfoldedSpace::certified_depth(space));
  if (oracle_osc_alpha(u, f, n) != oracle_osc_alpha(u, f, n + 1)) return false;
  return n == 0 || oracle_osc_alpha(u, f, n - 1) != oracle_osc_alpha(u, f, n);
}

CriterionResult c3(const SuiteOptions&) {
  Tally t;
  const std::vector<std::pair<NamedFunc, std::size_t>> cases = {
      {{"constant", constant(ordinal_power(2), Rational(5))}, 0},
      {{"chi_root", chi_root(ordinal_power(1))}, 1},
      {{"nested indicator", alternating_family(2)}, 2},
      {{"rank-3 alternating", alternating_family(3)}, 3},
  };
  std::string got;
  for (const auto& [nf, expected] : cases) {
    t.guard(nf.name, [&] {
      const std::size_t idx = d_index(nf.func);
      got += (got.empty() ? "" : ", ") + std::to_string(idx);
      if (idx != expected || !oracle_confirms_index(nf.func, idx)) return false;
      for (std::size_t n = 0; n <= idx + 1; ++n) {
        if (!compare_osc_with_oracle(nf.func, n).ok()) return false;
      }
      return true;
    });
  }
  return {"C3", "D-index values", t.failures == 0, t.detail("indices " + got)};
}

CriterionResult c4(const SuiteOptions& o) {
  const Inputs in = make_inputs(o);
  Tally t;
  const FuncTree chi = chi_root(ordinal_power(1));
  const DNormBounds bc = dnorm_bounds(chi);
  t.check(dbsc_norm(chi) == Extended(2) && bc.lower == Rational(2) && bc.upper == Extended(2), "chi_root norm or gap");
  const FuncTree alt = alternating_family(3);
  const DNormBounds ba = dnorm_bounds(alt);
  t.check(dbsc_norm(alt) == Extended(4) && ba.lower >= Rational(3) && ba.upper == Extended(4),
          "rank-3 alternating norm or bounds");
  for (const auto& nf : in.bounded) {
    t.guard(nf.name, [&] {
      const auto d = uv_decomposition(nf.func);
      return d && d->verified && d->d_norm == dbsc_norm(nf.func);
    });
  }
  return {"C4", "D-norm and uv decomposition", t.failures == 0,
          t.detail("chi_root norm " + dbsc_norm(chi).str() + " lower " + bc.lower.str() + ", rank-3 norm " +
                   dbsc_norm(alt).str() + " lower " + ba.lower.str() + ", " + std::to_string(in.bounded.size()) +
                   " bounded functions")};
}

CriterionResult c5(const SuiteOptions&) {
  Tally t;
  const Rational expected[] = {Rational(2), Rational(2), Rational(4)};
  std::string got;
  for (std::size_t k = 1; k <= 3; ++k) {
    const FuncTree f = alternating_family(k);
    const Extended norm = dbsc_norm(f);
    got += (k > 1 ? ", " : "") + norm.str();
    t.check(sup_norm(f) == Extended(1), "sup norm of f_" + std::to_string(k));
    t.check(norm == Extended(expected[k - 1]), "D-norm of f_" + std::to_string(k));
  }
  return {"C5", "norm growth on the alternating family", t.failures == 0, t.detail("D-norms " + got)};
}

bool chain_well_formed(const IndexTrace& tr) {
  for (std::size_t i = 0; i < tr.dsc_chain.size(); ++i) {
    const SubsetTree& k = tr.dsc_chain[i].k;
    if (!is_closed(k)) return false;
    if (i > 0 && (!is_subset(k, tr.dsc_chain[i - 1].k) || k == tr.dsc_chain[i - 1].k)) return false;
  }
  return tr.verdict == Verdict::Dsc && tr.dsc_chain.back().k.is_empty();
}

CriterionResult c6(const SuiteOptions& o) {
  const Inputs in = make_inputs(o);
  Tally t;
  for (const auto& nf : in.bounded) {
    t.guard(nf.name, [&] {
      const IndexTrace tr = dsc_index(nf.func);
      return tr.dsc_index == 1 && chain_well_formed(tr);
    });
  }
  std::size_t drift_len = 0, nested_len = 0;
  t.guard("drift example", [&] {
    const IndexTrace tr = dsc_index(drift_example());
    drift_len = tr.dsc_index;
    return drift_len == 2 && chain_well_formed(tr);
  });
  t.guard("nested drift example", [&] {
    const IndexTrace tr = dsc_index(nested_drift_example());
    nested_len = tr.dsc_index;
    return nested_len == 3 && chain_well_formed(tr);
  });
  for (const auto& nf : in.functions) {
    if (!has_drift(nf.func)) continue;
    t.guard(nf.name, [&] { return chain_well_formed(dsc_index(nf.func)); });
  }
  return {"C6", "DSC index chains", t.failures == 0,
          t.detail(std::to_string(in.bounded.size()) + " bounded functions with index 1, drift chain " +
                   std::to_string(drift_len) + ", nested drift chain " + std::to_string(nested_len))};
}

CriterionResult c7(const SuiteOptions& o) {
  const Inputs in = make_inputs(o);
  Tally t;
  std::size_t sets = 0;
  for (const auto& nf : in.functions) {
    t.guard(nf.name, [&] {
      const StrongContinuityReport r = check_thm51(nf.func, 12);
      sets += r.sets_checked;
      return r.violations == 0 && (r.sets_checked > 0 || nf.func.size() > 12);
    });
  }
  return {"C7", "strong continuity points on closed subspaces", t.failures == 0,
          t.detail(std::to_string(sets) + " closed subspaces")};
}

CriterionResult c8(const SuiteOptions& o) {
  Tally t;
  Rng rng(o.seed ^ 0xC8);
  for (std::size_t i = 0; i < 50; ++i) {
    const SpaceTree space = random_space(rng, 2 + i % 2, 7);
    const auto parts = random_partition(rng, space);
    const std::string tag = "partition " + std::to_string(i);
    t.guard(tag + " stabilizing", [&] {
      const auto s = glue_stabilizing(space, parts);
      return check_stabilization(*s, o.budget, 8).violations == 0;
    });
    std::vector<GluePiece> pieces;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      SequencePtr src = j == 0 ? series_sequence(random_series(rng, space, true)) : constant_sequence(parts[j].second);
      pieces.push_back({parts[j].first, std::move(src)});
    }
    t.guard(tag + " summable", [&] {
      const auto s = glue_dsc(space, pieces);
      return check_summability(*s, o.budget, 8).violations == 0;
    });
  }
  return {"C8", "gluing", t.failures == 0, t.detail("50 random partitions")};
}

CriterionResult c9(const SuiteOptions& o) {
  const Inputs in = make_inputs(o);
  Tally t;
  for (const auto& nf : in.bounded) {
    for (std::size_t n = 2; n <= 12; ++n) {
      t.guard(nf.name + " n=" + std::to_string(n), [&] {
        const StepApproximation s = step_approximation(nf.func, n);
        return s.error <= Rational(3, static_cast<long>(n)) && check_step_approximation(nf.func, s, 3).ok();
      });
    }
  }
  return {"C9", "step approximation", t.failures == 0,
          t.detail(std::to_string(in.bounded.size()) + " bounded functions, n = 2..12")};
}

SeriesSpec chi_series() {
  const FuncTree chi = chi_root(ordinal_power(1));
  return SeriesSpec{shape_of(chi), {}, SeriesSpec::GeometricTail{chi, Rational(1, 2)}};
}

std::vector<SeriesSpec> random_series_family(const SuiteOptions& o) {
  Rng rng(o.seed ^ 0xC10);
  std::vector<SeriesSpec> out;
  for (std::size_t i = 0; i < 100; ++i) out.push_back(random_series(rng, random_space(rng, 3, 7)));
  return out;
}

CriterionResult c10(const SuiteOptions& o) {
  Tally t;
  const auto family = random_series_family(o);
  for (std::size_t i = 0; i < family.size(); ++i) {
    t.guard("series " + std::to_string(i), [&] {
      const TailOscReport r = lemma53_check(family[i], 4);
      return r.hypothesis_ok && r.violations == 0 && r.norm_conclusion;
    });
  }
  // Both sides at the limit point for the geometric chi_root series.
  const SeriesSpec s = chi_series();
  std::size_t equal = 0, total = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t g = 1; g <= 4; ++g) {
      const Extended lhs = eval(osc_alpha(s.remainder(n), g), {});
      const Rational r = s.tail->ratio.abs();
      const Extended rhs = (r.pow(static_cast<long>(n + 1)) / (Rational(1) - r)) * eval(osc_alpha(s.tail->shape, g), {});
      ++total;
      if (lhs == rhs) ++equal;
    }
  }
  t.check(equal == total, "chi_root series misses equality at the limit point");
  return {"C10", "tail oscillation bound", t.failures == 0,
          t.detail("100 random series, chi_root equality " + std::to_string(equal) + "/" + std::to_string(total))};
}

CriterionResult c11(const SuiteOptions& o) {
  const Inputs in = make_inputs(o);
  Tally t;
  std::vector<std::pair<std::string, SeriesSpec>> all = {{"chi_root series", chi_series()}};
  for (const auto& file : in.files) {
    for (const auto& [name, s] : file.doc.series) all.emplace_back(file.path + ":" + name, s.spec);
  }
  const auto family = random_series_family(o);
  for (std::size_t i = 0; i < family.size(); ++i) all.emplace_back("series " + std::to_string(i), family[i]);
  std::size_t skipped = 0;
  for (const auto& [name, s] : all) {
    if (!s.hypothesis_violation().empty()) {
      ++skipped;
      continue;
    }
    t.guard(name, [&] { return cor54_check(s).ok(); });
  }
  return {"C11", "block bounds and DSC verdict for series", t.failures == 0,
          t.detail(std::to_string(all.size() - skipped) + " series satisfying the hypotheses, " +
                   std::to_string(skipped) + " skipped")};
}

CriterionResult c12(const SuiteOptions& o) {
  const Inputs in = make_inputs(o);
  Tally t;
  std::size_t drifted = 0;
  for (const auto& nf : in.functions) {
    if (has_drift(nf.func)) ++drifted;
    t.guard(nf.name, [&] {
      const std::size_t idx = d_index(nf.func);
      for (std::size_t n = 0; n <= idx + 1; ++n) {
        if (!compare_osc_with_oracle(nf.func, n).ok()) return false;
      }
      return true;
    });
  }
  return {"C12", "engine and oracle agree", t.failures == 0,
          t.detail(std::to_string(in.functions.size()) + " functions, " + std::to_string(drifted) + " with drift")};
}

CriterionResult c13(const SuiteOptions& o) {
  const Inputs in = make_inputs(o);
  Tally t;
  RunOptions run;
  run.seed = o.seed;
  run.skip_verbs = {"check"};
  for (const auto& file : in.files) {
    t.guard(file.path + " round trip", [&] {
      const std::string printed = print_document(file.doc);
      const Document again = parse_document(printed);
      return again == file.doc && print_document(again) == printed;
    });
    t.guard(file.path + " determinism", [&] {
      const std::string a = run_document(file.doc, run).json.dump(2);
      const std::string b = run_document(parse_document(print_document(file.doc)), run).json.dump(2);
      return a == b;
    });
  }
  t.check(in.files.size() >= 20, "fewer than 20 corpus files");
  return {"C13", "DSL round trip and report determinism", t.failures == 0,
          t.detail(std::to_string(in.files.size()) + " corpus files")};
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 13; ++i) ids.push_back("C" + std::to_string(i));
  return ids;
}

CriterionResult run_criterion(const std::string& id, const SuiteOptions& options) {
  using Fn = CriterionResult (*)(const SuiteOptions&);
  static const std::pair<const char*, Fn> table[] = {
      {"C1", c1}, {"C2", c2}, {"C3", c3},   {"C4", c4},   {"C5", c5},   {"C6", c6},  {"C7", c7},
      {"C8", c8}, {"C9", c9}, {"C10", c10}, {"C11", c11}, {"C12", c12}, {"C13", c13},
  };
  for (const auto& [name, fn] : table) {
    if (id == name) return fn(options);
  }
  throw std::invalid_argument("unknown criterion '" + id + "'");
}

std::vector<CriterionResult> run_all_criteria(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& id : criterion_ids()) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace tosc
