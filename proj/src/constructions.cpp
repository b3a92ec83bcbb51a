#include "tosc/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tosc {

Rational PresentedFunction::eval(const PointAddress& original_addr) const {
  return tosc::eval(func, presentation.to_unrolled(original_addr));
}

PresentedFunction tietze_extend(const FuncTree& f, const SubsetTree& c) {
  const SpaceTree space = shape_of(f);
  if (!c.matches(space)) throw std::invalid_argument("shape mismatch");
  if (!is_closed(c)) throw std::invalid_argument("extension from a set that is not closed");
  if (!is_continuous_on(f, c)) throw std::invalid_argument("function is not continuous on the set");
  const std::size_t depth = c.max_override_depth();
  Unrolled u(space, depth);
  const FuncTree fu = unroll_func(f, depth);
  const SubsetTree cu = unroll_subset(c, depth);
  struct Rec {
    FuncTree operator()(const FuncTree& t, const SubsetTree& s, const Rational& inherited) const {
      const Rational v = s.member() ? t.label().value : inherited;
      FuncTree::Children p, q;
      for (std::size_t i = 0; i < t.prefix().size(); ++i) p.push_back((*this)(t.prefix()[i], s.prefix()[i], v));
      for (std::size_t i = 0; i < t.period().size(); ++i) q.push_back((*this)(t.period()[i], s.period()[i], v));
      return func_node(v, std::move(p), std::move(q));
    }
  };
  return PresentedFunction{std::move(u), Rec{}(fu, cu, Rational(0))};
}

const char* kind_name(SequenceKind k) { return k == SequenceKind::Stabilizing ? "stabilizing" : "summable"; }

namespace {

class ConstantSequence : public FunctionSequence {
 public:
  explicit ConstantSequence(FuncTree f) : f_(std::move(f)), space_(shape_of(f_)) {}
  SequenceKind kind() const override { return SequenceKind::Stabilizing; }
  const SpaceTree& space() const override { return space_; }
  Rational value(std::size_t, const PointAddress& x) const override { return eval(f_, x); }
  PresentedFunction term(std::size_t) const override { return {Unrolled(space_, 0), f_}; }
  Rational target(const PointAddress& x) const override { return eval(f_, x); }
  std::optional<std::size_t> stabilization_index(const PointAddress&) const override { return 1; }
  Extended variation_from(const PointAddress&, std::size_t) const override { return Extended(0); }

 private:
  FuncTree f_;
  SpaceTree space_;
};

Extended geometric_tail(const Rational& abs_ratio, std::size_t first_power) {
  return Extended(abs_ratio.pow(static_cast<long>(first_power)) / (Rational(1) - abs_ratio));
}

}  // namespace

SequencePtr constant_sequence(const FuncTree& f) { return std::make_shared<ConstantSequence>(f); }

GluedSequence::GluedSequence(SpaceTree space, std::vector<GluePiece> pieces, SequenceKind kind)
    : space_(std::move(space)), pieces_(std::move(pieces)), kind_(kind) {
  if (pieces_.empty()) throw std::invalid_argument("cover failure: no pieces");
  SubsetTree covered = SubsetTree::empty(space_);
  for (const auto& p : pieces_) {
    if (!p.source) throw std::invalid_argument("missing witness sequence");
    if (!p.set.matches(space_)) throw std::invalid_argument("shape mismatch");
    if (!classify_subset(space_, p.set).is_ambiguous) throw std::invalid_argument("piece is not ambiguous");
    disjoint_.push_back(minus(p.set, covered));
    covered = unite(covered, p.set);
  }
  if (!covered.is_full()) throw std::invalid_argument("cover failure: pieces do not cover the space");
}

SubsetTree GluedSequence::exhaustion_set(std::size_t n, std::size_t j) const {
  return exhaustion(disjoint_.at(j - 1), n);
}

std::size_t GluedSequence::piece_of(const PointAddress& x) const {
  for (std::size_t j = 0; j < disjoint_.size(); ++j) {
    if (disjoint_[j].contains(x)) return j + 1;
  }
  throw std::logic_error("point outside every piece");
}

std::size_t GluedSequence::capture_index(const PointAddress& x) const {
  return std::max<std::size_t>({piece_of(x), copy_depth(x), 1});
}

std::optional<Rational> GluedSequence::anchored(std::size_t n, const PointAddress& a) const {
  if (copy_depth(a) > n) return std::nullopt;
  const std::size_t j = piece_of(a);
  if (j > n) return std::nullopt;
  return pieces_[j - 1].source->value(n, a);
}

Rational GluedSequence::value(std::size_t n, const PointAddress& x) const {
  validate_address(space_, x);
  PointAddress a;
  Rational v = anchored(n, a).value_or(Rational(0));
  for (const auto& s : x) {
    if (s.is_tail() && s.copy >= n) break;
    a.push_back(s);
    if (auto w = anchored(n, a)) v = *w;
  }
  return v;
}

PresentedFunction GluedSequence::term(std::size_t n) const {
  struct Rec {
    const GluedSequence& g;
    std::size_t n;
    FuncTree operator()(const SpaceTree& o, const PointAddress& a, const Rational& inherited) const {
      const Rational v = g.anchored(n, a).value_or(inherited);
      FuncTree::Children p, q;
      for (std::size_t i = 0; i < o.prefix().size(); ++i) p.push_back((*this)(o.prefix()[i], extend(a, Selector::prefix(i)), v));
      for (std::uint64_t c = 0; c < n && o.is_limit(); ++c) {
        for (std::size_t i = 0; i < o.period().size(); ++i) p.push_back((*this)(o.period()[i], extend(a, Selector::tail(c, i)), v));
      }
      for (const auto& m : o.period()) q.push_back(constant(unroll_space(m, n), v));
      return func_node(v, std::move(p), std::move(q));
    }
  };
  return {Unrolled(space_, n), Rec{*this, n}(space_, {}, Rational(0))};
}

Rational GluedSequence::target(const PointAddress& x) const { return pieces_[piece_of(x) - 1].source->target(x); }

std::optional<std::size_t> GluedSequence::stabilization_index(const PointAddress& x) const {
  const auto inner = pieces_[piece_of(x) - 1].source->stabilization_index(x);
  if (!inner) return std::nullopt;
  return std::max(capture_index(x), *inner);
}

Extended GluedSequence::variation_from(const PointAddress& x, std::size_t n0) const {
  n0 = std::max<std::size_t>(n0, 1);
  const std::size_t m = capture_index(x);
  Extended total(0);
  for (std::size_t k = n0; k < m; ++k) total = total + Extended((value(k + 1, x) - value(k, x)).abs());
  return total + pieces_[piece_of(x) - 1].source->variation_from(x, std::max(n0, m));
}

std::shared_ptr<const GluedSequence> glue_stabilizing(const SpaceTree& space,
                                                      const std::vector<std::pair<SubsetTree, FuncTree>>& pieces) {
  std::vector<GluePiece> glue;
  for (const auto& [set, f] : pieces) {
    require_same_shape(f, space);
    glue.push_back({set, constant_sequence(f)});
  }
  auto out = std::make_shared<const GluedSequence>(space, std::move(glue), SequenceKind::Stabilizing);
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    if (!is_continuous_on(pieces[j].second, out->pieces()[j])) {
      throw std::invalid_argument("restriction to piece " + std::to_string(j + 1) + " is not continuous");
    }
  }
  return out;
}

std::shared_ptr<const GluedSequence> glue_dsc(const SpaceTree& space, const std::vector<GluePiece>& pieces) {
  return std::make_shared<const GluedSequence>(space, pieces, SequenceKind::Summable);
}

std::shared_ptr<const GluedSequence> ps_witness(const FuncTree& f) {
  const SpaceTree space = shape_of(f);
  std::vector<std::pair<SubsetTree, FuncTree>> pieces;
  for (std::size_t r = 0; r <= height(space); ++r) {
    SubsetTree layer = rank_layer(space, r);
    if (!layer.is_empty()) pieces.emplace_back(std::move(layer), f);
  }
  return glue_stabilizing(space, pieces);
}

namespace {

void note(SequenceCheck& c, std::string msg) {
  ++c.violations;
  if (c.messages.size() < 10) c.messages.push_back(std::move(msg));
}

}  // namespace

SequenceCheck check_stabilization(const FunctionSequence& s, std::size_t budget, std::size_t horizon) {
  SequenceCheck out;
  const auto points = enumerate_points(s.space(), budget);
  for (std::size_t n = 1; n <= horizon; ++n) {
    const PresentedFunction t = s.term(n);
    if (!t.is_continuous()) note(out, "term " + std::to_string(n) + " is not continuous");
    for (const auto& x : points) {
      if (t.eval(x) != s.value(n, x)) note(out, "term " + std::to_string(n) + " disagrees with direct evaluation");
    }
  }
  for (const auto& x : points) {
    ++out.points;
    const auto m = s.stabilization_index(x);
    if (!m) {
      note(out, "no stabilization index at " + format_address(s.space(), x));
      continue;
    }
    for (std::size_t n = *m; n <= std::max(*m, horizon); ++n) {
      if (s.value(n, x) != s.target(x)) {
        note(out, "term " + std::to_string(n) + " differs from the target at " + format_address(s.space(), x));
        break;
      }
    }
  }
  return out;
}

SequenceCheck check_summability(const FunctionSequence& s, std::size_t budget, std::size_t horizon,
                                bool require_continuous) {
  SequenceCheck out;
  for (std::size_t n = 1; require_continuous && n <= horizon; ++n) {
    if (!s.term(n).is_continuous()) note(out, "term " + std::to_string(n) + " is not continuous");
  }
  for (const auto& x : enumerate_points(s.space(), budget)) {
    ++out.points;
    const Extended cert = s.variation_from(x, 1);
    Extended partial(0);
    for (std::size_t k = 1; k < horizon; ++k) partial = partial + Extended((s.value(k + 1, x) - s.value(k, x)).abs());
    const Extended rest = s.variation_from(x, horizon);
    if (!cert.is_finite() || partial + rest != cert || partial > cert) {
      note(out, "certificate mismatch at " + format_address(s.space(), x));
    } else if (Extended((s.target(x) - s.value(horizon, x)).abs()) > rest) {
      note(out, "remainder exceeds certified variation at " + format_address(s.space(), x));
    }
  }
  return out;
}

LayerReport check_layer_decomposition(const FuncTree& f, std::size_t budget) {
  LayerReport rep;
  const SpaceTree space = shape_of(f);
  std::vector<SubsetTree> layers;
  for (std::size_t r = 0; r <= height(space); ++r) layers.push_back(rank_layer(space, r));
  rep.pieces_locally_closed = std::all_of(layers.begin(), layers.end(), [&](const SubsetTree& l) {
    return classify_subset(space, l).is_locally_closed;
  });
  SubsetTree covered = SubsetTree::empty(space);
  rep.pieces_partition = true;
  for (const auto& l : layers) {
    if (!intersect(covered, l).is_empty()) rep.pieces_partition = false;
    covered = unite(covered, l);
  }
  rep.pieces_partition = rep.pieces_partition && covered.is_full();
  rep.restrictions_continuous =
      std::all_of(layers.begin(), layers.end(), [&](const SubsetTree& l) { return is_continuous_on(f, l); });
  if (!rep.restrictions_continuous) return rep;
  const auto w = ps_witness(f);
  const std::size_t horizon = std::max<std::size_t>(budget, layers.size()) + 1;
  rep.witness_stabilizes = check_stabilization(*w, budget, horizon).violations == 0;
  rep.witness_matches_target = true;
  for (const auto& x : enumerate_points(space, budget)) {
    if (w->target(x) != eval(f, x)) rep.witness_matches_target = false;
  }
  return rep;
}

namespace {

long floor_mod(long a, long n) { return ((a % n) + n) % n; }

long to_long(const Rational& q) { return std::stol(q.str()); }

SubsetTree value_set(const FuncTree& f, const auto& pred) {
  struct Rec {
    const decltype(pred)& p;
    SubsetTree operator()(const FuncTree& t) const {
      SubsetTree::Children a, b;
      for (const auto& c : t.prefix()) a.push_back((*this)(c));
      for (const auto& c : t.period()) b.push_back((*this)(c));
      return SubsetTree(p(t.label().value), std::move(a), std::move(b));
    }
  };
  return Rec{pred}(f);
}

}  // namespace

StepApproximation step_approximation(const FuncTree& f, std::size_t n) {
  if (n < 2) throw std::invalid_argument("step approximation needs n >= 2");
  if (has_drift(f)) throw std::invalid_argument("step approximation of an unbounded function");
  const Rational nq(static_cast<long>(n));
  std::set<long> levels;
  StepApproximation out{n, map_tree(f, [&](const FuncTree& t) {
    const Rational k = (t.label().value * nq).round_half_up();
    levels.insert(to_long(k));
    return FuncLabel{k / nq, Rational(0)};
  }), {}, Rational(0)};
  for (long k : levels) {
    const long j = floor_mod(k - 1, static_cast<long>(n)) + 1;
    SubsetTree w = value_set(f, [&](const Rational& v) { return (v * nq).round_half_up() == Rational(k); });
    out.pieces.push_back({std::move(w), k - j, j});
  }
  out.error = sup_norm(subtract(f, out.step)).finite();
  return out;
}

StepCheck check_step_approximation(const FuncTree& f, const StepApproximation& s, std::size_t budget) {
  StepCheck out;
  const SpaceTree space = shape_of(f);
  const Rational nq(static_cast<long>(s.n));
  const FuncTree diff = subtract(f, s.step);
  Extended exact = Extended::neg_inf();
  SubsetTree covered = SubsetTree::empty(space);
  out.partition = out.bands_nested = out.piece_in_band = out.range_discrete = true;
  std::vector<std::pair<SubsetTree, FuncTree>> glue;
  for (const auto& p : s.pieces) {
    const Rational k(p.m + p.j);
    if (p.j < 1 || p.j > static_cast<long>(s.n) || p.set.is_empty()) out.range_discrete = false;
    if (!intersect(covered, p.set).is_empty()) out.partition = false;
    covered = unite(covered, p.set);
    exact = max(exact, max(sup_over(diff, p.set), -inf_over(diff, p.set)));
    // G = f^{-1}[(k-1)/n, k/n] and F = f^{-1}((k-2)/n, (k+1)/n) around A = G u W.
    const SubsetTree g = value_set(f, [&](const Rational& v) { return (k - 1) / nq <= v && v <= k / nq; });
    const SubsetTree big = value_set(f, [&](const Rational& v) { return (k - 2) / nq < v && v < (k + 1) / nq; });
    if (!is_subset(unite(g, p.set), big)) out.bands_nested = false;
    if (!(sup_over(f, p.set) < Extended((k + 1) / nq)) || !(inf_over(f, p.set) > Extended((k - 2) / nq))) {
      out.piece_in_band = false;
    }
    if (sup_over(s.step, p.set) != Extended(k / nq) || inf_over(s.step, p.set) != Extended(k / nq)) {
      out.range_discrete = false;
    }
    glue.emplace_back(p.set, constant(space, k / nq));
  }
  out.partition = out.partition && covered.is_full();
  out.error_within_bound = exact == Extended(s.error) && s.error <= Rational(3) / nq;
  if (!out.partition) return out;
  const auto w = glue_stabilizing(space, glue);
  const std::size_t horizon = std::max<std::size_t>(budget, glue.size()) + 1;
  out.ps_verified = check_stabilization(*w, budget, horizon).violations == 0;
  for (const auto& x : enumerate_points(space, budget)) {
    if (w->target(x) != eval(s.step, x)) out.ps_verified = false;
  }
  return out;
}

FuncTree SeriesSpec::term(std::size_t j) const {
  if (j == 0) throw std::out_of_range("series terms start at 1");
  if (j <= terms.size()) return terms[j - 1];
  if (!tail) return constant(space, Rational(0));
  return scale(tail->ratio.pow(static_cast<long>(j - terms.size())), tail->shape);
}

FuncTree SeriesSpec::partial_sum(std::size_t n) const {
  FuncTree acc = constant(space, Rational(0));
  for (std::size_t j = 1; j <= n; ++j) acc = add(acc, term(j));
  return acc;
}

FuncTree SeriesSpec::target() const { return add(partial_sum(terms.size()), remainder(terms.size())); }

FuncTree SeriesSpec::remainder(std::size_t n) const {
  const std::size_t big_j = terms.size();
  FuncTree acc = constant(space, Rational(0));
  for (std::size_t j = n + 1; j <= big_j; ++j) acc = add(acc, term(j));
  if (!tail) return acc;
  if (tail->ratio.abs() >= Rational(1)) throw std::domain_error("geometric tail does not converge");
  const std::size_t first = std::max(n, big_j) - big_j + 1;
  const Rational coef = tail->ratio.pow(static_cast<long>(first)) / (Rational(1) - tail->ratio);
  return add(acc, scale(coef, tail->shape));
}

std::string SeriesSpec::hypothesis_violation() const {
  for (const auto& t : terms) {
    if (!same_shape(t, space)) return "term shape mismatch";
    if (has_drift(t)) return "term with drift";
  }
  if (tail) {
    if (!same_shape(tail->shape, space)) return "tail shape mismatch";
    if (has_drift(tail->shape)) return "tail shape with drift";
    if (tail->ratio.abs() >= Rational(1)) return "tail ratio not below 1 in absolute value";
  }
  return {};
}

namespace {

class SeriesSequence : public FunctionSequence {
 public:
  explicit SeriesSequence(SeriesSpec s) : s_(std::move(s)), target_(s_.target()) {}
  SequenceKind kind() const override { return SequenceKind::Summable; }
  const SpaceTree& space() const override { return s_.space; }
  Rational value(std::size_t n, const PointAddress& x) const override {
    Rational acc(0);
    for (std::size_t j = 1; j <= n; ++j) acc += eval(s_.term(j), x);
    return acc;
  }
  PresentedFunction term(std::size_t n) const override { return {Unrolled(s_.space, 0), s_.partial_sum(n)}; }
  Rational target(const PointAddress& x) const override { return eval(target_, x); }
  std::optional<std::size_t> stabilization_index(const PointAddress& x) const override {
    if (s_.tail && !eval(s_.tail->shape, x).is_zero()) return std::nullopt;
    std::size_t m = 1;
    for (std::size_t j = 1; j <= s_.terms.size(); ++j) {
      if (!eval(s_.terms[j - 1], x).is_zero()) m = j;
    }
    return m;
  }
  Extended variation_from(const PointAddress& x, std::size_t n0) const override {
    n0 = std::max<std::size_t>(n0, 1);
    const std::size_t big_j = s_.terms.size();
    Rational acc(0);
    for (std::size_t j = n0 + 1; j <= big_j; ++j) acc += eval(s_.terms[j - 1], x).abs();
    Extended total(acc);
    if (s_.tail) {
      const std::size_t first = std::max(n0 + 1, big_j + 1) - big_j;
      total = total + eval(s_.tail->shape, x).abs() * geometric_tail(s_.tail->ratio.abs(), first);
    }
    return total;
  }

 private:
  SeriesSpec s_;
  FuncTree target_;
};

std::vector<Profile> osc_stages(const FuncTree& f, std::size_t count) {
  std::vector<Profile> out{zero_profile(shape_of(f))};
  for (std::size_t i = 0; i < count; ++i) out.push_back(osc_next(f, out.back()));
  return out;
}

}  // namespace

SequencePtr series_sequence(const SeriesSpec& s) {
  if (const auto why = s.hypothesis_violation(); !why.empty()) throw std::invalid_argument(why);
  return std::make_shared<SeriesSequence>(s);
}

TailOscReport lemma53_check(const SeriesSpec& s, std::size_t gamma_max) {
  TailOscReport rep;
  rep.hypothesis_message = s.hypothesis_violation();
  rep.hypothesis_ok = rep.hypothesis_message.empty();
  if (!rep.hypothesis_ok) return rep;
  const std::size_t big_j = s.terms.size();
  const Rational abs_ratio = s.tail ? s.tail->ratio.abs() : Rational(0);
  std::vector<std::vector<Profile>> term_osc;
  for (const auto& t : s.terms) term_osc.push_back(osc_stages(t, gamma_max));
  const std::vector<Profile> shape_osc = s.tail ? osc_stages(s.tail->shape, gamma_max) : std::vector<Profile>{};
  rep.norm_conclusion = true;
  for (std::size_t n = 0; n <= big_j + 3; ++n) {
    const std::vector<Profile> lhs = osc_stages(s.remainder(n), gamma_max);
    for (std::size_t g = 0; g <= gamma_max; ++g) {
      Profile rhs = zero_profile(s.space);
      Extended norm_tail(0);
      for (std::size_t j = n + 1; j <= big_j; ++j) {
        rhs = add(rhs, term_osc[j - 1][g]);
        norm_tail = norm_tail + sup_all(term_osc[j - 1][g]);
      }
      if (s.tail) {
        const Extended coef = geometric_tail(abs_ratio, std::max(n, big_j) - big_j + 1);
        rhs = add(rhs, scale(coef.finite(), shape_osc[g]));
        norm_tail = norm_tail + coef.finite() * sup_all(shape_osc[g]);
      }
      const Flat<Extended> fl(lhs[g]);
      const Flat<Extended> fr(rhs);
      for (std::size_t i = 0; i < fl.size(); ++i) {
        const Extended& a = fl.nodes[i].tree->label();
        const Extended& b = fr.nodes[i].tree->label();
        ++rep.checks;
        if (a > b) {
          ++rep.violations;
        } else if (a == b) {
          ++rep.equalities;
          rep.min_slack = min(rep.min_slack, Extended(0));
        } else if (a.is_finite() && b.is_finite()) {
          rep.min_slack = min(rep.min_slack, b - a);
        }
      }
      if (sup_all(lhs[g]) > norm_tail) rep.norm_conclusion = false;
    }
  }
  return rep;
}

BlockReport cor54_check(const SeriesSpec& s, std::size_t block_count) {
  BlockReport rep;
  rep.hypothesis_message = s.hypothesis_violation();
  rep.hypothesis_ok = rep.hypothesis_message.empty();
  if (!rep.hypothesis_ok) return rep;
  const std::size_t big_j = s.terms.size();
  std::size_t alpha = 1;
  for (const auto& t : s.terms) alpha = std::max(alpha, d_index(t));
  if (s.tail) alpha = std::max(alpha, d_index(s.tail->shape));
  rep.alpha = alpha;

  std::map<std::size_t, Profile> osc_cache;
  auto term_osc = [&](std::size_t j) -> const Profile& {
    auto it = osc_cache.find(j);
    if (it == osc_cache.end()) it = osc_cache.emplace(j, osc_alpha(s.term(j), alpha)).first;
    return it->second;
  };
  const Profile shape_osc = s.tail ? osc_alpha(s.tail->shape, alpha) : zero_profile(s.space);
  const Rational abs_ratio = s.tail ? s.tail->ratio.abs() : Rational(0);
  // Exact norm of the tail sum of osc_alpha phi_j over j > n.
  auto tail_norm = [&](std::size_t n) {
    Profile acc = zero_profile(s.space);
    for (std::size_t j = n + 1; j <= big_j; ++j) acc = add(acc, term_osc(j));
    if (s.tail) acc = add(acc, scale(geometric_tail(abs_ratio, std::max(n, big_j) - big_j + 1).finite(), shape_osc));
    return sup_all(acc);
  };
  const std::size_t search_limit = big_j + 400;
  std::size_t prev = 0;
  for (std::size_t i = 1; i <= block_count + 1; ++i) {
    const Extended bound(Rational(1, 2).pow(static_cast<long>(i)));
    std::size_t n = rep.blocks.empty() ? 0 : prev + 1;
    while (n <= search_limit && !(tail_norm(n) < bound)) ++n;
    if (n > search_limit) {
      rep.hypothesis_ok = false;
      rep.hypothesis_message = "oscillation tails do not become small";
      return rep;
    }
    rep.blocks.push_back(n);
    prev = n;
  }
  rep.block_bounds = rep.block_subadditive = rep.block_norms_summable = true;
  for (std::size_t a = 0; a <= alpha; ++a) {
    Extended total(0);
    for (std::size_t i = 1; i <= block_count; ++i) {
      const std::size_t lo = rep.blocks[i - 1], hi = rep.blocks[i];
      FuncTree psi = constant(s.space, Rational(0));
      Profile sum = zero_profile(s.space);
      for (std::size_t j = lo + 1; j <= hi; ++j) {
        psi = add(psi, s.term(j));
        sum = add(sum, a == alpha ? term_osc(j) : osc_alpha(s.term(j), a));
      }
      if (!(sup_all(sum) < Extended(Rational(1, 2).pow(static_cast<long>(i))))) rep.block_bounds = false;
      const Profile psi_osc = osc_alpha(psi, a);
      if (!leq(psi_osc, sum)) rep.block_subadditive = false;
      total = total + sup_all(psi_osc);
    }
    if (!(total < Extended(1))) rep.block_norms_summable = false;
  }
  const FuncTree target = s.target();
  const IndexTrace trace = dsc_index(target);
  rep.verdict = trace.verdict;
  rep.dsc_index = trace.dsc_index;
  rep.stable_osc_finite = sup_all(stable_osc(target)).is_finite();
  return rep;
}

}  // namespace tosc
