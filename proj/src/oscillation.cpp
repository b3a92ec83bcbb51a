#include "tosc/oscillation.hpp"

#include <map>
#include <stdexcept>

namespace tosc {

Profile osc_classical(const FuncTree& f) {
  const Flat<FuncLabel> flat(f);
  std::vector<Extended> labels;
  labels.reserve(flat.size());
  for (const auto& e : flat.nodes) {
    labels.push_back(limsup_at(f, e.representative) - liminf_at(f, e.representative));
  }
  return unflatten(f, labels);
}

namespace {

// max over description nodes y of the subtree of |f(y) - base| + prev(y),
// for a drift-free subtree.
Extended tail_term(const FuncTree& f, const Profile& prev, const Rational& base) {
  Extended best = Extended((f.label().value - base).abs()) + prev.label();
  for (std::size_t i = 0; i < f.prefix().size(); ++i) best = max(best, tail_term(f.prefix()[i], prev.prefix()[i], base));
  for (std::size_t i = 0; i < f.period().size(); ++i) best = max(best, tail_term(f.period()[i], prev.period()[i], base));
  return best;
}

Profile tilde_osc(const FuncTree& f, const Profile& prev) {
  Extended here = prev.label();
  if (f.is_limit()) {
    bool unbounded = !f.label().drift.is_zero();
    for (const auto& m : f.period()) unbounded = unbounded || has_drift(m);
    if (unbounded) {
      here = Extended::pos_inf();
    } else {
      for (std::size_t i = 0; i < f.period().size(); ++i) {
        here = max(here, tail_term(f.period()[i], prev.period()[i], f.label().value));
      }
    }
  }
  Profile::Children p, q;
  for (std::size_t i = 0; i < f.prefix().size(); ++i) p.push_back(tilde_osc(f.prefix()[i], prev.prefix()[i]));
  for (std::size_t i = 0; i < f.period().size(); ++i) q.push_back(tilde_osc(f.period()[i], prev.period()[i]));
  return Profile(here, std::move(p), std::move(q));
}

}  // namespace

Profile osc_next(const FuncTree& f, const Profile& prev) {
  require_same_shape(f, prev);
  return usc_envelope(tilde_osc(f, prev));
}

Profile osc_alpha(const FuncTree& f, std::size_t n) {
  Profile g = zero_profile(shape_of(f));
  for (std::size_t i = 0; i < n; ++i) g = osc_next(f, g);
  return g;
}

std::size_t stabilization_bound(const SpaceTree& space) { return 2 * height(space) + 1; }

DIndexTrace d_index_trace(const FuncTree& f) {
  DIndexTrace t;
  t.bound = stabilization_bound(shape_of(f));
  t.stages.push_back(zero_profile(shape_of(f)));
  while (true) {
    t.stages.push_back(osc_next(f, t.stages.back()));
    const std::size_t n = t.stages.size() - 2;
    if (t.stages[n] == t.stages[n + 1]) {
      t.index = n;
      return t;
    }
    if (n >= t.bound) throw std::logic_error("oscillation did not stabilize within the proven bound");
  }
}

std::size_t d_index(const FuncTree& f) { return d_index_trace(f).index; }

Profile stable_osc(const FuncTree& f) { return d_index_trace(f).stable(); }

namespace {

SubsetTree level_set(const Profile& g, const Extended& value) {
  struct Rec {
    const Extended& value;
    SubsetTree operator()(const Profile& t) const {
      SubsetTree::Children p, q;
      for (const auto& c : t.prefix()) p.push_back((*this)(c));
      for (const auto& c : t.period()) q.push_back((*this)(c));
      return SubsetTree(t.label() == value, std::move(p), std::move(q));
    }
  };
  return Rec{value}(g);
}

}  // namespace

SubsetTree strong_continuity_points(const FuncTree& f) { return level_set(stable_osc(f), Extended(0)); }

Extended dbsc_norm(const FuncTree& f) {
  if (has_drift(f)) return Extended::pos_inf();
  const Profile stable = stable_osc(f);
  const Extended c = sup_all(add(to_profile(abs(f)), stable));
  if (!c.is_finite()) return c;
  return c - inf_all(stable);
}

std::optional<UVDecomposition> uv_decomposition(const FuncTree& f) {
  if (has_drift(f)) return std::nullopt;
  const DIndexTrace trace = d_index_trace(f);
  const Profile& osc = trace.stable();
  const Extended c_ext = sup_all(add(to_profile(abs(f)), osc));
  if (!c_ext.is_finite()) return std::nullopt;
  const Rational c = c_ext.finite();
  const Rational half(1, 2);
  const FuncTree u = zip_tree(f, osc, [&](const FuncTree& x, const Profile& o) {
    return FuncLabel{half * (c - o.label().finite() + x.label().value), Rational(0)};
  });
  const FuncTree v = zip_tree(f, osc, [&](const FuncTree& x, const Profile& o) {
    return FuncLabel{half * (c - o.label().finite() - x.label().value), Rational(0)};
  });
  UVDecomposition out{u, v, trace.index, c - inf_all(osc), true, {}};
  auto fail = [&](const char* why) {
    if (out.verified) out.failure = why;
    out.verified = false;
  };
  if (!(subtract(u, v) == f)) fail("u - v differs from f");
  if (inf_all(u) < Extended(0) || inf_all(v) < Extended(0)) fail("negative value in u or v");
  if (!is_lsc(u) || !is_lsc(v)) fail("u or v is not lower semi-continuous");
  if (sup_all(add(u, v)) != out.d_norm) fail("sup(u + v) differs from the norm");
  return out;
}

const char* verdict_name(Verdict v) { return v == Verdict::Dsc ? "DSC" : "NOT_DETERMINED"; }

IndexTrace dsc_index(const FuncTree& f) {
  const SpaceTree space = shape_of(f);
  IndexTrace out;
  out.d_index = d_index(f);
  SubsetTree k = SubsetTree::full(space);
  while (true) {
    const Restriction r(space, k);
    const FuncTree g = restrict_func(r, f);
    const DIndexTrace trace = d_index_trace(g);
    out.dsc_chain.push_back({k, trace.index});
    const SubsetTree next = r.lift(level_set(trace.stable(), Extended::pos_inf()));
    if (next.is_empty()) {
      out.dsc_chain.push_back({next, std::nullopt});
      out.verdict = Verdict::Dsc;
      break;
    }
    if (next == k) {
      out.verdict = Verdict::NotDetermined;
      break;
    }
    k = next;
  }
  out.dsc_index = out.dsc_chain.size() - 1;
  return out;
}

namespace {

SubsetTree with_override(const SubsetTree& s, const PointAddress& path, std::size_t depth, const SubsetTree& set) {
  if (depth == path.size()) {
    auto overrides = s.overrides();
    overrides.push_back({0, 0, set});
    return SubsetTree(s.member(), s.prefix(), s.period(), std::move(overrides));
  }
  const Selector& sel = path[depth];
  SubsetTree::Children p = s.prefix(), q = s.period();
  auto& slot = sel.is_tail() ? q[sel.index] : p[sel.index];
  slot = with_override(slot, path, depth + 1, set);
  return SubsetTree(s.member(), std::move(p), std::move(q), s.overrides());
}

std::vector<std::vector<bool>> all_flags(std::size_t n) {
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> flags(n);
    for (std::size_t i = 0; i < n; ++i) flags[i] = (mask >> i) & 1;
    out.push_back(std::move(flags));
  }
  return out;
}

}  // namespace

std::vector<SubsetTree> closed_family(const SpaceTree& space, std::size_t max_size) {
  std::vector<SubsetTree> out;
  const std::size_t n = space.size();
  if (n > max_size) return out;
  auto keep = [&](const SubsetTree& s) {
    if (s.is_empty() || !is_closed(s) || s.description_size() > max_size) return;
    for (const auto& t : out) {
      if (t == s) return;
    }
    out.push_back(s);
  };
  const auto bases = all_flags(n);
  for (const auto& b : bases) keep(SubsetTree::from_flags(space, b));
  const Flat<Point> flat(space);
  for (const auto& e : flat.nodes) {
    if (!e.tree->is_limit()) continue;
    const SpaceTree& member = e.tree->period()[0];
    if (n + member.size() > max_size) continue;
    const auto inner = all_flags(member.size());
    for (const auto& b : bases) {
      const SubsetTree base = SubsetTree::from_flags(space, b);
      for (const auto& i : inner) keep(with_override(base, e.representative, 0, SubsetTree::from_flags(member, i)));
    }
  }
  return out;
}

StrongContinuityReport check_thm51(const FuncTree& f, std::size_t max_size) {
  return check_thm51(f, closed_family(shape_of(f), max_size));
}

StrongContinuityReport check_thm51(const FuncTree& f, const std::vector<SubsetTree>& family) {
  StrongContinuityReport rep;
  const SpaceTree space = shape_of(f);
  for (const auto& l : family) {
    ++rep.sets_checked;
    const Restriction r(space, l);
    const FuncTree g = restrict_func(r, f);
    const Profile stable = stable_osc(g);
    const SubsetTree scp = level_set(stable, Extended(0));
    std::string problem;
    if (scp.is_empty()) {
      problem = "no strong continuity point";
    } else if (!scp.closure().is_full()) {
      problem = "strong continuity points not dense";
    } else if (!classify_subset(r.space(), scp).is_ambiguous) {
      problem = "strong continuity points not G_delta";
    } else if (!inf_all(stable).is_finite()) {
      problem = "no point with finite stable oscillation";
    }
    if (!problem.empty()) {
      ++rep.violations;
      if (rep.messages.size() < 10) rep.messages.push_back(problem);
    }
  }
  return rep;
}

}  // namespace tosc
