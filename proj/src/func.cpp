#include "tosc/func.hpp"

#include <algorithm>
#include <stdexcept>

namespace tosc {

FuncTree func_node(Rational value, FuncTree::Children prefix, FuncTree::Children period, Rational drift) {
  if (period.empty() && !drift.is_zero()) throw std::invalid_argument("drift on a node without tail");
  return FuncTree(FuncLabel{std::move(value), std::move(drift)}, std::move(prefix), std::move(period));
}

FuncTree constant(const SpaceTree& space, const Rational& c) {
  return map_tree(space, [&](const SpaceTree&) { return FuncLabel{c, Rational(0)}; });
}

FuncTree indicator(const SpaceTree& space, const SubsetTree& s) {
  if (!s.matches(space)) throw std::invalid_argument("shape mismatch");
  if (s.max_override_depth() != 0) throw std::invalid_argument("indicator of a set with overrides");
  struct Rec {
    FuncTree operator()(const SubsetTree& t) const {
      FuncTree::Children p, q;
      for (const auto& c : t.prefix()) p.push_back((*this)(c));
      for (const auto& c : t.period()) q.push_back((*this)(c));
      return func_node(Rational(t.member() ? 1 : 0), std::move(p), std::move(q));
    }
  };
  return Rec{}(s);
}

FuncTree chi_root(const SpaceTree& space) {
  FuncTree z = constant(space, Rational(0));
  return FuncTree(FuncLabel{Rational(1), Rational(0)}, z.prefix(), z.period());
}

FuncTree rank_parity(const SpaceTree& space) {
  return map_tree(space, [](const SpaceTree& t) { return FuncLabel{Rational(static_cast<long>(rank(t) % 2)), Rational(0)}; });
}

Rational eval(const FuncTree& f, const PointAddress& x) {
  Rational acc(0);
  const FuncTree* t = &f;
  for (const auto& s : x) {
    if (s.is_tail()) acc += Rational(static_cast<long>(s.copy)) * t->label().drift;
    t = &t->child(s);
  }
  return acc + t->label().value;
}

Extended eval(const Profile& g, const PointAddress& x) { return g.at(x).label(); }

bool has_drift(const FuncTree& f) {
  if (!f.label().drift.is_zero()) return true;
  for (const auto& c : f.prefix()) {
    if (has_drift(c)) return true;
  }
  for (const auto& c : f.period()) {
    if (has_drift(c)) return true;
  }
  return false;
}

Profile zero_profile(const SpaceTree& space) {
  return map_tree(space, [](const SpaceTree&) { return Extended(0); });
}

Profile to_profile(const FuncTree& f) {
  if (has_drift(f)) throw std::domain_error("function with drift");
  return map_tree(f, [](const FuncTree& t) { return Extended(t.label().value); });
}

FuncTree add(const FuncTree& f, const FuncTree& g) {
  return zip_tree(f, g, [](const FuncTree& a, const FuncTree& b) {
    return FuncLabel{a.label().value + b.label().value, a.label().drift + b.label().drift};
  });
}

FuncTree negate(const FuncTree& f) { return scale(Rational(-1), f); }

FuncTree subtract(const FuncTree& f, const FuncTree& g) { return add(f, negate(g)); }

FuncTree scale(const Rational& q, const FuncTree& f) {
  return map_tree(f, [&](const FuncTree& t) { return FuncLabel{q * t.label().value, q * t.label().drift}; });
}

FuncTree abs(const FuncTree& f) {
  if (has_drift(f)) throw std::domain_error("abs of a function with drift");
  return map_tree(f, [](const FuncTree& t) { return FuncLabel{t.label().value.abs(), Rational(0)}; });
}

FuncTree pointwise_max(const FuncTree& f, const FuncTree& g) {
  if (has_drift(f) || has_drift(g)) throw std::domain_error("max of functions with drift");
  return zip_tree(f, g, [](const FuncTree& a, const FuncTree& b) {
    return FuncLabel{max(a.label().value, b.label().value), Rational(0)};
  });
}

FuncTree shift(const FuncTree& f, const Rational& c) {
  if (c.is_zero()) return f;
  return map_tree(f, [&](const FuncTree& t) { return FuncLabel{t.label().value + c, t.label().drift}; });
}

Profile add(const Profile& a, const Profile& b) {
  return zip_tree(a, b, [](const Profile& x, const Profile& y) { return x.label() + y.label(); });
}

Profile scale(const Rational& q, const Profile& g) {
  return map_tree(g, [&](const Profile& t) { return q * t.label(); });
}

Profile pointwise_max(const Profile& a, const Profile& b) {
  return zip_tree(a, b, [](const Profile& x, const Profile& y) { return max(x.label(), y.label()); });
}

bool leq(const Profile& a, const Profile& b) {
  require_same_shape(a, b);
  struct Rec {
    bool operator()(const Profile& x, const Profile& y) const {
      if (x.label() > y.label()) return false;
      for (std::size_t i = 0; i < x.prefix().size(); ++i) {
        if (!(*this)(x.prefix()[i], y.prefix()[i])) return false;
      }
      for (std::size_t i = 0; i < x.period().size(); ++i) {
        if (!(*this)(x.period()[i], y.period()[i])) return false;
      }
      return true;
    }
  };
  return Rec{}(a, b);
}

Profile restrict_values(const Profile& g, const SubsetTree& keep, const Extended& outside) {
  if (keep.max_override_depth() != 0) throw std::invalid_argument("mask with overrides");
  struct Rec {
    const Extended& outside;
    Profile operator()(const Profile& t, const SubsetTree& k) const {
      Profile::Children p, q;
      for (std::size_t i = 0; i < t.prefix().size(); ++i) p.push_back((*this)(t.prefix()[i], k.prefix()[i]));
      for (std::size_t i = 0; i < t.period().size(); ++i) q.push_back((*this)(t.period()[i], k.period()[i]));
      return Profile(k.member() ? t.label() : outside, std::move(p), std::move(q));
    }
  };
  if (!keep.matches(shape_of(g))) throw std::invalid_argument("shape mismatch");
  return Rec{outside}(g, keep);
}

namespace {

// Values below are relative to the subtree: the subtree root reads its own
// description value and drifts accumulate from there.
Extended sup_rel(const FuncTree& f, const SubsetTree& s) {
  Extended best = Extended::neg_inf();
  if (s.member()) best = f.label().value;
  for (std::size_t i = 0; i < f.prefix().size(); ++i) best = max(best, sup_rel(f.prefix()[i], s.prefix()[i]));
  const Rational& d = f.label().drift;
  for (const auto& o : s.overrides()) {
    const Extended m = sup_rel(f.period()[o.member], o.set);
    best = max(best, m + Extended(Rational(static_cast<long>(o.copy)) * d));
  }
  for (std::size_t i = 0; i < f.period().size(); ++i) {
    const Extended m = sup_rel(f.period()[i], s.period()[i]);
    if (m.is_neg_inf()) continue;
    if (m.is_pos_inf() || d.sign() > 0) return Extended::pos_inf();
    // Copies not covered by an override use the default member set; with
    // nonpositive drift the smallest such copy dominates.
    std::uint64_t c = 0;
    while (std::any_of(s.overrides().begin(), s.overrides().end(),
                       [&](const SubsetTree::Override& o) { return o.copy == c && o.member == i; })) {
      ++c;
    }
    best = max(best, m + Extended(Rational(static_cast<long>(c)) * d));
  }
  return best;
}

Extended sup_rel(const Profile& g, const SubsetTree& s) {
  Extended best = Extended::neg_inf();
  if (s.member()) best = g.label();
  for (std::size_t i = 0; i < g.prefix().size(); ++i) best = max(best, sup_rel(g.prefix()[i], s.prefix()[i]));
  for (std::size_t i = 0; i < g.period().size(); ++i) best = max(best, sup_rel(g.period()[i], s.period()[i]));
  for (const auto& o : s.overrides()) best = max(best, sup_rel(g.period()[o.member], o.set));
  return best;
}

Extended sup_full(const FuncTree& f) {
  Extended best = f.label().value;
  for (const auto& c : f.prefix()) best = max(best, sup_full(c));
  for (const auto& c : f.period()) {
    const Extended m = sup_full(c);
    if (m.is_pos_inf() || f.label().drift.sign() > 0) return Extended::pos_inf();
    best = max(best, m);
  }
  return best;
}

Extended sup_full(const Profile& g) {
  Extended best = g.label();
  for (const auto& c : g.prefix()) best = max(best, sup_full(c));
  for (const auto& c : g.period()) best = max(best, sup_full(c));
  return best;
}

// Limit of the tail sups at a node, relative to the node's description value.
Extended tail_limsup(const FuncTree& node) {
  if (!node.is_limit()) return Extended::neg_inf();
  Extended best = Extended::neg_inf();
  for (const auto& m : node.period()) {
    const Extended s = sup_full(m);
    if (s.is_pos_inf()) return Extended::pos_inf();
    best = max(best, s);
  }
  const int d = node.label().drift.sign();
  if (d > 0) return Extended::pos_inf();
  if (d < 0) return Extended::neg_inf();
  return best;
}

Extended tail_limsup(const Profile& node) {
  Extended best = Extended::neg_inf();
  for (const auto& m : node.period()) best = max(best, sup_full(m));
  return best;
}

}  // namespace

Extended sup_over(const FuncTree& f, const SubsetTree& s) {
  if (!s.matches(shape_of(f))) throw std::invalid_argument("shape mismatch");
  if (s.is_empty()) throw std::invalid_argument("sup over the empty set");
  return sup_rel(f, s);
}

Extended inf_over(const FuncTree& f, const SubsetTree& s) { return -sup_over(negate(f), s); }

Extended sup_over(const Profile& g, const SubsetTree& s) {
  if (!s.matches(shape_of(g))) throw std::invalid_argument("shape mismatch");
  if (s.is_empty()) throw std::invalid_argument("sup over the empty set");
  return sup_rel(g, s);
}

Extended sup_all(const FuncTree& f) { return sup_full(f); }
Extended inf_all(const FuncTree& f) { return -sup_full(negate(f)); }
Extended sup_all(const Profile& g) { return sup_full(g); }
Extended inf_all(const Profile& g) { return -sup_full(scale(Rational(-1), g)); }

Extended sup_norm(const FuncTree& f) { return max(sup_all(f), -inf_all(f)); }

Extended limsup_at(const FuncTree& f, const PointAddress& x) {
  const FuncTree& node = f.at(x);
  const Rational here = eval(f, x);
  const Extended tail = tail_limsup(node);
  if (tail.is_neg_inf()) return here;
  return max(Extended(here), tail + Extended(here - node.label().value));
}

Extended liminf_at(const FuncTree& f, const PointAddress& x) { return -limsup_at(negate(f), x); }

Extended limsup_at(const Profile& g, const PointAddress& x) {
  const Profile& node = g.at(x);
  return max(node.label(), tail_limsup(node));
}

Profile usc_envelope(const Profile& g) {
  return map_tree(g, [](const Profile& t) { return max(t.label(), tail_limsup(t)); });
}

Profile usc_envelope(const FuncTree& f) {
  return map_tree(f, [](const FuncTree& t) { return max(Extended(t.label().value), tail_limsup(t)); });
}

bool is_usc(const Profile& g) { return usc_envelope(g) == g; }

bool is_usc(const FuncTree& f) {
  if (tail_limsup(f) > Extended(f.label().value)) return false;
  for (const auto& c : f.prefix()) {
    if (!is_usc(c)) return false;
  }
  for (const auto& c : f.period()) {
    if (!is_usc(c)) return false;
  }
  return true;
}

bool is_lsc(const FuncTree& f) { return is_usc(negate(f)); }

bool is_continuous(const FuncTree& f) { return is_usc(f) && is_lsc(f); }

bool is_continuous_on(const FuncTree& f, const SubsetTree& w) {
  if (!w.matches(shape_of(f))) throw std::invalid_argument("shape mismatch");
  struct Rec {
    bool operator()(const FuncTree& t, const SubsetTree& s) const {
      if (s.member()) {
        bool tail = false;
        for (std::size_t i = 0; i < t.period().size(); ++i) {
          if (s.period()[i].is_empty()) continue;
          tail = true;
          const FuncTree shifted = shift(t.period()[i], -t.label().value);
          if (sup_rel(shifted, s.period()[i]) != Extended(0)) return false;
          if (sup_rel(negate(shifted), s.period()[i]) != Extended(0)) return false;
        }
        if (tail && !t.label().drift.is_zero()) return false;
      }
      for (std::size_t i = 0; i < t.prefix().size(); ++i) {
        if (!(*this)(t.prefix()[i], s.prefix()[i])) return false;
      }
      for (std::size_t i = 0; i < t.period().size(); ++i) {
        if (!(*this)(t.period()[i], s.period()[i])) return false;
      }
      for (const auto& o : s.overrides()) {
        if (!(*this)(t.period()[o.member], o.set)) return false;
      }
      return true;
    }
  };
  return Rec{}(f, w);
}

FuncTree restrict_func(const Restriction& r, const FuncTree& f) {
  require_same_shape(f, r.original());
  const Flat<Point> flat(r.space());
  std::vector<FuncLabel> labels;
  labels.reserve(flat.size());
  for (const auto& e : flat.nodes) {
    const PointAddress orig = r.to_original(e.representative);
    Rational drift(0);
    if (e.tree->is_limit()) drift = f.at(orig).label().drift;
    labels.push_back({eval(f, orig), drift});
  }
  return unflatten(r.space(), labels);
}

Profile restrict_profile(const Restriction& r, const Profile& g) {
  require_same_shape(g, r.original());
  const Flat<Point> flat(r.space());
  std::vector<Extended> labels;
  labels.reserve(flat.size());
  for (const auto& e : flat.nodes) labels.push_back(eval(g, r.to_original(e.representative)));
  return unflatten(r.space(), labels);
}

FuncTree unroll_func(const FuncTree& f, std::size_t depth) {
  FuncTree::Children prefix;
  for (const auto& c : f.prefix()) prefix.push_back(unroll_func(c, depth));
  std::vector<FuncTree> members;
  for (const auto& m : f.period()) members.push_back(unroll_func(m, depth));
  const Rational& d = f.label().drift;
  for (std::size_t c = 0; c < depth && f.is_limit(); ++c) {
    for (const auto& m : members) prefix.push_back(shift(m, Rational(static_cast<long>(c)) * d));
  }
  FuncTree::Children period;
  for (const auto& m : members) period.push_back(shift(m, Rational(static_cast<long>(depth)) * d));
  return FuncTree(f.label(), std::move(prefix), std::move(period));
}

Profile unroll_profile(const Profile& g, std::size_t depth) {
  Profile::Children prefix;
  for (const auto& c : g.prefix()) prefix.push_back(unroll_profile(c, depth));
  Profile::Children period;
  for (const auto& m : g.period()) period.push_back(unroll_profile(m, depth));
  for (std::size_t c = 0; c < depth && g.is_limit(); ++c) {
    for (const auto& m : period) prefix.push_back(m);
  }
  return Profile(g.label(), std::move(prefix), std::move(period));
}

}  // namespace tosc
