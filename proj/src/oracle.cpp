#include "tosc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace tosc {

UnfoldedSpace::UnfoldedSpace(const SpaceTree& space, std::size_t k) : k_(k) {
  if (k == 0) throw std::invalid_argument("unfolding depth must be at least 1");
  add(space, 0, {});
}

std::size_t UnfoldedSpace::add(const SpaceTree& t, std::size_t parent, PointAddress addr) {
  const std::size_t self = nodes_.size();
  index_.emplace(addr, self);
  nodes_.push_back(Node{addr, parent, {}, {}, t.is_limit(), 0});
  for (std::size_t i = 0; i < t.prefix().size(); ++i) {
    const std::size_t c = add(t.prefix()[i], self, extend(addr, Selector::prefix(i)));
    nodes_[self].prefix.push_back(c);
  }
  if (t.is_limit()) {
    for (std::size_t c = 0; c < k_; ++c) {
      std::vector<std::size_t> roots;
      for (std::size_t i = 0; i < t.period().size(); ++i) {
        roots.push_back(add(t.period()[i], self, extend(addr, Selector::tail(c, i))));
      }
      nodes_[self].copies.push_back(std::move(roots));
    }
  }
  nodes_[self].end = nodes_.size();
  return self;
}

std::size_t UnfoldedSpace::find(const PointAddress& addr) const {
  const auto it = index_.find(addr);
  return it == index_.end() ? nodes_.size() : it->second;
}

std::size_t UnfoldedSpace::certified_depth(const SpaceTree& space) {
  std::size_t longest = 1;
  const Flat<Point> flat(space);
  for (const auto& e : flat.nodes) longest = std::max(longest, e.tree->period().size());
  return (height(space) + 1) * longest;
}

OracleValues oracle_eval(const UnfoldedSpace& u, const FuncTree& f) {
  OracleValues out;
  out.reserve(u.size());
  for (const auto& n : u.nodes()) out.push_back(eval(f, n.addr));
  return out;
}

namespace {

// Subtree maxima of a per-point quantity.
OracleValues subtree_max(const UnfoldedSpace& u, const OracleValues& g) {
  OracleValues m = g;
  for (std::size_t i = u.size(); i-- > 1;) {
    const std::size_t p = u.node(i).parent;
    if (m[p] < m[i]) m[p] = m[i];
  }
  return m;
}

// Neighborhood value at x: inf over c of max(at_x, max over copies >= c of
// the per-copy maxima of `sub`, shifted by `offset`).
Rational neighborhood_inf(const UnfoldedSpace::Node& n, const Rational& at_x, const OracleValues& sub,
                          const Rational& offset) {
  if (n.copies.empty()) return at_x;
  Rational best;
  bool have = false;
  Rational suffix;
  bool have_suffix = false;
  for (std::size_t c = n.copies.size(); c-- > 0;) {
    for (std::size_t r : n.copies[c]) {
      const Rational v = sub[r] + offset;
      if (!have_suffix || suffix < v) suffix = v;
      have_suffix = true;
    }
    const Rational here = max(at_x, suffix);
    if (!have || here < best) best = here;
    have = true;
  }
  return best;
}

}  // namespace

Rational oracle_limsup(const UnfoldedSpace& u, const OracleValues& g, std::size_t x) {
  const OracleValues sub = subtree_max(u, g);
  return neighborhood_inf(u.node(x), g[x], sub, Rational(0));
}

Rational oracle_limsup(const FuncTree& f, const PointAddress& x, std::size_t k) {
  const UnfoldedSpace u(shape_of(f), k);
  const std::size_t i = u.find(x);
  if (i == u.size()) throw std::out_of_range("address not materialized at this depth");
  return oracle_limsup(u, oracle_eval(u, f), i);
}

OracleValues oracle_osc_alpha(const UnfoldedSpace& u, const FuncTree& f, std::size_t n) {
  const OracleValues fv = oracle_eval(u, f);
  OracleValues osc(u.size(), Rational(0));
  for (std::size_t stage = 0; stage < n; ++stage) {
    // |f(y) - f(x)| + osc(y) = max(f(y) + osc(y) - f(x), osc(y) - f(y) + f(x)).
    OracleValues plus(u.size()), minus_(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      plus[i] = fv[i] + osc[i];
      minus_[i] = osc[i] - fv[i];
    }
    const OracleValues sp = subtree_max(u, plus);
    const OracleValues sm = subtree_max(u, minus_);
    OracleValues tilde(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto& node = u.node(i);
      if (node.copies.empty()) {
        tilde[i] = osc[i];
        continue;
      }
      Rational best;
      bool have = false;
      Rational suffix_p, suffix_m;
      bool have_suffix = false;
      for (std::size_t c = node.copies.size(); c-- > 0;) {
        for (std::size_t r : node.copies[c]) {
          if (!have_suffix || suffix_p < sp[r]) suffix_p = sp[r];
          if (!have_suffix || suffix_m < sm[r]) suffix_m = sm[r];
          have_suffix = true;
        }
        const Rational here = max(osc[i], max(suffix_p - fv[i], suffix_m + fv[i]));
        if (!have || here < best) best = here;
        have = true;
      }
      tilde[i] = best;
    }
    const OracleValues st = subtree_max(u, tilde);
    OracleValues next(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) next[i] = neighborhood_inf(u.node(i), tilde[i], st, Rational(0));
    osc = std::move(next);
  }
  return osc;
}

OracleAgreement compare_osc_with_oracle(const FuncTree& f, std::size_t n) {
  OracleAgreement out;
  const SpaceTree space = shape_of(f);
  const Profile engine = osc_alpha(f, n);
  const std::size_t k = UnfoldedSpace::certified_depth(space);
  const UnfoldedSpace u(space, k);
  const OracleValues o = oracle_osc_alpha(u, f, n);
  const bool drift = has_drift(f);
  std::optional<UnfoldedSpace> u2, u4;
  OracleValues o2, o4;
  if (drift) {
    u2.emplace(space, 2 * k);
    u4.emplace(space, 4 * k);
    o2 = oracle_osc_alpha(*u2, f, n);
    o4 = oracle_osc_alpha(*u4, f, n);
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    ++out.points;
    const Extended e = eval(engine, u.node(i).addr);
    if (e.is_finite()) {
      if (e.finite() != o[i]) ++out.mismatches;
      continue;
    }
    ++out.infinite_points;
    if (!drift) {
      ++out.mismatches;
      continue;
    }
    const Rational& a = o[i];
    const Rational& b = o2[u2->find(u.node(i).addr)];
    const Rational& c = o4[u4->find(u.node(i).addr)];
    if (!(a < b && b < c)) ++out.non_divergent;
  }
  return out;
}

DNormBounds dnorm_bounds(const FuncTree& f, std::size_t k) {
  if (has_drift(f)) throw std::invalid_argument("D-norm bounds need a bounded function");
  const SpaceTree space = shape_of(f);
  if (k == 0) k = UnfoldedSpace::certified_depth(space);
  const UnfoldedSpace u(space, k);
  const OracleValues fv = oracle_eval(u, f);
  // Largest u and v over tail ancestors, passed down the tree.
  OracleValues uu(u.size()), vv(u.size()), anc_u(u.size()), anc_v(u.size());
  Rational lower(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& node = u.node(i);
    Rational au(0), av(0);
    if (i != 0) {
      const std::size_t p = node.parent;
      const bool via_tail = node.addr.back().is_tail();
      au = via_tail ? max(anc_u[p], uu[p]) : anc_u[p];
      av = via_tail ? max(anc_v[p], vv[p]) : anc_v[p];
    }
    anc_u[i] = au;
    anc_v[i] = av;
    uu[i] = max(max(au, av + fv[i]), max(fv[i], Rational(0)));
    vv[i] = uu[i] - fv[i];
    lower = max(lower, uu[i] + vv[i]);
  }
  DNormBounds out{lower, Extended::pos_inf(), k};
  if (const auto d = uv_decomposition(f); d && d->verified) out.upper = sup_all(add(d->u, d->v));
  return out;
}

OracleClass oracle_classify(const SpaceTree& space, const SubsetTree& s, std::size_t k) {
  const UnfoldedSpace u(space, k);
  std::vector<bool> in(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) in[i] = s.contains(u.node(i).addr);
  // A limit point is approached by a set when its last materialized copy
  // still meets the set.
  auto approached = [&](const std::vector<bool>& m, std::size_t i) {
    const auto& node = u.node(i);
    if (node.copies.empty()) return false;
    for (std::size_t r : node.copies.back()) {
      for (std::size_t j = r; j < u.node(r).end; ++j) {
        if (m[j]) return true;
      }
    }
    return false;
  };
  auto closed = [&](const std::vector<bool>& m) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!m[i] && approached(m, i)) return false;
    }
    return true;
  };
  std::vector<bool> out_set(u.size()), closure(u.size()), rim(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out_set[i] = !in[i];
    closure[i] = in[i] || approached(in, i);
  }
  for (std::size_t i = 0; i < u.size(); ++i) rim[i] = closure[i] && !in[i];
  return {closed(in), closed(out_set), closed(rim)};
}

}  // namespace tosc
