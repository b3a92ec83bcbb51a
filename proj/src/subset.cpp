#include "tosc/subset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tosc {

namespace {

bool same_subset_shape(const SubsetTree& a, const SubsetTree& b) {
  if (a.prefix().size() != b.prefix().size() || a.period().size() != b.period().size()) return false;
  for (std::size_t i = 0; i < a.prefix().size(); ++i) {
    if (!same_subset_shape(a.prefix()[i], b.prefix()[i])) return false;
  }
  for (std::size_t i = 0; i < a.period().size(); ++i) {
    if (!same_subset_shape(a.period()[i], b.period()[i])) return false;
  }
  return true;
}

}  // namespace

SubsetTree::SubsetTree(bool member, Children prefix, Children period, std::vector<Override> overrides) {
  std::sort(overrides.begin(), overrides.end(), [](const Override& a, const Override& b) {
    return std::tie(a.copy, a.member) < std::tie(b.copy, b.member);
  });
  std::vector<Override> kept;
  for (auto& o : overrides) {
    if (o.member >= period.size()) throw std::invalid_argument("override member index out of range");
    if (!kept.empty() && kept.back().copy == o.copy && kept.back().member == o.member) {
      throw std::invalid_argument("duplicate override");
    }
    if (!same_subset_shape(o.set, period[o.member])) throw std::invalid_argument("shape mismatch in override");
    if (o.set == period[o.member]) continue;
    kept.push_back(std::move(o));
  }
  node_ = std::make_shared<const Node>(Node{member, std::move(prefix), std::move(period), std::move(kept)});
}

SubsetTree SubsetTree::uniform(const SpaceTree& space, bool member) {
  Children prefix, period;
  for (const auto& c : space.prefix()) prefix.push_back(uniform(c, member));
  for (const auto& c : space.period()) period.push_back(uniform(c, member));
  return SubsetTree(member, std::move(prefix), std::move(period));
}

SubsetTree SubsetTree::singleton(const SpaceTree& space, const PointAddress& addr) {
  validate_address(space, addr);
  struct Rec {
    const PointAddress& addr;
    SubsetTree operator()(const SpaceTree& t, std::size_t depth) const {
      if (depth == addr.size()) {
        Children prefix, period;
        for (const auto& c : t.prefix()) prefix.push_back(uniform(c, false));
        for (const auto& c : t.period()) period.push_back(uniform(c, false));
        return SubsetTree(true, std::move(prefix), std::move(period));
      }
      const Selector& s = addr[depth];
      Children prefix, period;
      for (std::size_t i = 0; i < t.prefix().size(); ++i) {
        prefix.push_back(!s.is_tail() && s.index == i ? (*this)(t.prefix()[i], depth + 1) : uniform(t.prefix()[i], false));
      }
      for (const auto& c : t.period()) period.push_back(uniform(c, false));
      std::vector<Override> overrides;
      if (s.is_tail()) overrides.push_back({s.copy, s.index, (*this)(t.period()[s.index], depth + 1)});
      return SubsetTree(false, std::move(prefix), std::move(period), std::move(overrides));
    }
  };
  return Rec{addr}(space, 0);
}

SubsetTree SubsetTree::from_flags(const SpaceTree& space, const std::vector<bool>& flags) {
  std::size_t pos = 0;
  struct Rec {
    const std::vector<bool>& flags;
    std::size_t& pos;
    SubsetTree operator()(const SpaceTree& t) {
      const bool m = flags.at(pos++);
      Children prefix, period;
      for (const auto& c : t.prefix()) prefix.push_back((*this)(c));
      for (const auto& c : t.period()) period.push_back((*this)(c));
      return SubsetTree(m, std::move(prefix), std::move(period));
    }
  };
  Rec rec{flags, pos};
  SubsetTree out = rec(space);
  if (pos != flags.size()) throw std::invalid_argument("flag count does not match description size");
  return out;
}

SubsetTree SubsetTree::truncation(const SpaceTree& space, std::uint64_t n) {
  Children prefix, period;
  for (const auto& c : space.prefix()) prefix.push_back(truncation(c, n));
  std::vector<Override> overrides;
  for (std::size_t i = 0; i < space.period().size(); ++i) {
    period.push_back(uniform(space.period()[i], false));
    const SubsetTree inner = truncation(space.period()[i], n);
    for (std::uint64_t c = 0; c < n; ++c) overrides.push_back({c, i, inner});
  }
  return SubsetTree(true, std::move(prefix), std::move(period), std::move(overrides));
}

const SubsetTree& SubsetTree::member_subset(std::uint64_t copy, std::size_t member) const {
  for (const auto& o : overrides()) {
    if (o.copy == copy && o.member == member) return o.set;
  }
  if (member >= period().size()) throw std::out_of_range("invalid period member");
  return period()[member];
}

std::uint64_t SubsetTree::override_limit() const {
  std::uint64_t c = 0;
  for (const auto& o : overrides()) c = std::max(c, o.copy + 1);
  return c;
}

std::uint64_t SubsetTree::max_override_depth() const {
  std::uint64_t c = override_limit();
  for (const auto& p : prefix()) c = std::max(c, p.max_override_depth());
  for (const auto& p : period()) c = std::max(c, p.max_override_depth());
  for (const auto& o : overrides()) c = std::max(c, o.set.max_override_depth());
  return c;
}

bool SubsetTree::contains(const PointAddress& addr) const {
  const SubsetTree* t = this;
  for (const auto& s : addr) {
    if (s.is_tail()) {
      t = &t->member_subset(s.copy, s.index);
    } else {
      if (s.index >= t->prefix().size()) throw std::out_of_range("invalid address selector");
      t = &t->prefix()[s.index];
    }
  }
  return t->member();
}

bool SubsetTree::is_empty() const {
  if (member()) return false;
  for (const auto& c : prefix()) {
    if (!c.is_empty()) return false;
  }
  for (const auto& c : period()) {
    if (!c.is_empty()) return false;
  }
  for (const auto& o : overrides()) {
    if (!o.set.is_empty()) return false;
  }
  return true;
}

bool SubsetTree::is_full() const { return complement().is_empty(); }

bool SubsetTree::is_uniform() const {
  if (!overrides().empty()) return false;
  for (const auto* list : {&prefix(), &period()}) {
    for (const auto& c : *list) {
      if (!c.is_uniform() || c.member() != member()) return false;
    }
  }
  return true;
}

bool SubsetTree::matches(const SpaceTree& space) const {
  if (prefix().size() != space.prefix().size() || period().size() != space.period().size()) return false;
  for (std::size_t i = 0; i < prefix().size(); ++i) {
    if (!prefix()[i].matches(space.prefix()[i])) return false;
  }
  for (std::size_t i = 0; i < period().size(); ++i) {
    if (!period()[i].matches(space.period()[i])) return false;
  }
  for (const auto& o : overrides()) {
    if (!o.set.matches(space.period()[o.member])) return false;
  }
  return true;
}

SpaceTree SubsetTree::shape() const {
  SpaceTree::Children prefix, period;
  for (const auto& c : this->prefix()) prefix.push_back(c.shape());
  for (const auto& c : this->period()) period.push_back(c.shape());
  return limit(std::move(prefix), std::move(period));
}

std::size_t SubsetTree::description_size() const {
  std::size_t n = 1;
  for (const auto& c : prefix()) n += c.description_size();
  for (const auto& c : period()) n += c.description_size();
  for (const auto& o : overrides()) n += o.set.description_size();
  return n;
}

SubsetTree SubsetTree::complement() const {
  Children p, q;
  for (const auto& c : prefix()) p.push_back(c.complement());
  for (const auto& c : period()) q.push_back(c.complement());
  std::vector<Override> o;
  for (const auto& ov : overrides()) o.push_back({ov.copy, ov.member, ov.set.complement()});
  return SubsetTree(!member(), std::move(p), std::move(q), std::move(o));
}

SubsetTree SubsetTree::closure() const {
  bool m = member();
  Children p, q;
  for (const auto& c : prefix()) p.push_back(c.closure());
  for (const auto& c : period()) {
    if (!c.is_empty()) m = true;
    q.push_back(c.closure());
  }
  std::vector<Override> o;
  for (const auto& ov : overrides()) o.push_back({ov.copy, ov.member, ov.set.closure()});
  return SubsetTree(m, std::move(p), std::move(q), std::move(o));
}

SubsetTree SubsetTree::interior() const { return complement().closure().complement(); }

namespace {

template <class Op>
SubsetTree combine(const SubsetTree& a, const SubsetTree& b, Op op) {
  if (a.prefix().size() != b.prefix().size() || a.period().size() != b.period().size()) {
    throw std::invalid_argument("shape mismatch");
  }
  SubsetTree::Children p, q;
  for (std::size_t i = 0; i < a.prefix().size(); ++i) p.push_back(combine(a.prefix()[i], b.prefix()[i], op));
  for (std::size_t i = 0; i < a.period().size(); ++i) q.push_back(combine(a.period()[i], b.period()[i], op));
  std::map<std::pair<std::uint64_t, std::size_t>, bool> keys;
  for (const auto& o : a.overrides()) keys[{o.copy, o.member}] = true;
  for (const auto& o : b.overrides()) keys[{o.copy, o.member}] = true;
  std::vector<SubsetTree::Override> o;
  for (const auto& [k, unused] : keys) {
    o.push_back({k.first, k.second, combine(a.member_subset(k.first, k.second), b.member_subset(k.first, k.second), op)});
  }
  return SubsetTree(op(a.member(), b.member()), std::move(p), std::move(q), std::move(o));
}

}  // namespace

SubsetTree unite(const SubsetTree& a, const SubsetTree& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}
SubsetTree intersect(const SubsetTree& a, const SubsetTree& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}
SubsetTree minus(const SubsetTree& a, const SubsetTree& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

bool operator==(const SubsetTree& a, const SubsetTree& b) {
  if (a.node_ == b.node_) return true;
  return a.member() == b.member() && a.prefix() == b.prefix() && a.period() == b.period() &&
         a.overrides() == b.overrides();
}

bool is_closed(const SubsetTree& s) {
  if (!s.member()) {
    for (const auto& c : s.period()) {
      if (!c.is_empty()) return false;
    }
  }
  for (const auto& c : s.prefix()) {
    if (!is_closed(c)) return false;
  }
  for (const auto& c : s.period()) {
    if (!is_closed(c)) return false;
  }
  for (const auto& o : s.overrides()) {
    if (!is_closed(o.set)) return false;
  }
  return true;
}

bool is_open(const SubsetTree& s) { return is_closed(s.complement()); }

bool is_subset(const SubsetTree& a, const SubsetTree& b) { return minus(a, b).is_empty(); }

SubsetTree exhaustion(const SubsetTree& s, std::uint64_t n) {
  return intersect(s, SubsetTree::truncation(s.shape(), n));
}

namespace {

// Ambiguity certificate: a set is F_sigma when its canonical exhaustion is
// made of closed sets and catches every member below each truncation level.
bool has_closed_exhaustion(const SubsetTree& s, std::uint64_t levels) {
  SubsetTree prev = SubsetTree::empty(s.shape());
  for (std::uint64_t n = 1; n <= levels; ++n) {
    const SubsetTree g = exhaustion(s, n);
    if (!is_closed(g) || !is_subset(prev, g) || !is_subset(g, s)) return false;
    prev = g;
  }
  return true;
}

}  // namespace

SubsetClass classify_subset(const SpaceTree& space, const SubsetTree& s) {
  if (!s.matches(space)) throw std::invalid_argument("shape mismatch");
  SubsetClass out;
  out.is_closed = is_closed(s);
  out.is_open = is_open(s);
  out.is_locally_closed = is_closed(minus(s.closure(), s));
  const std::uint64_t levels = s.max_override_depth() + 2;
  out.is_ambiguous = has_closed_exhaustion(s, levels) && has_closed_exhaustion(s.complement(), levels);
  return out;
}

SubsetTree rank_layer(const SpaceTree& space, std::size_t r) {
  SubsetTree::Children p, q;
  for (const auto& c : space.prefix()) p.push_back(rank_layer(c, r));
  for (const auto& c : space.period()) q.push_back(rank_layer(c, r));
  return SubsetTree(rank(space) == r, std::move(p), std::move(q));
}

SubsetTree unroll_subset(const SubsetTree& s, std::size_t depth) {
  SubsetTree::Children prefix;
  for (const auto& c : s.prefix()) prefix.push_back(unroll_subset(c, depth));
  for (std::size_t c = 0; c < depth && !s.period().empty(); ++c) {
    for (std::size_t i = 0; i < s.period().size(); ++i) prefix.push_back(unroll_subset(s.member_subset(c, i), depth));
  }
  SubsetTree::Children period;
  for (const auto& m : s.period()) period.push_back(unroll_subset(m, depth));
  std::vector<SubsetTree::Override> overrides;
  for (const auto& o : s.overrides()) {
    if (o.copy >= depth) overrides.push_back({o.copy - depth, o.member, unroll_subset(o.set, depth)});
  }
  return SubsetTree(s.member(), std::move(prefix), std::move(period), std::move(overrides));
}

std::vector<PointAddress> members(const SpaceTree& space, const SubsetTree& s, std::size_t budget) {
  std::vector<PointAddress> out;
  for (auto& a : enumerate_points(space, budget)) {
    if (s.contains(a)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace tosc
