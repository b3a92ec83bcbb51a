#include "tosc/restrict.hpp"

#include <stdexcept>

namespace tosc {

namespace {

using Prov = Restriction::Prov;
using ProvPtr = std::shared_ptr<const Prov>;

struct Piece {
  SpaceTree node;
  PointAddress rel;
  ProvPtr prov;
};

std::vector<Piece> pieces(const SpaceTree& o, const SubsetTree& s);

std::pair<SpaceTree, ProvPtr> build_member(const SpaceTree& o, const SubsetTree& s) {
  auto prov = std::make_shared<Prov>();
  SpaceTree::Children prefix, period;
  auto take_prefix = [&](const Selector& sel, const SpaceTree& child, const SubsetTree& sub) {
    for (auto& p : pieces(child, sub)) {
      prefix.push_back(p.node);
      prov->prefix.push_back({concat({sel}, p.rel), false, p.prov});
    }
  };
  for (std::size_t i = 0; i < o.prefix().size(); ++i) take_prefix(Selector::prefix(i), o.prefix()[i], s.prefix()[i]);
  const std::uint64_t offset = s.override_limit();
  for (std::uint64_t c = 0; c < offset; ++c) {
    for (std::size_t i = 0; i < o.period().size(); ++i) {
      take_prefix(Selector::tail(c, i), o.period()[i], s.member_subset(c, i));
    }
  }
  for (std::size_t i = 0; i < o.period().size(); ++i) {
    for (auto& p : pieces(o.period()[i], s.period()[i])) {
      period.push_back(p.node);
      prov->period.push_back({i, offset, p.rel, p.prov});
    }
  }
  return {limit(std::move(prefix), std::move(period)), prov};
}

// Maximal member subtrees of s, in enumeration order. A closed set meets a
// non-member node only in finitely many clopen pieces.
std::vector<Piece> pieces(const SpaceTree& o, const SubsetTree& s) {
  if (s.member()) {
    auto [node, prov] = build_member(o, s);
    return {{node, {}, prov}};
  }
  std::vector<Piece> out;
  auto collect = [&](const Selector& sel, const SpaceTree& child, const SubsetTree& sub) {
    for (auto& p : pieces(child, sub)) out.push_back({p.node, concat({sel}, p.rel), p.prov});
  };
  for (std::size_t i = 0; i < o.prefix().size(); ++i) collect(Selector::prefix(i), o.prefix()[i], s.prefix()[i]);
  for (std::uint64_t c = 0; c < s.override_limit(); ++c) {
    for (std::size_t i = 0; i < o.period().size(); ++i) collect(Selector::tail(c, i), o.period()[i], s.member_subset(c, i));
  }
  return out;
}

bool starts_with(const PointAddress& a, std::size_t from, const PointAddress& p) {
  if (a.size() - from < p.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(a[from + i] == p[i])) return false;
  }
  return true;
}

std::optional<PointAddress> descend(const Prov& prov, const PointAddress& q, std::size_t from) {
  if (from == q.size()) return PointAddress{};
  for (std::size_t k = 0; k < prov.prefix.size(); ++k) {
    const auto& e = prov.prefix[k];
    if (e.absolute || !starts_with(q, from, e.rel)) continue;
    if (auto r = descend(*e.child, q, from + e.rel.size())) {
      r->insert(r->begin(), Selector::prefix(k));
      return r;
    }
  }
  const Selector& head = q[from];
  if (!head.is_tail()) return std::nullopt;
  for (std::size_t j = 0; j < prov.period.size(); ++j) {
    const auto& e = prov.period[j];
    if (head.index != e.member || head.copy < e.offset || !starts_with(q, from + 1, e.suffix)) continue;
    if (auto r = descend(*e.child, q, from + 1 + e.suffix.size())) {
      r->insert(r->begin(), Selector::tail(head.copy - e.offset, j));
      return r;
    }
  }
  return std::nullopt;
}

std::uint64_t max_offset(const Prov& prov) {
  std::uint64_t m = 0;
  for (const auto& e : prov.prefix) m = std::max(m, max_offset(*e.child));
  for (const auto& e : prov.period) m = std::max({m, e.offset, max_offset(*e.child)});
  return m;
}

}  // namespace

Restriction::Restriction(SpaceTree original, SubsetTree closed_set)
    : original_(std::move(original)), set_(std::move(closed_set)), space_(leaf()) {
  if (!set_.matches(original_)) throw std::invalid_argument("shape mismatch");
  if (set_.is_empty()) throw std::invalid_argument("restriction to the empty set");
  if (!is_closed(set_)) throw std::invalid_argument("restriction to a non-closed set");
  auto ps = pieces(original_, set_);
  root_rel_ = ps.front().rel;
  if (ps.size() == 1) {
    space_ = ps.front().node;
    root_prov_ = ps.front().prov;
    return;
  }
  auto prov = std::make_shared<Prov>(*ps.front().prov);
  SpaceTree::Children prefix = ps.front().node.prefix();
  for (std::size_t k = 1; k < ps.size(); ++k) {
    prefix.push_back(ps[k].node);
    prov->prefix.push_back({ps[k].rel, true, ps[k].prov});
  }
  space_ = limit(std::move(prefix), ps.front().node.period());
  root_prov_ = prov;
}

PointAddress Restriction::to_original(const PointAddress& restricted) const {
  PointAddress cur = root_rel_;
  const Prov* prov = root_prov_.get();
  for (const auto& s : restricted) {
    if (s.is_tail()) {
      if (s.index >= prov->period.size()) throw std::out_of_range("invalid address selector");
      const auto& e = prov->period[s.index];
      cur.push_back(Selector::tail(s.copy + e.offset, e.member));
      cur = concat(std::move(cur), e.suffix);
      prov = e.child.get();
    } else {
      if (s.index >= prov->prefix.size()) throw std::out_of_range("invalid address selector");
      const auto& e = prov->prefix[s.index];
      cur = e.absolute ? e.rel : concat(std::move(cur), e.rel);
      prov = e.child.get();
    }
  }
  return cur;
}

std::optional<PointAddress> Restriction::from_original(const PointAddress& original) const {
  if (starts_with(original, 0, root_rel_)) {
    if (auto r = descend(*root_prov_, original, root_rel_.size())) return r;
  }
  for (std::size_t k = 0; k < root_prov_->prefix.size(); ++k) {
    const auto& e = root_prov_->prefix[k];
    if (!e.absolute || !starts_with(original, 0, e.rel)) continue;
    if (auto r = descend(*e.child, original, e.rel.size())) {
      r->insert(r->begin(), Selector::prefix(k));
      return r;
    }
  }
  return std::nullopt;
}

SubsetTree Restriction::lift(const SubsetTree& t) const {
  if (!t.matches(space_)) throw std::invalid_argument("shape mismatch");
  // Beyond this copy number every tail copy of every node behaves alike.
  const std::uint64_t cutoff =
      std::max(set_.max_override_depth(), max_offset(*root_prov_)) + t.max_override_depth() + 1;
  struct Rec {
    const Restriction& r;
    const SubsetTree& t;
    std::uint64_t cutoff;
    SubsetTree operator()(const SpaceTree& o, const PointAddress& addr) const {
      const auto mapped = r.from_original(addr);
      const bool member = mapped && t.contains(*mapped);
      SubsetTree::Children prefix, period;
      for (std::size_t i = 0; i < o.prefix().size(); ++i) {
        prefix.push_back((*this)(o.prefix()[i], extend(addr, Selector::prefix(i))));
      }
      std::vector<SubsetTree::Override> overrides;
      for (std::size_t i = 0; i < o.period().size(); ++i) {
        period.push_back((*this)(o.period()[i], extend(addr, Selector::tail(cutoff, i))));
        for (std::uint64_t c = 0; c < cutoff; ++c) {
          overrides.push_back({c, i, (*this)(o.period()[i], extend(addr, Selector::tail(c, i)))});
        }
      }
      return SubsetTree(member, std::move(prefix), std::move(period), std::move(overrides));
    }
  };
  return Rec{*this, t, cutoff}(original_, {});
}

}  // namespace tosc
