#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace tosc {

/// One step of a point address: either the i-th prefix child, or member
/// `index` of tail copy number `copy`.
struct Selector {
  enum class Kind : std::uint8_t { Prefix, Tail };
  Kind kind = Kind::Prefix;
  std::size_t index = 0;
  std::uint64_t copy = 0;

  static Selector prefix(std::size_t i) { return {Kind::Prefix, i, 0}; }
  static Selector tail(std::uint64_t c, std::size_t member) { return {Kind::Tail, member, c}; }
  bool is_tail() const { return kind == Kind::Tail; }

  friend auto operator<=>(const Selector&, const Selector&) = default;
};

/// Canonical path from the root; empty path is the root point.
using PointAddress = std::vector<Selector>;

inline PointAddress extend(PointAddress base, const Selector& s) {
  base.push_back(s);
  return base;
}

inline PointAddress concat(PointAddress base, const PointAddress& tail) {
  base.insert(base.end(), tail.begin(), tail.end());
  return base;
}

/// Immutable, shared, finitely described tree. Every node denotes a point;
/// a node with a nonempty period is the limit of its children, the tail
/// cycling through `period()` forever. A node with an empty period is
/// isolated; its prefix children (if any) are separate clopen pieces.
template <class Label>
class Tree {
 public:
  using Children = std::vector<Tree>;

  explicit Tree(Label label, Children prefix = {}, Children period = {})
      : node_(std::make_shared<const Node>(Node{std::move(label), std::move(prefix), std::move(period)})) {}

  const Label& label() const { return node_->label; }
  const Children& prefix() const { return node_->prefix; }
  const Children& period() const { return node_->period; }
  bool is_limit() const { return !node_->period.empty(); }
  bool is_leaf() const { return node_->prefix.empty() && node_->period.empty(); }

  /// Number of nodes in the description.
  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& c : prefix()) n += c.size();
    for (const auto& c : period()) n += c.size();
    return n;
  }

  const Tree& child(const Selector& s) const {
    const Children& list = s.is_tail() ? period() : prefix();
    if (s.index >= list.size()) throw std::out_of_range("invalid address selector");
    return list[s.index];
  }

  const Tree& at(const PointAddress& addr) const {
    const Tree* t = this;
    for (const auto& s : addr) t = &t->child(s);
    return *t;
  }

  bool same_node(const Tree& o) const { return node_ == o.node_; }

  friend bool operator==(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return true;
    return a.label() == b.label() && a.prefix() == b.prefix() && a.period() == b.period();
  }

 private:
  struct Node {
    Label label;
    Children prefix;
    Children period;
  };
  std::shared_ptr<const Node> node_;
};

template <class L, class F>
auto map_tree(const Tree<L>& t, F&& f) -> Tree<std::decay_t<decltype(f(t))>> {
  using Out = Tree<std::decay_t<decltype(f(t))>>;
  typename Out::Children prefix, period;
  prefix.reserve(t.prefix().size());
  period.reserve(t.period().size());
  for (const auto& c : t.prefix()) prefix.push_back(map_tree(c, f));
  for (const auto& c : t.period()) period.push_back(map_tree(c, f));
  return Out(f(t), std::move(prefix), std::move(period));
}

template <class A, class B>
bool same_shape(const Tree<A>& a, const Tree<B>& b) {
  if (a.prefix().size() != b.prefix().size() || a.period().size() != b.period().size()) return false;
  for (std::size_t i = 0; i < a.prefix().size(); ++i) {
    if (!same_shape(a.prefix()[i], b.prefix()[i])) return false;
  }
  for (std::size_t i = 0; i < a.period().size(); ++i) {
    if (!same_shape(a.period()[i], b.period()[i])) return false;
  }
  return true;
}

template <class A, class B>
void require_same_shape(const Tree<A>& a, const Tree<B>& b) {
  if (!same_shape(a, b)) throw std::invalid_argument("shape mismatch");
}

/// Combines two shape-aligned trees node by node.
template <class A, class B, class F>
auto zip_tree(const Tree<A>& a, const Tree<B>& b, F&& f)
    -> Tree<std::decay_t<decltype(f(a, b))>> {
  using Out = Tree<std::decay_t<decltype(f(a, b))>>;
  if (a.prefix().size() != b.prefix().size() || a.period().size() != b.period().size()) {
    throw std::invalid_argument("shape mismatch");
  }
  typename Out::Children prefix, period;
  for (std::size_t i = 0; i < a.prefix().size(); ++i) prefix.push_back(zip_tree(a.prefix()[i], b.prefix()[i], f));
  for (std::size_t i = 0; i < a.period().size(); ++i) period.push_back(zip_tree(a.period()[i], b.period()[i], f));
  return Out(f(a, b), std::move(prefix), std::move(period));
}

/// Flattened pre-order view of a tree description. Subtrees occupy
/// contiguous index ranges [i, end).
template <class L>
struct Flat {
  struct Entry {
    const Tree<L>* tree;
    std::size_t parent;      // == self for the root
    bool via_tail;           // reached from parent through a period member
    std::size_t end;         // one past the last node of this subtree
    std::vector<std::size_t> prefix;
    std::vector<std::size_t> period;
    PointAddress representative;  // tail selectors use copy 0
  };
  std::vector<Entry> nodes;

  explicit Flat(const Tree<L>& root) { add(root, 0, false, {}); }

  std::size_t size() const { return nodes.size(); }

 private:
  std::size_t add(const Tree<L>& t, std::size_t parent, bool via_tail, PointAddress addr) {
    const std::size_t self = nodes.size();
    nodes.push_back(Entry{&t, nodes.empty() ? 0 : parent, via_tail, 0, {}, {}, addr});
    for (std::size_t i = 0; i < t.prefix().size(); ++i) {
      const std::size_t c = add(t.prefix()[i], self, false, extend(addr, Selector::prefix(i)));
      nodes[self].prefix.push_back(c);
    }
    for (std::size_t i = 0; i < t.period().size(); ++i) {
      const std::size_t c = add(t.period()[i], self, true, extend(addr, Selector::tail(0, i)));
      nodes[self].period.push_back(c);
    }
    nodes[self].end = nodes.size();
    return self;
  }
};

/// Rebuilds a tree with the shape of `shape` from per-node labels given in
/// pre-order.
template <class Out, class L>
Tree<Out> unflatten(const Tree<L>& shape, const std::vector<Out>& labels) {
  std::size_t pos = 0;
  struct Rec {
    const std::vector<Out>& labels;
    std::size_t& pos;
    Tree<Out> operator()(const Tree<L>& t) {
      const Out& mine = labels.at(pos++);
      typename Tree<Out>::Children prefix, period;
      for (const auto& c : t.prefix()) prefix.push_back((*this)(c));
      for (const auto& c : t.period()) period.push_back((*this)(c));
      return Tree<Out>(mine, std::move(prefix), std::move(period));
    }
  };
  Rec rec{labels, pos};
  return rec(shape);
}

}  // namespace tosc
