#include "tosc/space.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace tosc {

SpaceTree leaf() {
  static const SpaceTree kLeaf{Point{}};
  return kLeaf;
}

SpaceTree limit(SpaceTree::Children prefix, SpaceTree::Children period) {
  return SpaceTree(Point{}, std::move(prefix), std::move(period));
}

SpaceTree ordinal_power(std::size_t k) {
  SpaceTree s = leaf();
  for (std::size_t i = 0; i < k; ++i) s = limit({}, {s});
  return s;
}

std::size_t rank(const SpaceTree& space) {
  if (!space.is_limit()) return 0;
  std::size_t r = 0;
  for (const auto& m : space.period()) r = std::max(r, height(m));
  return r + 1;
}

std::size_t height(const SpaceTree& space) {
  std::size_t h = rank(space);
  for (const auto& c : space.prefix()) h = std::max(h, height(c));
  for (const auto& c : space.period()) h = std::max(h, height(c));
  return h;
}

std::size_t point_rank(const SpaceTree& space, const PointAddress& addr) { return rank(space.at(addr)); }

void validate_address(const SpaceTree& space, const PointAddress& addr) { (void)space.at(addr); }

bool is_valid_address(const SpaceTree& space, const PointAddress& addr) {
  const SpaceTree* t = &space;
  for (const auto& s : addr) {
    const auto& list = s.is_tail() ? t->period() : t->prefix();
    if (s.index >= list.size()) return false;
    t = &list[s.index];
  }
  return true;
}

std::vector<PointAddress> enumerate_points(const SpaceTree& space, std::size_t copy_budget) {
  if (copy_budget == 0) throw std::invalid_argument("copy budget must be at least 1");
  std::vector<PointAddress> out;
  std::deque<std::pair<PointAddress, const SpaceTree*>> queue;
  queue.emplace_back(PointAddress{}, &space);
  while (!queue.empty()) {
    auto [addr, node] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < node->prefix().size(); ++i) {
      queue.emplace_back(extend(addr, Selector::prefix(i)), &node->prefix()[i]);
    }
    for (std::uint64_t c = 0; c < copy_budget && node->is_limit(); ++c) {
      for (std::size_t i = 0; i < node->period().size(); ++i) {
        queue.emplace_back(extend(addr, Selector::tail(c, i)), &node->period()[i]);
      }
    }
    out.push_back(std::move(addr));
  }
  return out;
}

std::uint64_t copy_depth(const PointAddress& addr) {
  std::uint64_t d = 0;
  for (const auto& s : addr) {
    if (s.is_tail()) d = std::max(d, s.copy + 1);
  }
  return d;
}

std::string format_address(const SpaceTree& space, const PointAddress& addr) {
  if (addr.empty()) return "ε";
  std::string out;
  const SpaceTree* t = &space;
  for (const auto& s : addr) {
    if (!out.empty()) out += '.';
    if (s.is_tail()) {
      out += 'T' + std::to_string(s.copy);
      if (t->period().size() != 1) out += '.' + std::to_string(s.index);
    } else {
      out += 'P' + std::to_string(s.index);
    }
    t = &t->child(s);
  }
  return out;
}

namespace {

std::uint64_t parse_count(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("malformed address: " + std::string(whole));
  }
  return std::stoull(std::string(digits));
}

}  // namespace

PointAddress parse_address(std::string_view text) {
  if (text == "ε" || text == "root" || text.empty()) return {};
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto dot = text.find('.', start);
    parts.push_back(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  PointAddress addr;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto p = parts[i];
    if (p.empty()) throw std::invalid_argument("malformed address: " + std::string(text));
    if (p.front() == 'P') {
      addr.push_back(Selector::prefix(parse_count(p.substr(1), text)));
    } else if (p.front() == 'T') {
      const auto copy = parse_count(p.substr(1), text);
      std::size_t member = 0;
      if (i + 1 < parts.size() && !parts[i + 1].empty() && std::isdigit(static_cast<unsigned char>(parts[i + 1].front()))) {
        member = parse_count(parts[++i], text);
      }
      addr.push_back(Selector::tail(copy, member));
    } else {
      throw std::invalid_argument("malformed address: " + std::string(text));
    }
  }
  return addr;
}

SpaceTree unroll_space(const SpaceTree& space, std::size_t depth) {
  SpaceTree::Children prefix;
  for (const auto& c : space.prefix()) prefix.push_back(unroll_space(c, depth));
  SpaceTree::Children period;
  for (const auto& m : space.period()) period.push_back(unroll_space(m, depth));
  for (std::size_t c = 0; c < depth && space.is_limit(); ++c) {
    for (const auto& m : period) prefix.push_back(m);
  }
  return limit(std::move(prefix), std::move(period));
}

Unrolled::Unrolled(SpaceTree original, std::size_t depth)
    : original_(std::move(original)), depth_(depth), space_(unroll_space(original_, depth)) {}

PointAddress Unrolled::to_unrolled(const PointAddress& original_addr) const {
  PointAddress out;
  const SpaceTree* t = &original_;
  for (const auto& s : original_addr) {
    if (s.is_tail()) {
      if (s.index >= t->period().size()) throw std::out_of_range("invalid address selector");
      if (s.copy < depth_) {
        out.push_back(Selector::prefix(t->prefix().size() + s.copy * t->period().size() + s.index));
      } else {
        out.push_back(Selector::tail(s.copy - depth_, s.index));
      }
    } else {
      out.push_back(s);
    }
    t = &t->child(s);
  }
  return out;
}

PointAddress Unrolled::to_original(const PointAddress& unrolled_addr) const {
  PointAddress out;
  const SpaceTree* t = &original_;
  for (const auto& s : unrolled_addr) {
    Selector o = s;
    if (s.is_tail()) {
      o = Selector::tail(s.copy + depth_, s.index);
    } else if (s.index >= t->prefix().size()) {
      const std::size_t k = s.index - t->prefix().size();
      const std::size_t p = t->period().size();
      if (p == 0 || k >= depth_ * p) throw std::out_of_range("invalid address selector");
      o = Selector::tail(k / p, k % p);
    }
    out.push_back(o);
    t = &t->child(o);
  }
  return out;
}

}  // namespace tosc
