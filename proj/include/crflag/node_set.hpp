#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace crflag {

/// Set of Dynkin nodes, stored as a bitmask. Bit i is node i (0-based);
/// user-facing labels are 1-based.
class NodeSet {
 public:
  static constexpr int kMaxNodes = 64;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

  static NodeSet from_labels(std::initializer_list<int> labels) {
    NodeSet s;
    for (int l : labels) s.insert(l - 1);
    return s;
  }
  static NodeSet from_labels(const std::vector<int>& labels) {
    NodeSet s;
    for (int l : labels) s.insert(l - 1);
    return s;
  }
  static NodeSet first_n(int n) {
    return NodeSet(n >= kMaxNodes ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }

  /// Ascending 0-based indices.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
  /// Ascending 1-based labels.
  std::vector<int> labels() const {
    std::vector<int> out = indices();
    for (int& i : out) ++i;
    return out;
  }

  /// "{1,2}" in 1-based labels.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int l : labels()) {
      if (!first) s += ",";
      s += std::to_string(l);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(NodeSet, NodeSet) = default;
  friend constexpr auto operator<=>(NodeSet a, NodeSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls f(subset) for every subset of s, in increasing bitmask order.
template <typename F>
void for_each_subset(NodeSet s, F&& f) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    f(NodeSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace crflag
