#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace affcox {

/// Subset of the affine node set {0, 1, ..., n} (n <= 8); node 0 is the affine node.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr NodeSet(std::initializer_list<int> nodes) {
    for (int i : nodes) insert(i);
  }
  static constexpr NodeSet from_bits(std::uint32_t bits) {
    NodeSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, 1, ..., rank}
  static constexpr NodeSet affine_nodes(int rank) { return from_bits((1u << (rank + 1)) - 1); }
  /// {1, ..., rank}
  static constexpr NodeSet finite_nodes(int rank) { return from_bits(((1u << (rank + 1)) - 1) & ~1u); }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(int i) { bits_ |= 1u << i; }
  constexpr void erase(int i) { bits_ &= ~(1u << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr NodeSet operator|(NodeSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr NodeSet minus(NodeSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  /// "{0,1,2}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(NodeSet, NodeSet) = default;
  friend constexpr auto operator<=>(NodeSet a, NodeSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace affcox
