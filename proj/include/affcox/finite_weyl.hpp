#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affcox/integer_matrix.hpp"
#include "affcox/node_set.hpp"
#include "affcox/root_system.hpp"

namespace affcox {

/// Identifies the ambient group (root system, twist) of an element, so that
/// products of elements from different groups are rejected.
struct GroupTag {
  char letter = 0;
  std::uint8_t rank = 0;
  std::uint8_t twist = 0;        // index into RootSystem::diagram_automorphisms()
  std::uint8_t delta_order = 1;
  friend bool operator==(const GroupTag&, const GroupTag&) = default;
  friend auto operator<=>(const GroupTag&, const GroupTag&) = default;
};

/// Element w * delta^k of W_0' = W_0 x| <delta>, stored as the integer matrix of
/// its action on the coweight lattice (fundamental-coweight basis) together
/// with k. Entries of such matrices are root coefficients, so they fit in int8.
class FiniteWeylElement {
 public:
  FiniteWeylElement() = default;

  int rank() const { return tag_.rank; }
  int delta_pow() const { return delta_pow_; }
  const GroupTag& tag() const { return tag_; }
  std::int64_t entry(int row, int col) const { return m_[static_cast<std::size_t>(row * kMaxRank + col)]; }
  IntMatrix matrix() const;
  /// The image of a coweight.
  Vec act(std::span<const std::int64_t> chi) const;

  std::size_t hash() const;

  friend bool operator==(const FiniteWeylElement&, const FiniteWeylElement&) = default;
  friend auto operator<=>(const FiniteWeylElement&, const FiniteWeylElement&) = default;
  /// Group product; throws std::invalid_argument if the tags differ.
  friend FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b);

 private:
  friend class FiniteWeylGroup;
  friend class AffineElement;
  GroupTag tag_{};
  std::uint8_t delta_pow_ = 0;
  std::array<std::int8_t, kMaxRank * kMaxRank> m_{};
};

struct FiniteWeylHash {
  std::size_t operator()(const FiniteWeylElement& e) const { return e.hash(); }
};

/// Result of a breadth-first closure under length-non-increasing conjugation
/// by simple reflections.
template <class Element>
struct ClosureResult {
  std::vector<Element> reachable;  // sorted
  std::vector<Element> minimal;    // sorted
  int minimal_length = 0;
  bool complete = true;            // false when the node budget was exhausted
};

/// The group W_0' for one root system and one diagram automorphism delta.
class FiniteWeylGroup {
 public:
  FiniteWeylGroup(std::shared_ptr<const RootSystem> rs, std::string_view twist = "id");

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  const DiagramAutomorphism& twist() const { return *twist_; }
  int rank() const { return rs_->rank(); }
  int delta_order() const { return twist_->order; }
  const GroupTag& tag() const { return tag_; }
  /// Action of delta^k on the affine nodes.
  Permutation delta_permutation(int k) const;

  FiniteWeylElement identity() const;
  FiniteWeylElement simple_reflection(int node) const;  // node in 1..rank
  FiniteWeylElement delta_power(int k) const;
  /// s_{word[0]} s_{word[1]} ... delta^k
  FiniteWeylElement from_word(std::span<const int> word, int delta_pow = 0) const;
  /// Validating constructor: checks that the matrix permutes the roots and
  /// that delta_pow matches it. Throws std::invalid_argument.
  FiniteWeylElement from_matrix(const IntMatrix& m, int delta_pow) const;
  /// Reflection s_alpha for a positive root index.
  FiniteWeylElement reflection(std::size_t positive_root_index) const;

  FiniteWeylElement multiply(const FiniteWeylElement& a, const FiniteWeylElement& b) const;
  FiniteWeylElement inverse(const FiniteWeylElement& a) const;
  /// s_i a s_i, computed in O(rank^2).
  FiniteWeylElement conjugate_by_simple(int node, const FiniteWeylElement& a) const;
  /// The W_0 part w of w * delta^k.
  FiniteWeylElement weyl_part(const FiniteWeylElement& a) const;

  int length(const FiniteWeylElement& a) const;
  /// Whether l(s_i a) < l(a).
  bool is_left_descent(int node, const FiniteWeylElement& a) const;
  /// Reduced word of the W_0 part by greedy left descent (smallest descent first).
  std::vector<int> reduced_word(const FiniteWeylElement& a) const;
  NodeSet support(const FiniteWeylElement& a) const;
  /// Sign of (w delta^k)^{-1}(alpha), for alpha in the simple-root basis: true if positive.
  bool maps_inverse_to_positive(const FiniteWeylElement& a, std::span<const std::int64_t> alpha) const;

  /// Longest element of the parabolic subgroup W_J, J a subset of {1..rank}.
  FiniteWeylElement longest_element(NodeSet j) const;
  /// Every product of one simple reflection per delta^k-orbit of J, in every
  /// order, times delta^k; deduplicated and sorted.
  std::vector<FiniteWeylElement> coxeter_elements(NodeSet j, int delta_pow) const;
  /// Reflections at the smallest node of each delta^k-orbit of S_0, ascending, times delta^k.
  FiniteWeylElement standard_coxeter_element(int delta_pow) const;
  /// Whether a is a Coxeter element of W_0' (one reflection per delta^k-orbit of S_0).
  bool is_coxeter_element(const FiniteWeylElement& a) const;

  std::uint64_t order_of(const FiniteWeylElement& a) const;
  Vec characteristic_polynomial(const FiniteWeylElement& a) const;

  ClosureResult<FiniteWeylElement> descent_closure(const FiniteWeylElement& start,
                                                   std::size_t node_budget = 4'000'000) const;
  /// W_0-conjugacy in W_0'. Decided by descent closures; when the minimal
  /// strata are disjoint but have equal length and characteristic polynomial,
  /// falls back to a full conjugation-orbit search bounded by `orbit_budget`
  /// (std::runtime_error if exceeded).
  bool is_conjugate(const FiniteWeylElement& a, const FiniteWeylElement& b,
                    std::size_t orbit_budget = 8'000'000) const;

  /// "s1 s2 d^k"; the identity is "d^0".
  std::string to_text(const FiniteWeylElement& a) const;
  FiniteWeylElement parse(std::string_view text) const;

 private:
  void check(const FiniteWeylElement& a) const;

  std::shared_ptr<const RootSystem> rs_;
  const DiagramAutomorphism* twist_ = nullptr;
  GroupTag tag_{};
  std::vector<std::array<std::int8_t, kMaxRank>> positive_roots_;
  std::vector<FiniteWeylElement> simple_;
  std::vector<FiniteWeylElement> delta_powers_;
};

/// Parses a word like "s1 s2 s1 d^1" into indices and the delta power. "e" and
/// "1" stand for the empty word. Indices are not range-checked.
struct ParsedWord {
  std::optional<Vec> chi;  // "t[...]" prefix, when present
  std::vector<int> word;
  int delta_pow = 0;
};
ParsedWord parse_word_text(std::string_view text);

}  // namespace affcox
