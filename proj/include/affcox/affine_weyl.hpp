#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affcox/finite_weyl.hpp"

namespace affcox {

/// Element t^chi * w * delta^k of the twisted extended affine Weyl group
/// P^vee x| W_0'. chi is in the fundamental-coweight basis; the finite part
/// carries both w and k. Equality is componentwise.
class AffineElement {
 public:
  AffineElement() = default;
  AffineElement(Vec chi, FiniteWeylElement finite);

  int rank() const { return fin_.rank(); }
  int delta_pow() const { return fin_.delta_pow(); }
  const GroupTag& tag() const { return fin_.tag(); }
  /// The finite part eta(x) = w * delta^k.
  const FiniteWeylElement& finite() const { return fin_; }
  std::span<const std::int64_t> chi() const { return {chi_.data(), static_cast<std::size_t>(rank())}; }
  Vec chi_vec() const { return Vec(chi().begin(), chi().end()); }
  bool has_zero_translation() const;

  std::size_t hash() const;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
  friend auto operator<=>(const AffineElement&, const AffineElement&) = default;
  /// (t^chi f)(t^chi' f') = t^(chi + f(chi')) f f'; throws on mixed groups.
  friend AffineElement operator*(const AffineElement& a, const AffineElement& b);

 private:
  friend class AffineWeylGroup;
  FiniteWeylElement fin_;
  std::array<std::int64_t, kMaxRank> chi_{};
};

struct AffineHash {
  std::size_t operator()(const AffineElement& e) const { return e.hash(); }
};

/// A length-zero element of the twisted extended group, with the minuscule
/// node generating its Omega part (none for pure delta-powers).
struct OmegaElement {
  AffineElement element;
  std::optional<int> minuscule;
  int delta_pow = 0;
};

struct FiniteOrderWitness {
  std::uint64_t finite_order = 1;   // order of eta(x)
  bool is_finite = true;            // x^finite_order == 1
  Vec translation;                  // translation part of x^finite_order
};

/// Reduced expression x = s_{word[0]} ... s_{word[l-1]} * tau with tau of length 0.
struct AffineDecomposition {
  std::vector<int> word;
  AffineElement tau;
};

/// The group W~' = P^vee x| (W_0 x| <delta>) with its Coxeter subgroup W_a on
/// the affine nodes {0, ..., n}, where s_0 = t^(theta^vee) s_theta.
class AffineWeylGroup {
 public:
  AffineWeylGroup(char type_letter, int rank, std::string_view twist = "id");
  AffineWeylGroup(std::shared_ptr<const RootSystem> rs, std::string_view twist = "id");

  const FiniteWeylGroup& finite() const { return finite_; }
  const RootSystem& root_system() const { return finite_.root_system(); }
  int rank() const { return finite_.rank(); }
  int delta_order() const { return finite_.delta_order(); }
  const GroupTag& tag() const { return finite_.tag(); }
  NodeSet affine_nodes() const { return NodeSet::affine_nodes(rank()); }
  /// e.g. "B3", "2A3", "3D4"
  std::string name() const;

  AffineElement identity() const;
  AffineElement translation(std::span<const std::int64_t> chi) const;
  AffineElement lift(const FiniteWeylElement& f) const;
  AffineElement simple_reflection(int node) const;  // node in 0..rank
  AffineElement delta_power(int k) const;
  /// s_{word[0]} ... s_{word[l-1]} delta^k, affine node 0 allowed.
  AffineElement from_word(std::span<const int> word, int delta_pow = 0) const;

  AffineElement multiply(const AffineElement& a, const AffineElement& b) const;
  AffineElement inverse(const AffineElement& x) const;
  AffineElement conjugate(const AffineElement& by, const AffineElement& x) const;  // by x by^{-1}
  /// s_i x s_i
  AffineElement simple_conjugate(int node, const AffineElement& x) const;

  /// Iwahori-Matsumoto length; the delta-power contributes nothing.
  int length(const AffineElement& x) const;
  AffineDecomposition decompose(const AffineElement& x) const;
  /// Reduced word over the affine nodes of x tau^{-1}, where tau is the length-zero part.
  std::vector<int> reduced_word(const AffineElement& x) const;
  /// Whether x lies in W_a.
  bool in_affine_weyl_group(const AffineElement& x) const;
  /// The unique tau in Omega' with x in W_a tau.
  AffineElement length_zero_part(const AffineElement& x) const;

  /// Permutation pi of the affine nodes with tau s_i tau^{-1} = s_{pi(i)};
  /// throws std::invalid_argument if tau does not normalize the generators.
  Permutation node_action(const AffineElement& tau) const;
  /// Minimal tau-stable J with x in W_J tau. Throws std::invalid_argument unless x in W_a tau.
  NodeSet support(const AffineElement& x, const AffineElement& tau) const;

  FiniteWeylElement eta(const AffineElement& x) const;

  /// Identity plus t^(omega_i) w_0^(S_0 - {i}) w_0^(S_0) for every minuscule i.
  std::vector<OmegaElement> omega_group() const;
  /// Omega x <delta>: omega_group() times each delta power.
  std::vector<OmegaElement> omega_prime() const;
  /// tau_i for a minuscule node i, or the identity for i = 0.
  AffineElement tau(int minuscule_node) const;

  AffineElement power(const AffineElement& x, std::uint64_t n) const;
  FiniteOrderWitness is_finite_order(const AffineElement& x) const;

  /// "t[c1,...,cn] s1 s2 d^k" (word of the W_0 part; empty word prints nothing).
  std::string to_text(const AffineElement& x) const;
  /// Accepts the canonical text plus shorthand: missing t[...] or d^k, "e",
  /// and s0 inside the word (multiplied out).
  AffineElement parse(std::string_view text) const;

 private:
  void check(const AffineElement& x) const;

  FiniteWeylGroup finite_;
  AffineElement s0_;
  std::vector<std::array<std::int8_t, kMaxRank>> positive_roots_;
};

}  // namespace affcox
