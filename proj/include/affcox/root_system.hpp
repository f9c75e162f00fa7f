#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affcox/integer_matrix.hpp"
#include "affcox/node_set.hpp"

namespace affcox {

inline constexpr int kMaxRank = 8;

/// Permutation of the affine nodes {0, ..., n}: perm[i] is the image of node i.
using Permutation = std::vector<int>;

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, int k);
int permutation_order(const Permutation& p);
/// Orbits of `p` restricted to `nodes`, each sorted, ordered by smallest member.
std::vector<std::vector<int>> orbits(const Permutation& p, NodeSet nodes);
/// Cycle notation on non-fixed points, e.g. "(1 3 4)"; "id" for the identity.
std::string cycle_notation(const Permutation& p);

/// A Dynkin-diagram automorphism; perm fixes the affine node 0.
struct DiagramAutomorphism {
  std::string name;  // "id", "flip", "triality", "triality-inverse" or cycle notation
  Permutation perm;
  int order = 1;
};

/// Immutable data of an irreducible reduced root system in Bourbaki labeling.
///
/// Roots are integer vectors in the simple-root basis, coweights integer
/// vectors in the fundamental-coweight basis, so <chi, alpha> is a dot product.
/// cartan(i, j) = <alpha_j^vee, alpha_i> (0-based), hence the simple coroot
/// alpha_j^vee has fundamental-coweight coordinates cartan(., j).
class RootSystem {
 public:
  /// Throws std::invalid_argument for letters outside A-G or an invalid rank.
  static RootSystem build(char type_letter, int rank);

  char type_letter() const { return letter_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, letter_) + std::to_string(rank_); }

  const IntMatrix& cartan() const { return cartan_; }
  /// Sorted by height, then lexicographically.
  const std::vector<Vec>& positive_roots() const { return positive_roots_; }
  /// positive_coroots()[k] is the coroot of positive_roots()[k], in coweight coordinates.
  const std::vector<Vec>& positive_coroots() const { return positive_coroots_; }
  const Vec& highest_root() const { return highest_root_; }
  const Vec& highest_coroot() const { return highest_coroot_; }

  Vec simple_root(int node) const;
  Vec simple_coroot(int node) const;
  Vec fundamental_coweight(int node) const;

  const std::vector<int>& minuscule_indices() const { return minuscule_; }
  /// Identity first.
  const std::vector<DiagramAutomorphism>& diagram_automorphisms() const { return autos_; }
  /// Looks up by name or by cycle notation; throws std::invalid_argument.
  const DiagramAutomorphism& automorphism(std::string_view name) const;
  int automorphism_index(std::string_view name) const;

  /// |P^vee / Q^vee| = det(cartan).
  std::int64_t fundamental_group_order() const { return det_; }

 private:
  char letter_ = 'A';
  int rank_ = 0;
  IntMatrix cartan_;
  std::vector<Vec> positive_roots_;
  std::vector<Vec> positive_coroots_;
  Vec highest_root_;
  Vec highest_coroot_;
  std::vector<int> minuscule_;
  std::vector<DiagramAutomorphism> autos_;
  std::int64_t det_ = 1;
};

/// <chi, alpha>; throws std::invalid_argument on dimension mismatch.
std::int64_t pairing(std::span<const std::int64_t> chi, std::span<const std::int64_t> alpha);

/// Nodes i with <omega_i^vee, alpha> in {0, 1} for every positive root alpha.
std::vector<int> minuscule_coweights(const RootSystem& rs);

}  // namespace affcox
