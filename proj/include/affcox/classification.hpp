#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affcox/affine_weyl.hpp"
#include "affcox/integer_matrix.hpp"

namespace affcox {

/// (P^vee/Q^vee)_delta' for delta' = delta^k: P^vee modulo the lattice spanned
/// by Q^vee and (1 - delta')P^vee, in the fundamental-coweight basis.
class CoinvariantGroup {
 public:
  CoinvariantGroup(const FiniteWeylGroup& w0, int delta_pow);

  int delta_pow() const { return delta_pow_; }
  int rank() const { return static_cast<int>(relations_.cols()); }
  /// Relation generators, one per row: simple coroots, then omega_i - omega_delta'(i).
  const IntMatrix& relations() const { return relations_; }
  /// Canonical basis of the relation lattice.
  const IntMatrix& normal_form() const { return hnf_; }
  /// Invariant factors > 1, ascending: the group is the product of Z/d.
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  /// Index of the relation lattice in P^vee (product of the HNF pivots).
  std::int64_t order() const { return order_; }
  /// Same order, from the Smith form; agrees with order() by construction check.
  std::int64_t order_from_smith() const { return smith_order_; }

  /// Canonical representative of chi modulo the relation lattice.
  Vec reduce(std::span<const std::int64_t> chi) const;
  /// Coordinates in the product of Z/d_i (one per invariant factor).
  Vec coordinates(std::span<const std::int64_t> chi) const;
  /// All canonical representatives, sorted.
  std::vector<Vec> elements() const;
  /// e.g. "Z/2 x Z/2", or "0" for the trivial group.
  std::string structure() const;

 private:
  int delta_pow_ = 0;
  IntMatrix relations_;
  IntMatrix hnf_;
  std::vector<std::int64_t> factors_;
  IntMatrix smith_right_;
  std::vector<std::int64_t> smith_diag_;
  std::int64_t order_ = 1;
  std::int64_t smith_order_ = 1;
};

/// kappa: the class of chi in (P^vee/Q^vee)_delta^k for x = t^chi w delta^k.
/// Throws std::invalid_argument if x is not in W~ delta^k.
Vec kottwitz(const AffineWeylGroup& g, const AffineElement& x, int delta_pow);

struct LatticeIdentityReport {
  FiniteWeylElement coxeter;
  IntMatrix one_minus_c_basis;      // canonical basis of (1 - c delta)P^vee
  IntMatrix relation_basis;         // canonical basis of (1 - delta)P^vee + Q^vee
  bool lattices_equal = false;      // claim (a)
  bool inclusion_holds = false;     // (1 - c delta)P^vee inside (1 - delta)P^vee + Q^vee
  std::vector<Vec> coroot_preimages;  // x_i with (1 - c delta) x_i = alpha_i^vee, re-verified
  bool coroots_contained = false;   // claim (b)
  bool all() const { return lattices_equal && inclusion_holds && coroots_contained; }
};

/// Checks (1 - delta)P^vee + Q^vee = (1 - c delta)P^vee and Q^vee in (1 - c delta)P^vee.
/// Throws std::invalid_argument unless c_delta is a Coxeter element of W_0'.
LatticeIdentityReport lattice_identity_check(const FiniteWeylGroup& w0, const FiniteWeylElement& c_delta);

/// t^mu c_delta with mu the canonical lift of v.
AffineElement classify_representative(const AffineWeylGroup& g, const FiniteWeylElement& c_delta, std::span<const std::int64_t> v);

struct SpotCheck {
  bool same_class = false;
  std::string method;  // "descent", "conjugator-search" or "not-found"
};

/// Bounded search for a W~-conjugator between x and y: compares descent minima of
/// the Omega-translates of x with those of y, then tries W_a-conjugators of length
/// at most `radius` (times Omega). A negative answer is inconclusive.
SpotCheck spot_check_same_class(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& y, int radius = 6);

}  // namespace affcox
