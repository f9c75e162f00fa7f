#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affcox/affine_weyl.hpp"

namespace affcox {

/// Thrown when a closure runs out of node budget where a complete result is required.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DescentEdge {
  AffineElement from;
  int node = 0;
  AffineElement to;
};

struct ClosureOptions {
  std::size_t node_budget = 1'000'000;
  bool record_edges = false;
};

/// Default node budget: AFFCOX_NODE_BUDGET if set to a positive integer, else 10^6.
std::size_t default_node_budget();

/// Everything reachable from `start` by s_i-conjugations that never increase length.
struct DescentClosure {
  AffineElement start;
  std::vector<AffineElement> reachable;  // sorted
  std::vector<AffineElement> minimal;    // minimum-length stratum, sorted
  int minimal_length = 0;
  bool complete = true;                  // false: node budget exhausted, sets are partial
  std::optional<std::vector<DescentEdge>> edge_log;
};

DescentClosure descent_closure(const AffineWeylGroup& g, const AffineElement& start, const ClosureOptions& options = {});

/// Whether eta(x) is W_0-conjugate to a Coxeter element of W_0' in the same coset.
bool has_finite_coxeter_part(const AffineWeylGroup& g, const AffineElement& x);

/// Coxeter elements of W_J x| <tau> lying in W_J tau: one reflection per
/// tau-orbit of J, in every order, times tau. Sorted, deduplicated.
/// Throws std::invalid_argument unless J is tau-stable and proper.
std::vector<AffineElement> parabolic_coxeter_elements(const AffineWeylGroup& g, NodeSet j, const AffineElement& tau);

/// sigma x sigma^{-1}
AffineElement omega_translate_class(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& sigma);

struct ClassChecks {
  bool is_finite_coxeter_part = false;
  bool minimal_equals_parabolic_coxeters = false;
  bool support_constant_on_minimal = false;
  bool j_proper = false;
  bool j_tau_stable = false;
  bool all() const {
    return is_finite_coxeter_part && minimal_equals_parabolic_coxeters && support_constant_on_minimal && j_proper &&
           j_tau_stable;
  }
};

struct ClassReport {
  AffineElement tau;
  std::optional<int> tau_minuscule;
  AffineElement representative;
  std::optional<NodeSet> j_found;
  std::vector<AffineElement> minimal_set;
  int minimal_length = 0;
  std::size_t closure_size = 0;
  std::size_t parabolic_coxeter_count = 0;
  ClassChecks checks;
  std::optional<std::vector<DescentEdge>> edge_log;
};

/// Computes O_min for the W_a-class of `representative` and checks that it is
/// exactly the set of Coxeter elements of W_J tau for J = supp of its members.
/// Throws std::invalid_argument if representative is not in W_a tau or has no
/// finite Coxeter part, BudgetExceeded if the closure is incomplete.
ClassReport verify_main_theorem(const AffineWeylGroup& g, const AffineElement& representative, const AffineElement& tau,
                                const ClosureOptions& options = {});

/// The Omega'-element matching `tau` (its minuscule index), if any.
std::optional<OmegaElement> find_omega(const AffineWeylGroup& g, const AffineElement& tau);

}  // namespace affcox
