#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affcox/affine_weyl.hpp"

namespace affcox {

/// One witness (J, c) for tau delta' with delta' = delta^k: tau delta' c is a
/// Coxeter element of W_J x| <tau delta'> with finite Coxeter part.
struct CaseEntry {
  char type_letter = 'A';
  int rank = 0;
  std::string twist = "id";        // twist of the ambient group
  int delta_pow = 0;               // k
  std::string delta_name = "id";   // name of delta' = delta^k
  std::optional<int> minuscule;    // i, or none for tau = 1
  std::string parity_case;
  std::vector<std::vector<int>> orbits;  // expected tau delta'-orbits on the affine nodes
  NodeSet j;
  std::vector<int> c_word;         // letters in 1..rank
  std::string source;              // "table", "derived" or "transported"
  std::string transport;           // automorphism used by a transported entry
};

struct EntryChecks {
  bool tau_length_zero = false;
  bool orbits_match = false;
  bool support_equals_j = false;
  bool finite_part_coxeter = false;
  bool is_parabolic_coxeter = false;
  bool j_maximal_proper = false;
  std::vector<std::vector<int>> computed_orbits;
  NodeSet computed_support;
  bool all() const {
    return tau_length_zero && orbits_match && support_equals_j && finite_part_coxeter && is_parabolic_coxeter &&
           j_maximal_proper;
  }
};

/// Entries for every delta-power k and every tau in Omega (identity first, then
/// minuscule nodes ascending). Untwisted type A rows with tau != 1 come from derive_entry.
std::vector<CaseEntry> table_entries(const AffineWeylGroup& g);
/// The single entry for (delta^k, tau_i); i = nullopt selects tau = 1.
CaseEntry entry_for(const AffineWeylGroup& g, int delta_pow, std::optional<int> minuscule);

/// tau delta' (the length-zero part) and tau delta' c.
AffineElement entry_tau(const AffineWeylGroup& g, const CaseEntry& e);
AffineElement entry_element(const AffineWeylGroup& g, const CaseEntry& e);

/// Throws std::invalid_argument if the entry does not belong to g.
EntryChecks verify_entry(const AffineWeylGroup& g, const CaseEntry& e);

/// Search over complements J of single tau delta'-orbits (by smallest member)
/// and the sorted Coxeter elements of W_J tau delta' for the first witness that
/// passes every check. Throws std::runtime_error if none exists.
CaseEntry derive_entry(const AffineWeylGroup& g, int delta_pow, int minuscule);

/// Orbits in canonical order: each sorted, ordered by smallest member.
std::vector<std::vector<int>> canonical_orbits(std::vector<std::vector<int>> orbits);

}  // namespace affcox
