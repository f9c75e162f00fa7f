#include "affcox/case_tables.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "affcox/conjugacy.hpp"

namespace affcox {

namespace {

// A row as written: parity guard, expected orbits, J, c. Nodes in the
// labeling of the ambient root system.
struct Row {
  std::string parity;
  std::vector<std::vector<int>> orbits;
  NodeSet j;
  std::vector<int> c;
};

std::vector<int> run(int a, int b) {  // s_a s_{a+1} ... s_b (empty when a > b)
  std::vector<int> w;
  for (int x = a; x <= b; ++x) w.push_back(x);
  return w;
}

NodeSet all_but(int rank, std::initializer_list<int> removed) {
  NodeSet s = NodeSet::affine_nodes(rank);
  for (int r : removed) s.erase(r);
  return s;
}

std::vector<int> pair(int a, int b) { return a == b ? std::vector<int>{a} : std::vector<int>{a, b}; }

std::optional<Row> type_2a_row(int rank, int i) {
  const int n = rank + 1;
  Row r;
  r.orbits.push_back(pair(0, i));
  for (int j = 1; j < i; ++j) r.orbits.push_back(pair(j, i - j));
  for (int j = 1; j < n - i; ++j) r.orbits.push_back(pair(i + j, n - j));
  if (n % 2 == 1 && i % 2 == 1) {
    r.parity = "n odd, i odd";
    r.j = all_but(rank, {(n + i) / 2});
    r.c = run((i + 1) / 2, (n + i) / 2 - 1);
  } else if (n % 2 == 1) {
    r.parity = "n odd, i even";
    r.j = all_but(rank, {i / 2});
    r.c = run(i / 2 + 1, (n + i - 1) / 2);
  } else if (i % 2 == 1) {
    r.parity = "n even, i odd";
    r.j = all_but(rank, {(i - 1) / 2, (i + 1) / 2});
    r.c = run((i + 3) / 2, (n + i - 1) / 2);
  } else {
    r.parity = "n even, i even";
    r.j = all_but(rank, {(n + i) / 2});
    r.c = run(i / 2, (n + i) / 2 - 1);
  }
  return r;
}

std::optional<Row> type_d_row(int n, int i, bool twisted) {
  Row r;
  if (i == 1) {
    r.parity = "tau = tau_1";
    r.orbits.push_back({0, 1});
    if (!twisted) {
      r.orbits.push_back({n - 1, n});
      for (int x = 2; x <= n - 2; ++x) r.orbits.push_back({x});
      r.j = all_but(n, {n - 1, n});
      r.c = run(1, n - 2);
    } else {
      for (int x = 2; x <= n; ++x) r.orbits.push_back({x});
      r.j = all_but(n, {n});
      r.c = run(1, n - 1);
    }
    return r;
  }
  if (i != n) return std::nullopt;
  if (!twisted && n % 2 == 1) {
    r.parity = "tau = tau_n, n odd";
    r.orbits.push_back({0, n, 1, n - 1});
    for (int x = 2; x <= (n - 1) / 2; ++x) r.orbits.push_back(pair(x, n - x));
    r.j = all_but(n, {(n - 1) / 2, (n + 1) / 2});
    r.c = run((n + 3) / 2, n - 2);
    r.c.push_back(n);
  } else if (!twisted) {
    r.parity = "tau = tau_n, n even";
    for (int x = 0; x <= n / 2; ++x) r.orbits.push_back(pair(x, n - x));
    r.j = all_but(n, {0, n});
    r.c = run(n / 2, n - 1);
  } else if (n % 2 == 1) {
    r.parity = "tau = tau_n, n odd";
    for (int x = 0; x <= (n - 1) / 2; ++x) r.orbits.push_back(pair(x, n - x));
    r.j = all_but(n, {0, n});
    r.c = run((n + 1) / 2, n - 1);
  } else {
    r.parity = "tau = tau_n, n even";
    r.orbits.push_back({0, 1, n - 1, n});
    for (int x = 2; x <= n / 2; ++x) r.orbits.push_back(pair(x, n - x));
    r.j = all_but(n, {n / 2});
    r.c = run(n / 2 + 1, n - 1);
  }
  return r;
}

// Rows for the standard twists id, flip, triality. Untwisted type A is derived, not tabulated.
std::optional<Row> tabulated_row(char letter, int n, const std::string& kind, int i) {
  if (letter == 'A' && kind == "flip") return type_2a_row(n, i);
  if (letter == 'B' && kind == "id" && i == 1) {
    Row r{"tau = tau_1", {{0, 1}}, all_but(n, {n}), run(1, n - 1)};
    for (int x = 2; x <= n; ++x) r.orbits.push_back({x});
    return r;
  }
  if (letter == 'C' && kind == "id" && i == n) {
    Row r;
    for (int x = 0; x <= n / 2; ++x) r.orbits.push_back(pair(x, n - x));
    if (n % 2 == 1) {
      r.parity = "n odd";
      r.j = all_but(n, {0, n});
      r.c = run((n + 1) / 2, n - 1);
    } else {
      r.parity = "n even";
      r.j = all_but(n, {n / 2});
      r.c = run(n / 2 + 1, n);
    }
    return r;
  }
  if (letter == 'D' && (kind == "id" || kind == "flip")) return type_d_row(n, i, kind == "flip");
  if (letter == 'D' && n == 4 && kind == "triality" && i == 1)
    return Row{"tau = tau_1", {{0, 1, 4}, {2}, {3}}, all_but(4, {3}), {2, 1}};
  if (letter == 'E' && n == 6 && kind == "id" && i == 1)
    return Row{"tau = tau_1", {{0, 1, 6}, {2, 3, 5}, {4}}, all_but(6, {0, 1, 6}), {4, 5}};
  if (letter == 'E' && n == 6 && kind == "flip" && i == 1)
    return Row{"tau = tau_1", {{0, 1}, {2, 3}, {4}, {5}, {6}}, all_but(6, {6}), {5, 4, 3, 1}};
  if (letter == 'E' && n == 7 && kind == "id" && i == 7)
    return Row{"tau = tau_7", {{0, 7}, {1, 6}, {3, 5}, {2}, {4}}, all_but(7, {0, 7}), {2, 4, 5, 6}};
  return std::nullopt;
}

NodeSet map_set(const Permutation& phi, NodeSet s) {
  NodeSet out;
  for (int x : s.to_vector()) out.insert(phi[static_cast<std::size_t>(x)]);
  return out;
}

CaseEntry skeleton(const AffineWeylGroup& g, int delta_pow, std::optional<int> minuscule) {
  CaseEntry e;
  e.type_letter = g.root_system().type_letter();
  e.rank = g.rank();
  e.twist = g.finite().twist().name;
  e.delta_pow = delta_pow;
  const Permutation dp = g.finite().delta_permutation(delta_pow);
  for (const auto& a : g.root_system().diagram_automorphisms())
    if (a.perm == dp) e.delta_name = a.name;
  e.minuscule = minuscule;
  return e;
}

CaseEntry identity_entry(const AffineWeylGroup& g, int delta_pow) {
  CaseEntry e = skeleton(g, delta_pow, std::nullopt);
  const Permutation dp = g.finite().delta_permutation(delta_pow);
  e.parity_case = "tau = 1";
  e.orbits = orbits(dp, g.affine_nodes());
  e.j = NodeSet::finite_nodes(g.rank());
  for (const auto& o : orbits(dp, e.j)) e.c_word.push_back(o.front());
  e.source = "table";
  return e;
}

// tau_i in A_{n-1} rotates the affine nodes by i: orbits are residues mod gcd(i, n).
std::vector<std::vector<int>> type_a_orbits(int rank, int i) {
  const int n = rank + 1;
  const int d = std::gcd(i, n);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(d));
  for (int x = 0; x < n; ++x) out[static_cast<std::size_t>(x % d)].push_back(x);
  return out;
}

void check_membership(const AffineWeylGroup& g, const CaseEntry& e) {
  if (e.type_letter != g.root_system().type_letter() || e.rank != g.rank() || e.twist != g.finite().twist().name)
    throw std::invalid_argument("entry for " + std::string(1, e.type_letter) + std::to_string(e.rank) + " (" + e.twist +
                                ") does not belong to " + g.name() + " (" + g.finite().twist().name + ")");
  if (e.delta_pow < 0 || e.delta_pow >= g.delta_order())
    throw std::invalid_argument("entry delta power " + std::to_string(e.delta_pow) + " out of range");
  for (int s : e.c_word)
    if (s < 1 || s > g.rank()) throw std::invalid_argument("entry word letter s" + std::to_string(s) + " is not in S_0");
}

}  // namespace

std::vector<std::vector<int>> canonical_orbits(std::vector<std::vector<int>> orbits) {
  for (auto& o : orbits) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }
  std::sort(orbits.begin(), orbits.end());
  orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
  return orbits;
}

CaseEntry entry_for(const AffineWeylGroup& g, int delta_pow, std::optional<int> minuscule) {
  if (delta_pow < 0 || delta_pow >= g.delta_order())
    throw std::invalid_argument("delta power " + std::to_string(delta_pow) + " out of range for " + g.name());
  if (!minuscule) return identity_entry(g, delta_pow);
  const int i = *minuscule;
  const auto& mins = g.root_system().minuscule_indices();
  if (std::find(mins.begin(), mins.end(), i) == mins.end())
    throw std::invalid_argument("node " + std::to_string(i) + " is not minuscule in " + g.root_system().name());

  const RootSystem& rs = g.root_system();
  const Permutation dp = g.finite().delta_permutation(delta_pow);
  if (rs.type_letter() == 'A' && permutation_order(dp) == 1) return derive_entry(g, delta_pow, i);

  // Find phi with delta' = phi delta_s phi^{-1} for a tabulated delta_s, preferring low-order phi.
  std::vector<const DiagramAutomorphism*> candidates;
  for (const auto& a : rs.diagram_automorphisms()) candidates.push_back(&a);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const DiagramAutomorphism* a, const DiagramAutomorphism* b) { return a->order < b->order; });
  for (const DiagramAutomorphism* phi : candidates) {
    const Permutation phi_inv = inverse(phi->perm);
    const Permutation ds = compose(phi_inv, compose(dp, phi->perm));
    std::string kind;
    for (const auto& a : rs.diagram_automorphisms())
      if (a.perm == ds) kind = a.name;
    const auto row = tabulated_row(rs.type_letter(), rs.rank(), kind, phi_inv[static_cast<std::size_t>(i)]);
    if (!row) continue;
    CaseEntry e = skeleton(g, delta_pow, i);
    e.parity_case = row->parity;
    for (const auto& o : row->orbits) {
      std::vector<int> m;
      for (int x : o) m.push_back(phi->perm[static_cast<std::size_t>(x)]);
      e.orbits.push_back(std::move(m));
    }
    e.orbits = canonical_orbits(std::move(e.orbits));
    e.j = map_set(phi->perm, row->j);
    for (int x : row->c) e.c_word.push_back(phi->perm[static_cast<std::size_t>(x)]);
    if (phi->order == 1) {
      e.source = "table";
    } else {
      e.source = "transported";
      e.transport = phi->name;
    }
    return e;
  }
  throw std::invalid_argument("no tabulated case covers " + g.name() + " with delta' = " + cycle_notation(dp) + ", tau_" +
                              std::to_string(i));
}

std::vector<CaseEntry> table_entries(const AffineWeylGroup& g) {
  std::vector<CaseEntry> out;
  for (int k = 0; k < g.delta_order(); ++k) {
    out.push_back(entry_for(g, k, std::nullopt));
    for (int i : g.root_system().minuscule_indices()) out.push_back(entry_for(g, k, i));
  }
  return out;
}

AffineElement entry_tau(const AffineWeylGroup& g, const CaseEntry& e) {
  check_membership(g, e);
  const AffineElement tau = e.minuscule ? g.tau(*e.minuscule) : g.identity();
  return tau * g.delta_power(e.delta_pow);
}

AffineElement entry_element(const AffineWeylGroup& g, const CaseEntry& e) {
  return entry_tau(g, e) * g.lift(g.finite().from_word(e.c_word));
}

EntryChecks verify_entry(const AffineWeylGroup& g, const CaseEntry& e) {
  check_membership(g, e);
  EntryChecks ch;
  const AffineElement tau = e.minuscule ? g.tau(*e.minuscule) : g.identity();
  ch.tau_length_zero = g.length(tau) == 0;
  const AffineElement tau_d = tau * g.delta_power(e.delta_pow);
  const Permutation pi = g.node_action(tau_d);
  ch.computed_orbits = orbits(pi, g.affine_nodes());
  ch.orbits_match = canonical_orbits(ch.computed_orbits) == canonical_orbits(e.orbits);

  const AffineElement x = entry_element(g, e);
  ch.computed_support = g.support(x, tau_d);
  ch.support_equals_j = ch.computed_support == e.j;
  ch.finite_part_coxeter = has_finite_coxeter_part(g, x);

  bool stable = e.j.subset_of(g.affine_nodes());
  for (int v : e.j.to_vector()) stable = stable && e.j.contains(pi[static_cast<std::size_t>(v)]);
  const bool proper = e.j != g.affine_nodes();
  if (stable && proper) {
    const auto coxeters = parabolic_coxeter_elements(g, e.j, tau_d);
    ch.is_parabolic_coxeter = std::binary_search(coxeters.begin(), coxeters.end(), x);
    const NodeSet rest = g.affine_nodes().minus(e.j);
    ch.j_maximal_proper = orbits(pi, rest).size() == 1;
  }
  return ch;
}

CaseEntry derive_entry(const AffineWeylGroup& g, int delta_pow, int minuscule) {
  const AffineElement tau_d = g.tau(minuscule) * g.delta_power(delta_pow);
  const AffineElement tau_d_inv = g.inverse(tau_d);
  const Permutation pi = g.node_action(tau_d);
  CaseEntry e = skeleton(g, delta_pow, minuscule);
  e.source = "derived";
  e.parity_case = "search";
  const bool type_a = g.root_system().type_letter() == 'A' && permutation_order(g.finite().delta_permutation(delta_pow)) == 1;
  e.orbits = type_a ? type_a_orbits(g.rank(), minuscule) : orbits(pi, g.affine_nodes());
  for (const auto& orbit : orbits(pi, g.affine_nodes())) {
    NodeSet j = g.affine_nodes();
    for (int v : orbit) j.erase(v);
    for (const AffineElement& x : parabolic_coxeter_elements(g, j, tau_d)) {
      const AffineElement c = tau_d_inv * x;
      if (!c.has_zero_translation() || c.delta_pow() != 0) continue;
      e.j = j;
      e.c_word = g.finite().reduced_word(c.finite());
      if (verify_entry(g, e).all()) return e;
    }
  }
  throw std::runtime_error("no witness (J, c) found for " + g.name() + ", tau_" + std::to_string(minuscule) + " d^" +
                           std::to_string(delta_pow));
}

}  // namespace affcox
