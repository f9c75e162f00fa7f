#include "affcox/conjugacy.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "affcox/detail/closure.hpp"

namespace affcox {

std::size_t default_node_budget() {
  if (const char* env = std::getenv("AFFCOX_NODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

DescentClosure descent_closure(const AffineWeylGroup& g, const AffineElement& start, const ClosureOptions& options) {
  DescentClosure out;
  out.start = start;
  std::vector<DescentEdge> edges;
  auto result = detail::descent_bfs<AffineElement, AffineHash>(
      start, 0, g.rank(), [&](int i, const AffineElement& x) { return g.simple_conjugate(i, x); },
      [&](const AffineElement& x) { return g.length(x); }, options.node_budget,
      [&](const AffineElement& from, int i, const AffineElement& to) {
        if (options.record_edges) edges.push_back({from, i, to});
      });
  out.reachable = std::move(result.reachable);
  out.minimal = std::move(result.minimal);
  out.minimal_length = result.minimal_length;
  out.complete = result.complete;
  if (options.record_edges) out.edge_log = std::move(edges);
  return out;
}

bool has_finite_coxeter_part(const AffineWeylGroup& g, const AffineElement& x) {
  const FiniteWeylElement f = g.eta(x);
  return g.finite().is_conjugate(f, g.finite().standard_coxeter_element(f.delta_pow()));
}

std::vector<AffineElement> parabolic_coxeter_elements(const AffineWeylGroup& g, NodeSet j, const AffineElement& tau) {
  if (g.length(tau) != 0) throw std::invalid_argument("parabolic_coxeter_elements: tau must have length 0");
  if (!j.subset_of(g.affine_nodes())) throw std::invalid_argument("parabolic_coxeter_elements: J is not a set of affine nodes");
  if (j == g.affine_nodes()) throw std::invalid_argument("parabolic_coxeter_elements: J must be a proper subset of the affine nodes");
  const Permutation pi = g.node_action(tau);
  for (int i : j.to_vector())
    if (!j.contains(pi[static_cast<std::size_t>(i)]))
      throw std::invalid_argument("parabolic_coxeter_elements: J = " + j.to_string() + " is not tau-stable");
  const auto orbs = orbits(pi, j);
  std::vector<AffineElement> out;
  std::vector<std::size_t> choice(orbs.size(), 0);
  while (true) {
    std::vector<int> reps;
    for (std::size_t o = 0; o < orbs.size(); ++o) reps.push_back(orbs[o][choice[o]]);
    std::sort(reps.begin(), reps.end());
    do {
      out.push_back(g.from_word(reps) * tau);
    } while (std::next_permutation(reps.begin(), reps.end()));
    std::size_t o = 0;
    while (o < orbs.size() && ++choice[o] == orbs[o].size()) choice[o++] = 0;
    if (o == orbs.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AffineElement omega_translate_class(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& sigma) {
  return g.conjugate(sigma, x);
}

std::optional<OmegaElement> find_omega(const AffineWeylGroup& g, const AffineElement& tau) {
  for (const auto& o : g.omega_prime())
    if (o.element == tau) return o;
  return std::nullopt;
}

ClassReport verify_main_theorem(const AffineWeylGroup& g, const AffineElement& representative, const AffineElement& tau,
                                const ClosureOptions& options) {
  const auto omega = find_omega(g, tau);
  if (!omega) throw std::invalid_argument("verify_main_theorem: tau = " + g.to_text(tau) + " is not a length-zero element");
  if (g.length_zero_part(representative) != tau)
    throw std::invalid_argument("verify_main_theorem: " + g.to_text(representative) + " is not in W_a * " + g.to_text(tau));

  ClassReport report;
  report.tau = tau;
  report.tau_minuscule = omega->minuscule;
  report.representative = representative;
  report.checks.is_finite_coxeter_part = has_finite_coxeter_part(g, representative);
  if (!report.checks.is_finite_coxeter_part)
    throw std::invalid_argument("verify_main_theorem: " + g.to_text(representative) + " has no finite Coxeter part");

  DescentClosure closure = descent_closure(g, representative, options);
  if (!closure.complete)
    throw BudgetExceeded("descent closure of " + g.to_text(representative) + " exceeded the node budget of " +
                         std::to_string(options.node_budget));
  report.closure_size = closure.reachable.size();
  report.minimal_length = closure.minimal_length;
  report.minimal_set = closure.minimal;
  report.edge_log = std::move(closure.edge_log);

  const NodeSet j = g.support(report.minimal_set.front(), tau);
  report.j_found = j;
  report.checks.support_constant_on_minimal = std::all_of(
      report.minimal_set.begin(), report.minimal_set.end(), [&](const AffineElement& m) { return g.support(m, tau) == j; });
  report.checks.j_proper = j != g.affine_nodes();
  const Permutation pi = g.node_action(tau);
  report.checks.j_tau_stable = true;
  for (int i : j.to_vector()) report.checks.j_tau_stable &= j.contains(pi[static_cast<std::size_t>(i)]);
  if (report.checks.j_proper && report.checks.j_tau_stable) {
    const auto coxeters = parabolic_coxeter_elements(g, j, tau);
    report.parabolic_coxeter_count = coxeters.size();
    report.checks.minimal_equals_parabolic_coxeters = coxeters == report.minimal_set;
  }
  return report;
}

}  // namespace affcox
