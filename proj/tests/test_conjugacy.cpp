#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "affcox/case_tables.hpp"
#include "affcox/classification.hpp"
#include "affcox/conjugacy.hpp"
#include "oracles.hpp"

using namespace affcox;

namespace {

struct Witness {
  AffineElement x;
  AffineElement tau;
};

// Table witnesses for every delta-power and every tau.
std::vector<Witness> witnesses(const AffineWeylGroup& g) {
  std::vector<Witness> out;
  for (const CaseEntry& e : table_entries(g)) out.push_back({entry_element(g, e), entry_tau(g, e)});
  return out;
}

AffineElement random_wa(const AffineWeylGroup& g, std::mt19937_64& rng, int max_len) {
  return oracle::random_word_element(g, rng, max_len, false);
}

const std::tuple<char, int, const char*> kSmall[] = {
    {'A', 2, "id"}, {'A', 3, "id"}, {'B', 3, "id"}, {'C', 3, "id"}, {'D', 4, "id"},
    {'A', 3, "flip"}, {'D', 4, "flip"}, {'D', 4, "triality"}, {'G', 2, "id"}, {'A', 4, "flip"}};

}  // namespace

TEST_CASE("descent edges are sound") {
  for (const auto& [l, n, tw] : kSmall) {
    const AffineWeylGroup g(l, n, tw);
    std::mt19937_64 rng(59);
    for (const auto& w : witnesses(g)) {
      const AffineElement start = g.conjugate(random_wa(g, rng, 6), w.x);
      const DescentClosure c = descent_closure(g, start, {.node_budget = 100000, .record_edges = true});
      REQUIRE(c.complete);
      REQUIRE(c.edge_log.has_value());
      std::set<AffineElement> reach(c.reachable.begin(), c.reachable.end());
      CHECK(reach.count(start) == 1);
      for (const auto& e : *c.edge_log) {
        CHECK(e.to == g.simple_reflection(e.node) * e.from * g.simple_reflection(e.node));
        CHECK(g.length(e.to) <= g.length(e.from));
        CHECK(reach.count(e.to) == 1);
      }
      for (const auto& m : c.minimal) CHECK(g.length(m) == c.minimal_length);
      for (const auto& y : c.reachable) CHECK(g.length(y) >= c.minimal_length);
    }
  }
}

TEST_CASE("closures stay in one class") {
  for (const auto& [l, n, tw] : kSmall) {
    const AffineWeylGroup g(l, n, tw);
    for (const auto& w : witnesses(g)) {
      const DescentClosure c = descent_closure(g, w.x);
      const int k = w.x.delta_pow();
      const Vec kappa = kottwitz(g, w.x, k);
      for (const auto& y : c.reachable) {
        CHECK(kottwitz(g, y, k) == kappa);
        CHECK(g.finite().is_conjugate(g.eta(y), g.eta(w.x)));
        CHECK(g.length_zero_part(y) == w.tau);
      }
    }
  }
}

TEST_CASE("minimal strata are strongly connected and start-independent") {
  std::mt19937_64 rng(61);
  for (const auto& [l, n, tw] : kSmall) {
    CAPTURE(l);
    CAPTURE(n);
    CAPTURE(tw);
    const AffineWeylGroup g(l, n, tw);
    for (const auto& w : witnesses(g)) {
      const DescentClosure base = descent_closure(g, w.x);
      for (const auto& m : base.minimal) {
        const DescentClosure from_m = descent_closure(g, m);
        CHECK(from_m.minimal == base.minimal);
        CHECK(std::includes(from_m.reachable.begin(), from_m.reachable.end(), base.minimal.begin(), base.minimal.end()));
      }
      for (int t = 0; t < 20; ++t) {
        const AffineElement y = g.conjugate(random_wa(g, rng, 6), w.x);
        CHECK(descent_closure(g, y).minimal == base.minimal);
      }
      const NodeSet j = g.support(base.minimal.front(), w.tau);
      for (const auto& m : base.minimal) CHECK(g.support(m, w.tau) == j);
    }
  }
}

TEST_CASE("descent minima agree with brute-force conjugation balls") {
  for (auto [l, n, tw, radius] : {std::tuple{'A', 2, "id", 6}, std::tuple{'C', 2, "id", 6}, std::tuple{'A', 3, "flip", 5}, std::tuple{'G', 2, "id", 6}}) {
    CAPTURE(l);
    CAPTURE(n);
    const AffineWeylGroup g(l, n, tw);
    const auto ball = oracle::wa_ball(g, radius);
    for (const auto& w : witnesses(g)) {
      std::set<AffineElement> orbit;
      for (const auto& [u, d] : ball) orbit.insert(g.conjugate(u, w.x));
      int best = 1 << 30;
      for (const auto& y : orbit) best = std::min(best, g.length(y));
      std::set<AffineElement> brute;
      for (const auto& y : orbit)
        if (g.length(y) == best) brute.insert(y);
      const DescentClosure c = descent_closure(g, w.x);
      CHECK(best == c.minimal_length);
      CHECK(brute == std::set<AffineElement>(c.minimal.begin(), c.minimal.end()));
    }
  }
}

TEST_CASE("minimal elements are parabolic Coxeter elements, from witnesses and random conjugates") {
  std::mt19937_64 rng(67);
  for (const auto& [l, n, tw] : kSmall) {
    CAPTURE(l);
    CAPTURE(n);
    CAPTURE(tw);
    const AffineWeylGroup g(l, n, tw);
    for (const auto& w : witnesses(g)) {
      const ClassReport r = verify_main_theorem(g, w.x, w.tau);
      CHECK(r.checks.all());
      CHECK(r.parabolic_coxeter_count == r.minimal_set.size());
      const ClassReport r2 = verify_main_theorem(g, g.conjugate(random_wa(g, rng, 6), w.x), w.tau);
      CHECK(r2.minimal_set == r.minimal_set);
      CHECK(r2.j_found == r.j_found);
    }
  }
}

TEST_CASE("finite Coxeter part detection") {
  const AffineWeylGroup g('A', 2);
  CHECK(has_finite_coxeter_part(g, g.from_word(std::vector<int>{1, 2})));
  CHECK(has_finite_coxeter_part(g, g.from_word(std::vector<int>{0, 1})));
  CHECK_FALSE(has_finite_coxeter_part(g, g.identity()));
  CHECK_FALSE(has_finite_coxeter_part(g, g.simple_reflection(1)));
  CHECK_FALSE(has_finite_coxeter_part(g, g.from_word(std::vector<int>{0, 1, 2})));
}

TEST_CASE("parabolic Coxeter elements") {
  const AffineWeylGroup g('A', 2);
  const auto e = g.identity();
  const auto cs = parabolic_coxeter_elements(g, NodeSet{1, 2}, e);
  CHECK(cs.size() == 2);
  CHECK(std::find(cs.begin(), cs.end(), g.from_word(std::vector<int>{1, 2})) != cs.end());
  CHECK(std::find(cs.begin(), cs.end(), g.from_word(std::vector<int>{2, 1})) != cs.end());
  CHECK(parabolic_coxeter_elements(g, NodeSet{}, e) == std::vector<AffineElement>{e});
  CHECK_THROWS_AS(parabolic_coxeter_elements(g, NodeSet{0, 1, 2}, e), std::invalid_argument);
  const auto t1 = g.tau(1);
  CHECK_THROWS_AS(parabolic_coxeter_elements(g, NodeSet{1}, t1), std::invalid_argument);
  CHECK_THROWS_AS(parabolic_coxeter_elements(g, NodeSet{1}, g.simple_reflection(1)), std::invalid_argument);
  // Twisted: one reflection per orbit of {1, 3} under the flip.
  const AffineWeylGroup f('A', 3, "flip");
  const auto d = f.delta_power(1);
  const auto fcs = parabolic_coxeter_elements(f, NodeSet{1, 3}, d);
  CHECK(fcs.size() == 2);
  for (const auto& c : fcs) CHECK(f.length(c) == 1);
}

TEST_CASE("verify_main_theorem rejects bad input") {
  const AffineWeylGroup g('A', 2);
  const auto e = g.identity();
  CHECK_THROWS_AS(verify_main_theorem(g, g.from_word(std::vector<int>{1, 2}), g.simple_reflection(1)), std::invalid_argument);
  CHECK_THROWS_AS(verify_main_theorem(g, g.from_word(std::vector<int>{1, 2}), g.tau(1)), std::invalid_argument);
  CHECK_THROWS_AS(verify_main_theorem(g, g.simple_reflection(1), e), std::invalid_argument);
  const AffineElement far = g.conjugate(g.from_word(std::vector<int>{0, 1, 2, 0, 1, 2, 0}), g.from_word(std::vector<int>{1, 2}));
  CHECK_THROWS_AS(verify_main_theorem(g, far, e, {.node_budget = 2}), BudgetExceeded);
  const DescentClosure partial = descent_closure(g, far, {.node_budget = 2});
  CHECK_FALSE(partial.complete);
}

TEST_CASE("Omega translates and lookup") {
  const AffineWeylGroup g('D', 4);
  const auto x = witnesses(g).back().x;
  for (const auto& om : g.omega_prime()) {
    const auto y = omega_translate_class(g, x, om.element);
    CHECK(y == om.element * x * g.inverse(om.element));
    CHECK(g.length(y) == g.length(x));
    const auto found = find_omega(g, om.element);
    REQUIRE(found.has_value());
    CHECK(found->minuscule == om.minuscule);
  }
  CHECK_FALSE(find_omega(g, g.simple_reflection(0)).has_value());
}

TEST_CASE("node budget from the environment") {
  ::setenv("AFFCOX_NODE_BUDGET", "1234", 1);
  CHECK(default_node_budget() == 1234);
  ::setenv("AFFCOX_NODE_BUDGET", "garbage", 1);
  CHECK(default_node_budget() == 1000000);
  ::unsetenv("AFFCOX_NODE_BUDGET");
  CHECK(default_node_budget() == 1000000);
}
