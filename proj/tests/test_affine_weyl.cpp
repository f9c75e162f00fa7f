#include <doctest.h>

#include <random>
#include <set>

#include "affcox/affine_weyl.hpp"
#include "oracles.hpp"

using namespace affcox;

TEST_CASE("length equals geodesic length on Cayley balls") {
  for (auto [l, n, r] : {std::tuple{'A', 2, 6}, std::tuple{'C', 2, 6}, std::tuple{'G', 2, 6}, std::tuple{'B', 3, 4}, std::tuple{'D', 4, 3}}) {
    CAPTURE(l);
    CAPTURE(n);
    const AffineWeylGroup g(l, n);
    for (const auto& [x, d] : oracle::wa_ball(g, r)) {
      CHECK(g.length(x) == d);
      CHECK(g.in_affine_weyl_group(x));
    }
  }
}

TEST_CASE("length ignores the twist and the length-zero factor") {
  const AffineWeylGroup g('A', 3, "flip");
  for (const auto& [x, d] : oracle::wa_ball(g, 4))
    for (const auto& om : g.omega_prime()) {
      CHECK(g.length(x * om.element) == d);
      CHECK(g.length(om.element * x) == d);
    }
}

TEST_CASE("reduced words and decompositions") {
  std::mt19937_64 rng(31);
  for (auto [l, n, tw] : {std::tuple{'A', 3, "id"}, std::tuple{'C', 3, "id"}, std::tuple{'D', 4, "triality"}, std::tuple{'E', 6, "flip"}}) {
    const AffineWeylGroup g(l, n, tw);
    for (int t = 0; t < 100; ++t) {
      const AffineElement x = oracle::random_word_element(g, rng, 12, true);
      const auto dec = g.decompose(x);
      CHECK(g.length(dec.tau) == 0);
      CHECK(g.from_word(dec.word) * dec.tau == x);
      CHECK(static_cast<int>(dec.word.size()) == g.length(x));
      CHECK(g.reduced_word(x) == dec.word);
      CHECK(g.length_zero_part(x) == dec.tau);
    }
  }
  const AffineWeylGroup a2('A', 2);
  std::mt19937_64 rng2(37);
  for (int t = 0; t < 30; ++t) {
    const AffineElement x = oracle::random_word_element(a2, rng2, 7, false);
    const auto oracle_word = oracle::reduced_word_oracle(a2, x, 7);
    REQUIRE(oracle_word.has_value());
    CHECK(static_cast<int>(oracle_word->size()) == a2.length(x));
  }
}

TEST_CASE("length-zero group: size, lengths and action on the affine nodes") {
  for (const auto& [l, n, tw] : oracle::all_groups(8)) {
    CAPTURE(l);
    CAPTURE(n);
    CAPTURE(tw);
    const AffineWeylGroup g(l, n, tw);
    const auto omega = g.omega_group();
    CHECK(static_cast<std::int64_t>(omega.size()) == g.root_system().fundamental_group_order());
    const auto omega_p = g.omega_prime();
    CHECK(omega_p.size() == omega.size() * static_cast<std::size_t>(g.delta_order()));
    std::set<AffineElement> distinct;
    for (const auto& om : omega_p) {
      distinct.insert(om.element);
      CHECK(g.length(om.element) == 0);
      if (n > 7) continue;
      const Permutation pi = g.node_action(om.element);
      std::set<int> image(pi.begin(), pi.end());
      CHECK(image.size() == static_cast<std::size_t>(n + 1));
      for (int i = 0; i <= n; ++i)
        CHECK(g.conjugate(om.element, g.simple_reflection(i)) == g.simple_reflection(pi[static_cast<std::size_t>(i)]));
    }
    CHECK(distinct.size() == omega_p.size());
    for (const auto& om : omega)
      if (om.minuscule) CHECK_FALSE(g.in_affine_weyl_group(om.element));
  }
}

TEST_CASE("group axioms on random triples") {
  std::mt19937_64 rng(41);
  for (const auto& [l, n, tw] : oracle::all_groups(8)) {
    const AffineWeylGroup g(l, n, tw);
    for (int t = 0; t < 1000; ++t) {
      const auto a = oracle::random_word_element(g, rng, 10, true);
      const auto b = oracle::random_word_element(g, rng, 10, true);
      const auto c = oracle::random_word_element(g, rng, 10, true);
      if ((a * b) * c != a * (b * c)) FAIL("associativity failed for " << g.name());
      if (a * g.inverse(a) != g.identity() || g.inverse(a) * a != g.identity()) FAIL("inverse law failed for " << g.name());
    }
  }
}

TEST_CASE("simple conjugation changes length by 0 or 2") {
  std::mt19937_64 rng(43);
  for (auto [l, n, tw] : {std::tuple{'A', 4, "flip"}, std::tuple{'B', 3, "id"}, std::tuple{'D', 4, "triality"}, std::tuple{'E', 6, "id"},
                          std::tuple{'G', 2, "id"}}) {
    const AffineWeylGroup g(l, n, tw);
    for (int t = 0; t < 2000; ++t) {
      const auto x = oracle::random_word_element(g, rng, 14, true);
      const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
      const auto y = g.simple_conjugate(i, x);
      CHECK(y == g.simple_reflection(i) * x * g.simple_reflection(i));
      const int diff = g.length(y) - g.length(x);
      CHECK((diff == -2 || diff == 0 || diff == 2));
    }
  }
}

TEST_CASE("finite part is a homomorphism compatible with conjugacy") {
  std::mt19937_64 rng(47);
  for (const auto& [l, n, tw] : oracle::all_groups(8)) {
    const AffineWeylGroup g(l, n, tw);
    for (int t = 0; t < 50; ++t) {
      const auto a = oracle::random_word_element(g, rng, 10, true);
      const auto b = oracle::random_word_element(g, rng, 10, true);
      CHECK(g.eta(a * b) == g.eta(a) * g.eta(b));
      // Conjugators from the untwisted extended group (no delta factor).
      const auto u = b * g.delta_power(-b.delta_pow());
      if (n <= 4 && t < 10) CHECK(g.finite().is_conjugate(g.eta(a), g.eta(g.conjugate(u, a))));
    }
  }
}

TEST_CASE("support") {
  const AffineWeylGroup g('A', 3);
  const AffineElement e = g.identity();
  CHECK(g.support(g.from_word(std::vector<int>{1, 2}), e) == NodeSet{1, 2});
  CHECK(g.support(g.from_word(std::vector<int>{0, 3, 0}), e) == NodeSet{0, 3});
  CHECK(g.support(e, e).empty());
  // tau_1 rotates the nodes, so any support must be closed under that rotation.
  const AffineElement t1 = g.tau(1);
  CHECK(g.support(g.from_word(std::vector<int>{1}) * t1, t1) == NodeSet::affine_nodes(3));
  CHECK_THROWS_AS(g.support(t1, e), std::invalid_argument);
  const AffineWeylGroup a3f('A', 3, "flip");
  CHECK(a3f.support(a3f.from_word(std::vector<int>{1}, 1), a3f.delta_power(1)) == NodeSet{1, 3});
}

TEST_CASE("finite order and affine Coxeter elements") {
  const AffineWeylGroup g('C', 3);
  const auto s1 = g.simple_reflection(1);
  CHECK(g.is_finite_order(s1).is_finite);
  const AffineElement cox = g.from_word(std::vector<int>{0, 1, 2, 3});
  const auto w = g.is_finite_order(cox);
  CHECK_FALSE(w.is_finite);
  CHECK(w.finite_order == g.finite().order_of(g.eta(cox)));
  CHECK(g.power(cox, w.finite_order).finite() == g.finite().identity());
  CHECK(g.power(s1, 0) == g.identity());
  CHECK(g.power(s1, 5) == s1);
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(53);
  for (auto [l, n, tw] : {std::tuple{'A', 3, "flip"}, std::tuple{'D', 4, "triality"}, std::tuple{'G', 2, "id"}}) {
    const AffineWeylGroup g(l, n, tw);
    for (int t = 0; t < 100; ++t) {
      const auto x = oracle::random_word_element(g, rng, 10, true);
      CHECK(g.parse(g.to_text(x)) == x);
    }
  }
  const AffineWeylGroup a2('A', 2);
  CHECK(a2.parse("s0") == a2.simple_reflection(0));
  CHECK(a2.parse("s0 s1") == a2.simple_reflection(0) * a2.simple_reflection(1));
  CHECK(a2.parse("e") == a2.identity());
  CHECK(a2.parse("t[1,-1] s1 d^0") == a2.translation(Vec{1, -1}) * a2.simple_reflection(1));
  CHECK_THROWS_AS(a2.parse("s3"), std::invalid_argument);
  CHECK_THROWS_AS(a2.parse("t[1] s1"), std::invalid_argument);
  CHECK_THROWS_AS(a2.parse("t[1,2"), std::invalid_argument);
  const AffineWeylGroup b2('B', 2);
  CHECK_THROWS_AS(a2.multiply(a2.identity(), b2.identity()), std::invalid_argument);
}
