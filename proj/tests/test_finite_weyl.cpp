#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "affcox/finite_weyl.hpp"
#include "oracles.hpp"

using namespace affcox;

namespace {

FiniteWeylGroup make(char l, int n, std::string_view twist = "id") {
  return FiniteWeylGroup(std::make_shared<const RootSystem>(RootSystem::build(l, n)), twist);
}

FiniteWeylElement random_element(const FiniteWeylGroup& w0, std::mt19937_64& rng, int max_len, bool with_delta) {
  std::vector<int> word;
  const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
  for (int i = 0; i < len; ++i) word.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(w0.rank())));
  const int k = with_delta ? static_cast<int>(rng() % static_cast<std::uint64_t>(w0.delta_order())) : 0;
  return w0.from_word(word, k);
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

}  // namespace

TEST_CASE("group orders match the enumerated groups") {
  struct Case {
    char l;
    int n;
    std::size_t order;
  };
  const Case cases[] = {{'A', 1, 2},  {'A', 2, 6},  {'A', 3, 24},  {'A', 4, 120}, {'B', 2, 8},
                        {'B', 3, 48}, {'C', 3, 48}, {'B', 4, 384}, {'D', 4, 192}, {'G', 2, 12},
                        {'F', 4, 1152}};
  for (const auto& c : cases) {
    CAPTURE(c.l);
    CAPTURE(c.n);
    CHECK(oracle::finite_group(make(c.l, c.n)).size() == c.order);
  }
  CHECK(factorial(5) == oracle::finite_group(make('A', 4)).size());
}

TEST_CASE("length equals geodesic word length; reduced words are reduced") {
  for (auto [l, n] : {std::pair{'A', 3}, std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'G', 2}, std::pair{'D', 4}}) {
    CAPTURE(l);
    CAPTURE(n);
    const auto w0 = make(l, n);
    for (const auto& [w, d] : oracle::finite_group_lengths(w0)) {
      CHECK(w0.length(w) == d);
      const auto word = w0.reduced_word(w);
      CHECK(static_cast<int>(word.size()) == d);
      CHECK(w0.from_word(word) == w);
      for (int i = 1; i <= n; ++i) CHECK(w0.is_left_descent(i, w) == (w0.length(w0.simple_reflection(i) * w) < d));
    }
  }
}

TEST_CASE("group axioms on random triples") {
  std::mt19937_64 rng(21);
  for (auto [l, n, tw] : {std::tuple{'A', 5, "flip"}, std::tuple{'D', 4, "triality"}, std::tuple{'E', 6, "flip"},
                          std::tuple{'B', 4, "id"}, std::tuple{'E', 8, "id"}}) {
    const auto w0 = make(l, n, tw);
    for (int t = 0; t < 1000; ++t) {
      const auto a = random_element(w0, rng, 12, true);
      const auto b = random_element(w0, rng, 12, true);
      const auto c = random_element(w0, rng, 12, true);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * w0.inverse(a) == w0.identity());
      CHECK(w0.inverse(a) * a == w0.identity());
      CHECK(a * w0.identity() == a);
      CHECK((a * b).delta_pow() == (a.delta_pow() + b.delta_pow()) % w0.delta_order());
    }
  }
}

TEST_CASE("delta permutes the simple reflections") {
  for (auto [l, n, tw] : {std::tuple{'A', 4, "flip"}, std::tuple{'D', 4, "triality"}, std::tuple{'D', 5, "flip"}, std::tuple{'E', 6, "flip"}}) {
    const auto w0 = make(l, n, tw);
    const auto d = w0.delta_power(1);
    const Permutation p = w0.delta_permutation(1);
    for (int i = 1; i <= n; ++i) CHECK(d * w0.simple_reflection(i) * w0.inverse(d) == w0.simple_reflection(p[static_cast<std::size_t>(i)]));
    FiniteWeylElement acc = w0.identity();
    for (int k = 0; k < w0.delta_order(); ++k) acc = acc * d;
    CHECK(acc == w0.identity());
  }
}

TEST_CASE("longest parabolic elements") {
  const auto w0 = make('D', 5);
  for (std::uint32_t bits = 0; bits < (1u << 5); ++bits) {
    const NodeSet j = NodeSet::from_bits(bits << 1);
    const auto w = w0.longest_element(j);
    CHECK(w * w == w0.identity());
    CHECK(w0.support(w) == j);
    // Conjugation by w_0^J permutes the reflections s_j, j in J.
    std::set<FiniteWeylElement> images, gens;
    for (int i : j.to_vector()) {
      images.insert(w * w0.simple_reflection(i) * w);
      gens.insert(w0.simple_reflection(i));
      CHECK(w0.length(w0.simple_reflection(i) * w) < w0.length(w));
    }
    CHECK(images == gens);
  }
  CHECK(w0.length(w0.longest_element(NodeSet::finite_nodes(5))) == 20);
}

TEST_CASE("Coxeter elements in one coset are conjugate") {
  for (auto [l, n, tw] : {std::tuple{'A', 3, "id"}, std::tuple{'A', 3, "flip"}, std::tuple{'B', 3, "id"}, std::tuple{'D', 4, "triality"},
                          std::tuple{'D', 4, "flip"}, std::tuple{'G', 2, "id"}}) {
    CAPTURE(l);
    CAPTURE(n);
    CAPTURE(tw);
    const auto w0 = make(l, n, tw);
    const auto group = oracle::finite_group(w0);
    for (int k = 0; k < w0.delta_order(); ++k) {
      const auto coxeters = w0.coxeter_elements(NodeSet::finite_nodes(n), k);
      REQUIRE_FALSE(coxeters.empty());
      const auto cls = oracle::finite_class(w0, group, coxeters.front());
      for (const auto& c : coxeters) {
        CHECK(cls.count(c) == 1);
        CHECK(w0.is_coxeter_element(c));
        CHECK(w0.is_conjugate(c, coxeters.front()));
      }
      CHECK(cls.count(w0.standard_coxeter_element(k)) == 1);
    }
  }
}

TEST_CASE("is_conjugate agrees with brute-force classes") {
  std::mt19937_64 rng(23);
  for (auto [l, n, tw] : {std::tuple{'A', 3, "flip"}, std::tuple{'B', 3, "id"}, std::tuple{'D', 4, "triality"}}) {
    const auto w0 = make(l, n, tw);
    const auto group = oracle::finite_group(w0);
    for (int t = 0; t < 60; ++t) {
      const auto a = random_element(w0, rng, 10, true);
      const auto b = random_element(w0, rng, 10, true);
      const auto cls = oracle::finite_class(w0, group, a);
      CHECK(w0.is_conjugate(a, b) == (cls.count(b) == 1));
      const auto& g = group[rng() % group.size()];
      CHECK(w0.is_conjugate(a, g * a * w0.inverse(g)));
    }
  }
}

TEST_CASE("Coxeter numbers") {
  struct Case {
    char l;
    int n;
    const char* twist;
    int k;
    std::uint64_t order;
  };
  const Case cases[] = {{'A', 5, "id", 0, 6},  {'B', 4, "id", 0, 8},     {'C', 5, "id", 0, 10},   {'D', 6, "id", 0, 10},
                        {'E', 6, "id", 0, 12}, {'E', 7, "id", 0, 18},    {'E', 8, "id", 0, 30},   {'F', 4, "id", 0, 12},
                        {'G', 2, "id", 0, 6},  {'D', 5, "flip", 1, 10},  {'D', 4, "triality", 1, 12}, {'E', 6, "flip", 1, 18}};
  for (const auto& c : cases) {
    CAPTURE(c.l);
    CAPTURE(c.n);
    const auto w0 = make(c.l, c.n, c.twist);
    CHECK(w0.order_of(w0.standard_coxeter_element(c.k)) == c.order);
  }
}

TEST_CASE("text round trip and validation") {
  const auto w0 = make('D', 4, "triality");
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(w0, rng, 10, true);
    CHECK(w0.parse(w0.to_text(a)) == a);
    CHECK(w0.from_matrix(a.matrix(), a.delta_pow()) == a);
  }
  CHECK(w0.to_text(w0.identity()) == "d^0");
  CHECK(w0.parse("e") == w0.identity());
  CHECK_THROWS_AS(w0.parse("s5"), std::invalid_argument);
  CHECK_THROWS_AS(w0.parse("s1 x2"), std::invalid_argument);
  CHECK_THROWS_AS(w0.from_matrix(IntMatrix::identity(4) - IntMatrix::identity(4), 0), std::invalid_argument);
  IntMatrix m = IntMatrix::identity(4);
  m(0, 1) = 1;
  CHECK_THROWS_AS(w0.from_matrix(m, 0), std::invalid_argument);
  const auto other = make('A', 4);
  CHECK_THROWS_AS(w0.multiply(w0.identity(), other.identity()), std::invalid_argument);
}
