#include <catch2/catch.hpp>

#include <random>

#include "support.hpp"

using namespace garside;
using testing_support::atom;
using testing_support::random_positive;
using testing_support::random_word_element;

TEST_CASE("bfs word length") {
  auto b3 = braid_structure(3);
  REQUIRE(oracle::bfs_word_length(Element::identity(b3), 0) == 0);
  REQUIRE(oracle::bfs_word_length(delta_power(b3, 2), 3) == 2);
  REQUIRE(oracle::bfs_word_length(multiply(invert(atom(b3, 0)), atom(b3, 1)), 4) == 2);
  REQUIRE_FALSE(oracle::bfs_word_length(delta_power(b3, 5), 2).has_value());
}

TEST_CASE("bfs agrees with the geodesic formula") {
  auto b3 = braid_structure(3);
  SECTION("exhaustive over B3 elements with |inf|, sup <= 3") {
    std::vector<Simple> proper;
    for (std::uint64_t s = 0; s < b3->simple_count(); ++s)
      if (static_cast<Simple>(s) != b3->one() && static_cast<Simple>(s) != b3->delta())
        proper.push_back(static_cast<Simple>(s));
    std::vector<std::vector<Simple>> seqs{{}};
    std::vector<std::vector<Simple>> frontier{{}};
    for (int len = 1; len <= 6; ++len) {
      std::vector<std::vector<Simple>> next;
      for (const auto& seq : frontier)
        for (Simple s : proper) {
          if (!seq.empty() && !b3->left_weighted_pair(seq.back(), s)) continue;
          auto longer = seq;
          longer.push_back(s);
          next.push_back(longer);
        }
      seqs.insert(seqs.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    int checked = 0;
    for (const auto& seq : seqs)
      for (long long r = -3; r + static_cast<long long>(seq.size()) <= 3; ++r) {
        const Element g = Element::make(b3, r, seq);
        if (g.inf() != r || g.inf() < -3) continue;  // delta absorbed, duplicate
        const long long formula = geodesic_length(g);
        REQUIRE(oracle::bfs_word_length(g, formula) == formula);
        if (formula > 0) REQUIRE_FALSE(oracle::bfs_word_length(g, formula - 1).has_value());
        ++checked;
      }
    REQUIRE(checked == 487);  // 253 left-weighted sequences over the proper simples
  }
  SECTION("random B4 elements") {
    auto b4 = braid_structure(4);
    std::mt19937 rng(3);
    int done = 0;
    while (done < 12) {
      const Element g = random_word_element(b4, rng, 3);
      if (geodesic_length(g) > 3) continue;
      REQUIRE(oracle::bfs_word_length(g, 3) == geodesic_length(g));
      ++done;
    }
  }
}

TEST_CASE("brute left divisors") {
  auto b3 = braid_structure(3);
  const Element a = atom(b3, 0);

  SECTION("Delta has the six simples as divisors") {
    const auto divs = oracle::brute_left_divisors(delta_power(b3, 1));
    REQUIRE(divs.size() == 6);
  }
  SECTION("identity divides only itself") {
    const auto divs = oracle::brute_left_divisors(Element::identity(b3));
    REQUIRE(divs.size() == 1);
  }
  SECTION("a*a has the chain of divisors") {
    const auto divs = oracle::brute_left_divisors(multiply(a, a));
    REQUIRE(divs.size() == 3);  // 1, a, a^2
  }
  SECTION("norm guard") {
    REQUIRE_THROWS_AS(oracle::brute_left_divisors(delta_power(b3, 4)), std::domain_error);
    REQUIRE_THROWS_AS(oracle::brute_left_divisors(invert(a)), std::domain_error);
  }
  SECTION("agrees with meet_l derived divisibility") {
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
      const Element x = random_positive(b3, rng, 2);
      if (atom_norm(x) > 6) continue;
      for (const Element& d : oracle::brute_left_divisors(x)) REQUIRE(meet_l(d, x) == d);
    }
  }
}

TEST_CASE("brute conjugacy") {
  auto b3 = braid_structure(3);
  const Element a = atom(b3, 0);
  const Element b = atom(b3, 1);

  const auto w = oracle::brute_conjugacy(a, b, 3);
  REQUIRE(w.has_value());
  REQUIRE(conjugate(a, *w) == b);

  REQUIRE(oracle::brute_conjugacy(a, a, 0).has_value());
  REQUIRE_FALSE(oracle::brute_conjugacy(a, multiply(a, b), 6).has_value());
  REQUIRE_THROWS_AS(oracle::brute_conjugacy(a, b, 7), std::invalid_argument);
}
