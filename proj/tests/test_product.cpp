#include <catch2/catch.hpp>

#include <random>

#include "support.hpp"

using namespace garside;
using testing_support::atom;
using testing_support::check_structure_invariants;
using testing_support::random_word_element;

namespace {

std::shared_ptr<const SemidirectStructure> b3_times_b3() {
  static auto st = semidirect_structure(braid_structure(3), braid_structure(3), trivial_action());
  return st;
}

}  // namespace

TEST_CASE("semidirect product with trivial action: B3 x B3") {
  auto st = b3_times_b3();
  REQUIRE(st->simple_count() == 36);
  REQUIRE(st->atoms().size() == 4);
  REQUIRE(st->central_power() == 2);

  auto b3 = st->acting();
  const Element g = atom(b3, 0);
  const Element h = multiply(atom(b3, 1), atom(b3, 0));

  SECTION("identity and Delta") {
    REQUIRE(make_pair_element(st, Element::identity(b3), Element::identity(b3)) ==
            Element::identity(st));
    REQUIRE(make_pair_element(st, delta_power(b3, 1), delta_power(b3, 1)) == delta_power(st, 1));
  }
  SECTION("pair round trip") {
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
      const Element x = random_word_element(b3, rng, 5);
      const Element y = random_word_element(b3, rng, 5);
      const auto [px, py] = pair_parts(st, make_pair_element(st, x, y));
      REQUIRE(px == x);
      REQUIRE(py == y);
    }
  }
  SECTION("product law (a1,b1)(a2,b2) = (a1a2, b1^{a2} b2)") {
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
      const Element a1 = random_word_element(b3, rng, 4);
      const Element b1 = random_word_element(b3, rng, 4);
      const Element a2 = random_word_element(b3, rng, 4);
      const Element b2 = random_word_element(b3, rng, 4);
      const Element lhs = multiply(make_pair_element(st, a1, b1), make_pair_element(st, a2, b2));
      const Element rhs =
          make_pair_element(st, multiply(a1, a2), multiply(action_on(st, b1, a2), b2));
      REQUIRE(lhs == rhs);
    }
  }
  SECTION("meet_r on simples is componentwise") {
    // ((a,1) ^_R (a,b)) == (a, 1)
    const Simple a_tok = b3->atoms()[0];
    const Simple b_tok = b3->atoms()[1];
    const Simple lhs = st->meet_r(st->pair_token(a_tok, b3->one()), st->pair_token(a_tok, b_tok));
    REQUIRE(lhs == st->pair_token(a_tok, b3->one()));
  }
  SECTION("structure invariant suite") {
    std::mt19937 rng(7);
    check_structure_invariants(std::static_pointer_cast<const GarsideStructure>(st), rng, 100);
  }
  SECTION("simple meets match the exhaustive route") {
    for (std::uint64_t i = 0; i < st->simple_count(); ++i)
      for (std::uint64_t j = 0; j < st->simple_count(); ++j)
        REQUIRE(st->meet_l(static_cast<Simple>(i), static_cast<Simple>(j)) ==
                testing_support::brute_simple_meet_l(st, static_cast<Simple>(i),
                                                     static_cast<Simple>(j)));
  }
  SECTION("divisibility criteria on random positive pairs") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
      const Element a1 = testing_support::random_positive(b3, rng, 2);
      const Element b1 = testing_support::random_positive(b3, rng, 2);
      const Element a2 = testing_support::random_positive(b3, rng, 3);
      const Element b2 = testing_support::random_positive(b3, rng, 3);
      const Element p = make_pair_element(st, a1, b1);
      const Element q = make_pair_element(st, a2, b2);
      // trivial action: componentwise on both sides
      REQUIRE(left_divides(p, q) == (left_divides(a1, a2) && left_divides(b1, b2)));
      REQUIRE(right_divides(p, q) == (right_divides(a1, a2) && right_divides(b1, b2)));
    }
  }
  SECTION("inverse and tau formulas") {
    std::mt19937 rng(13);
    for (int i = 0; i < 30; ++i) {
      const Element x = random_word_element(b3, rng, 4);
      const Element y = random_word_element(b3, rng, 4);
      const Element p = make_pair_element(st, x, y);
      REQUIRE(invert(p) == make_pair_element(st, invert(x), invert(y)));
      REQUIRE(tau_iter(p, 1) == make_pair_element(st, tau_iter(x, 1), tau_iter(y, 1)));
      REQUIRE(p.inf() == std::min(x.inf(), y.inf()));
      REQUIRE(p.sup() == std::max(x.sup(), y.sup()));
    }
  }
  SECTION("Delta powers are componentwise") {
    for (long long k = -4; k <= 4; ++k) {
      const auto [x, y] = pair_parts(st, delta_power(st, k));
      REQUIRE(x == delta_power(b3, k));
      REQUIRE(y == delta_power(b3, k));
    }
  }
}

TEST_CASE("action validation rejects bad specs") {
  auto b3 = braid_structure(3);
  SECTION("non-automorphism") {
    ActionSpec broken = trivial_action();
    broken.act = [st = b3](Simple, Simple h) {  // swap two simples arbitrarily
      if (h == st->atoms()[0]) return st->atoms()[1];
      return h;
    };
    REQUIRE_THROWS_AS(semidirect_structure(b3, b3, broken), std::invalid_argument);
  }
  SECTION("missing maps") {
    ActionSpec empty;
    REQUIRE_THROWS_AS(semidirect_structure(b3, b3, empty), std::invalid_argument);
  }
}

TEST_CASE("G(n) structure over B3") {
  auto b3 = braid_structure(3);
  auto gn = gn_structure(b3, 2);
  const Element a = atom(b3, 0);
  const Element b = atom(b3, 1);
  const Element id_b = Element::identity(b3);

  REQUIRE(gn->simple_count() == 72);
  REQUIRE(gn->key() == "gn:braid:3:2");
  REQUIRE(gn->central_power() == 2);

  SECTION("make/parts round trip") {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
      std::uniform_int_distribution<long long> kd(-3, 3);
      const long long k = kd(rng);
      const std::vector<Element> comps{random_word_element(b3, rng, 4),
                                       random_word_element(b3, rng, 4)};
      const auto [k2, comps2] = gn_parts(gn_make(gn, k, comps));
      REQUIRE(k2 == k);
      REQUIRE(comps2 == comps);
    }
  }
  SECTION("identity, Delta, and Delta powers") {
    REQUIRE(gn_make(gn, 0, {id_b, id_b}) == Element::identity(gn));
    REQUIRE(gn_make(gn, 1, {delta_power(b3, 1), delta_power(b3, 1)}) == delta_power(gn, 1));
    const auto [k, comps] = gn_parts(delta_power(gn, 1));
    REQUIRE(k == 1);
    REQUIRE(comps == std::vector<Element>{delta_power(b3, 1), delta_power(b3, 1)});
    for (long long p = -4; p <= 4; ++p) {
      const auto [kp, cp] = gn_parts(delta_power(gn, p));
      REQUIRE(kp == p);
      REQUIRE(cp == std::vector<Element>(2, delta_power(b3, p)));
    }
  }
  SECTION("plain shift powers") {
    // d^2 has inf 0 and sup 2: the Z part exceeds the trivial coordinates
    const Element d2 = gn_make(gn, 2, {id_b, id_b});
    REQUIRE(d2.inf() == 0);
    REQUIRE(d2.sup() == 2);
    const auto [k, comps] = gn_parts(d2);
    REQUIRE(k == 2);
    REQUIRE(comps == std::vector<Element>{id_b, id_b});
  }
  SECTION("shifted products compose through the coordinate action") {
    std::mt19937 rng(59);
    for (int i = 0; i < 20; ++i) {
      const Element g = random_word_element(b3, rng, 4);
      const Element h = random_word_element(b3, rng, 4);
      REQUIRE(multiply(gn_make(gn, 1, {g, id_b}), gn_make(gn, 1, {h, id_b})) ==
              gn_make(gn, 2, {h, g}));
    }
  }
  SECTION("arity and structure checks") {
    REQUIRE_THROWS_AS(gn_make(gn, 0, {id_b}), std::invalid_argument);
    REQUIRE_THROWS_AS(gn_make(gn, 0, {id_b, id_b, id_b}), std::invalid_argument);
    REQUIRE_THROWS_AS(gn_make(gn, 0, {Element::identity(braid_structure(4)), id_b}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(gn_parts(Element::identity(b3)), std::invalid_argument);
  }
  SECTION("inf and sup from the components") {
    REQUIRE(gn_make(gn, 1, {a, a}).inf() == 0);
    REQUIRE(gn_make(gn, 0, {delta_power(b3, 1), id_b}).sup() == 1);
    std::mt19937 rng(19);
    for (int i = 0; i < 50; ++i) {
      std::uniform_int_distribution<long long> kd(-3, 3);
      const long long k = kd(rng);
      const Element g1 = random_word_element(b3, rng, 4);
      const Element g2 = random_word_element(b3, rng, 4);
      const Element alpha = gn_make(gn, k, {g1, g2});
      REQUIRE(alpha.inf() == std::min({k, g1.inf(), g2.inf()}));
      REQUIRE(alpha.sup() == std::max({k, g1.sup(), g2.sup()}));
    }
  }
  SECTION("inverse of a shifted element") {
    std::mt19937 rng(23);
    const Element g = random_word_element(b3, rng, 4);
    REQUIRE(invert(gn_make(gn, 1, {g, id_b})) == gn_make(gn, -1, {id_b, invert(g)}));
  }
  SECTION("tau on diagonals") {
    std::mt19937 rng(29);
    for (int i = 0; i < 30; ++i) {
      std::uniform_int_distribution<long long> kd(-3, 3);
      const long long k = kd(rng);
      const Element g = random_word_element(b3, rng, 4);
      REQUIRE(tau_iter(gn_make(gn, k, {g, g}), 1) ==
              gn_make(gn, k, {tau_iter(g, 1), tau_iter(g, 1)}));
    }
  }
  SECTION("tau on simples matches the component formula") {
    // tau((eps, b)) == (eps, tau_base(rotate(b))) since tau_Z is trivial
    for (std::uint64_t s = 0; s < gn->simple_count(); ++s) {
      const auto [eps, body] = gn->unpair(static_cast<Simple>(s));
      auto d = gn->cartesian()->digits(body);
      std::rotate(d.rbegin(), d.rbegin() + 1, d.rend());
      for (auto& x : d) x = b3->tau_simple(x);
      REQUIRE(gn->tau_simple(static_cast<Simple>(s)) ==
              gn->pair_token(eps, gn->cartesian()->from_digits(d)));
    }
  }
  SECTION("cycling and decycling of diagonals follow the case split") {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 60) {
      std::uniform_int_distribution<long long> kd(-4, 4);
      const long long k = kd(rng);
      const Element g = random_word_element(b3, rng, 5);
      if (g.canonical_length() == 0) continue;
      const Element alpha = gn_make(gn, k, {g, g});
      if (alpha.canonical_length() == 0) continue;
      const Element c = cycling(alpha).first;
      if (k >= g.inf()) {
        const Element cg = cycling(g).first;
        REQUIRE(c == gn_make(gn, k, {cg, cg}));
      } else {
        const Element tg = tau_iter(g, 1);
        REQUIRE(c == gn_make(gn, k, {tg, tg}));
      }
      const Element d = decycling(alpha).first;
      if (k <= g.sup()) {
        const Element dg = decycling(g).first;
        REQUIRE(d == gn_make(gn, k, {dg, dg}));
      } else {
        REQUIRE(d == alpha);
      }
      ++done;
    }
  }
  SECTION("structure invariant suite") {
    std::mt19937 rng(37);
    check_structure_invariants(std::static_pointer_cast<const GarsideStructure>(gn), rng, 100);
  }
  SECTION("divisibility uses the shift action") {
    // d(1,1) left-divides d(g,h) iff the shifted quotient is positive
    std::mt19937 rng(41);
    for (int i = 0; i < 40; ++i) {
      const Element g1 = testing_support::random_positive(b3, rng, 2);
      const Element g2 = testing_support::random_positive(b3, rng, 2);
      const Element p = gn_make(gn, 1, {g1, g2});
      const Element d = gn_make(gn, 1, {id_b, id_b});
      REQUIRE(left_divides(d, p));
      REQUIRE(multiply(invert(d), p) == gn_make(gn, 0, {g1, g2}));
      REQUIRE(multiply(p, invert(d)) == gn_make(gn, 0, {g2, g1}));
    }
  }
}

TEST_CASE("G(3) over B3") {
  auto b3 = braid_structure(3);
  auto gn = gn_structure(b3, 3);
  REQUIRE(gn->simple_count() == 2 * 6 * 6 * 6);
  REQUIRE(gn->central_power() == 6);  // lcm of the base power 2 and the shift order 3

  {
    std::mt19937 rng(53);
    testing_support::check_structure_invariants(
        std::static_pointer_cast<const GarsideStructure>(gn), rng, 50);
  }

  std::mt19937 rng(43);
  const Element g = random_word_element(b3, rng, 3);
  const Element h = random_word_element(b3, rng, 3);
  const Element id_b = Element::identity(b3);
  const Element alpha = gn_make(gn, 2, {g, h, id_b});
  const auto [k, comps] = gn_parts(alpha);
  REQUIRE(k == 2);
  REQUIRE(comps == std::vector<Element>{g, h, id_b});
}

TEST_CASE("G(n) over other bases") {
  SECTION("torus base") {
    auto t = torus_structure({2, 2});
    auto gn = gn_structure(t, 2);
    REQUIRE(gn->simple_count() == 2 * 4 * 4);
    REQUIRE(gn->central_power() == 2);  // Delta_t is central, the shift has order 2
    std::mt19937 rng(61);
    testing_support::check_structure_invariants(
        std::static_pointer_cast<const GarsideStructure>(gn), rng, 80);
    const Element x1 = simple_element(t, t->atoms()[0]);
    const auto [k, comps] = gn_parts(gn_make(gn, 3, {x1, invert(x1)}));
    REQUIRE(k == 3);
    REQUIRE(comps == std::vector<Element>{x1, invert(x1)});
  }
  SECTION("cyclic base") {
    auto z = cyclic_structure();
    auto gn = gn_structure(z, 3);
    REQUIRE(gn->simple_count() == 2 * 2 * 2 * 2);
    std::mt19937 rng(67);
    testing_support::check_structure_invariants(
        std::static_pointer_cast<const GarsideStructure>(gn), rng, 50);
  }
  SECTION("n = 1 is a valid degenerate case") {
    auto gn = gn_structure(braid_structure(3), 1);
    const Element a = simple_element(gn->base(), gn->base()->atoms()[0]);
    const auto [k, comps] = gn_parts(gn_make(gn, -2, {a}));
    REQUIRE(k == -2);
    REQUIRE(comps == std::vector<Element>{a});
  }
  SECTION("products compose: G(n) over G(m)") {
    auto inner = gn_structure(braid_structure(3), 2);
    const StructurePtr as_base = std::static_pointer_cast<const GarsideStructure>(inner);
    const Element target = delta_power(as_base, 2);
    const RootResult r = nth_root(target, 2);
    REQUIRE(r.has_root());
    REQUIRE(power(*r.root, 2) == target);
  }
}

TEST_CASE("braid:5 structure invariants") {
  std::mt19937 rng(71);
  testing_support::check_structure_invariants(braid_structure(5), rng, 60);
}

TEST_CASE("braid:6 structure invariants (sampled pairs)") {
  std::mt19937 rng(73);
  testing_support::check_structure_invariants(braid_structure(6), rng, 60, 4000);
}

TEST_CASE("gn:braid:3:4 synthesizes without tabulation") {
  auto b3 = braid_structure(3);
  auto gn = gn_structure(b3, 4);
  REQUIRE(gn->simple_count() == 2 * 6 * 6 * 6 * 6);
  std::mt19937 rng(79);
  testing_support::check_structure_invariants(
      std::static_pointer_cast<const GarsideStructure>(gn), rng, 40, 2000);
  const Element g = random_word_element(b3, rng, 3);
  const Element h = random_word_element(b3, rng, 3);
  const Element id_b = Element::identity(b3);
  const auto [k, comps] = gn_parts(gn_make(gn, -1, {g, id_b, h, id_b}));
  REQUIRE(k == -1);
  REQUIRE(comps == std::vector<Element>{g, id_b, h, id_b});
  // the cap rejects G(n) structures that are too large
  Caps tight;
  tight.power_simples = 100;
  REQUIRE_THROWS_AS(gn_structure(b3, 4, tight), ResourceError);
}

TEST_CASE("minimal Garside elements of products") {
  SECTION("B3 x B3") {
    auto st = b3_times_b3();
    REQUIRE(minimal_garside(std::static_pointer_cast<const GarsideStructure>(st)) ==
            delta_power(std::static_pointer_cast<const GarsideStructure>(st), 1));
  }
  SECTION("gn:braid:3:2") {
    auto gn = gn_structure(braid_structure(3), 2);
    REQUIRE(minimal_garside(std::static_pointer_cast<const GarsideStructure>(gn)) ==
            delta_power(std::static_pointer_cast<const GarsideStructure>(gn), 1));
  }
}

TEST_CASE("conjugacy transfer: merging coordinates (Lemma 5.3 direction)") {
  auto b3 = braid_structure(3);
  auto gn = gn_structure(b3, 2);
  const Element id_b = Element::identity(b3);
  std::mt19937 rng(47);
  for (long long k : {1LL, 3LL}) {  // k = 1 mod n for n = 2
    for (int i = 0; i < 20; ++i) {
      const Element g1 = random_word_element(b3, rng, 3);
      const Element g2 = random_word_element(b3, rng, 3);
      const Element alpha = gn_make(gn, k, {g1, g2});
      const Element merged = gn_make(gn, k, {multiply(g1, g2), id_b});
      // conjugating by (g2, 1) merges the two coordinates
      const Element u = gn_make(gn, 0, {g2, id_b});
      REQUIRE(conjugate(alpha, u) == merged);
      // and a diagonal conjugator transports the product coordinate
      const Element x = random_word_element(b3, rng, 3);
      const Element diag = gn_make(gn, 0, {x, x});
      REQUIRE(conjugate(merged, diag) ==
              gn_make(gn, k, {conjugate(multiply(g1, g2), x), id_b}));
    }
  }
}
