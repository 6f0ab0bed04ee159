#pragma once

#include <random>
#include <string>
#include <vector>

#include "garside/garside.hpp"

namespace testing_support {

using namespace garside;

inline Element atom(const StructurePtr& st, std::size_t i) {
  return simple_element(st, st->atoms().at(i));
}

// Random signed word over the atoms of a structure.
inline Element random_word_element(const StructurePtr& st, std::mt19937& rng, int max_len,
                                   bool allow_negative = true) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> atom_dist(0, st->atoms().size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  Word w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    const int sign = allow_negative && sign_dist(rng) ? -1 : 1;
    w.push_back({st->atoms()[atom_dist(rng)], sign});
  }
  return normalize(st, w);
}

// Random positive element from a bounded product of simples.
inline Element random_positive(const StructurePtr& st, std::mt19937& rng, int max_factors) {
  std::uniform_int_distribution<int> len_dist(0, max_factors);
  std::uniform_int_distribution<std::uint64_t> simple_dist(0, st->simple_count() - 1);
  Word w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) w.push_back({static_cast<Simple>(simple_dist(rng)), 1});
  return normalize(st, w);
}

// Random element with canonical length trimmed to a bound.
inline Element random_bounded_len(const StructurePtr& st, std::mt19937& rng, int max_len) {
  Element e = random_word_element(st, rng, 2 * max_len + 2);
  if (e.canonical_length() <= max_len) return e;
  std::vector<Simple> f(e.factors().begin(), e.factors().begin() + max_len);
  return Element::make(st, e.inf(), std::move(f));
}

// Structure invariant suite: lattice axioms, complements, tau, weighted
// products -- exhaustive on all simple pairs (or sampled when pair_samples
// is nonzero), triples sampled.
inline void check_structure_invariants(const StructurePtr& st, std::mt19937& rng,
                                       int triple_samples = 200, int pair_samples = 0) {
  const std::uint64_t n = st->simple_count();
  const Simple one = st->one();
  const Simple delta = st->delta();

  REQUIRE(st->left_divides(one, delta));
  REQUIRE(st->tau_simple(one) == one);
  REQUIRE(st->tau_simple(delta) == delta);

  for (std::uint64_t i = 0; i < n; ++i) {
    const Simple s = static_cast<Simple>(i);
    // L(Delta) == R(Delta) == all simples
    REQUIRE(st->left_divides(s, delta));
    REQUIRE(st->right_divides(s, delta));
    // complements are mutually inverse bijections
    REQUIRE(*st->product_if_simple(s, st->right_complement(s)) == delta);
    REQUIRE(*st->product_if_simple(st->left_complement(s), s) == delta);
    REQUIRE(st->left_complement(st->right_complement(s)) == s);
    REQUIRE(st->right_complement(st->left_complement(s)) == s);
    // tau bijection
    REQUIRE(st->tau_inverse_simple(st->tau_simple(s)) == s);
  }

  // tau^e is the identity on simples
  const long long e = st->central_power();
  for (std::uint64_t i = 0; i < n; ++i) {
    Simple s = static_cast<Simple>(i);
    Simple t = s;
    for (long long k = 0; k < e; ++k) t = st->tau_simple(t);
    REQUIRE(t == s);
  }

  // tau permutes the atoms
  for (Simple a : st->atoms()) {
    bool found = false;
    for (Simple b : st->atoms()) found |= (st->tau_simple(a) == b);
    REQUIRE(found);
  }

  std::vector<std::pair<Simple, Simple>> pairs;
  if (pair_samples == 0) {
    pairs.reserve(n * n);
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j)
        pairs.emplace_back(static_cast<Simple>(i), static_cast<Simple>(j));
  } else {
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (int k = 0; k < pair_samples; ++k)
      pairs.emplace_back(static_cast<Simple>(pick(rng)), static_cast<Simple>(pick(rng)));
  }
  for (const auto& [a, b] : pairs) {
    const Simple ml = st->meet_l(a, b);
    const Simple jl = st->join_l(a, b);
    // commutativity and compatibility with divisibility
    REQUIRE(ml == st->meet_l(b, a));
    REQUIRE(jl == st->join_l(b, a));
    REQUIRE(st->left_divides(ml, a));
    REQUIRE(st->left_divides(ml, b));
    REQUIRE(st->left_divides(a, jl));
    REQUIRE(st->left_divides(b, jl));
    // absorption
    REQUIRE(st->meet_l(a, jl) == a);
    REQUIRE(st->join_l(a, ml) == a);
    const Simple mr = st->meet_r(a, b);
    REQUIRE(mr == st->meet_r(b, a));
    REQUIRE(st->right_divides(mr, a));
    REQUIRE(st->right_divides(mr, b));
    REQUIRE(st->right_divides(a, st->join_r(a, b)));
    // tau is a lattice automorphism
    REQUIRE(st->tau_simple(ml) == st->meet_l(st->tau_simple(a), st->tau_simple(b)));
    REQUIRE(st->tau_simple(jl) == st->join_l(st->tau_simple(a), st->tau_simple(b)));
    // weighted product invariants
    const auto [x, y] = st->simple_product(a, b);
    REQUIRE(st->left_weighted_pair(x, y));
    if (auto direct = st->product_if_simple(a, b)) {
      REQUIRE(*st->product_if_simple(x, y) == *direct);
    }
  }

  // associativity of meets on sampled triples
  std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
  for (int k = 0; k < triple_samples; ++k) {
    const Simple a = static_cast<Simple>(dist(rng));
    const Simple b = static_cast<Simple>(dist(rng));
    const Simple c = static_cast<Simple>(dist(rng));
    REQUIRE(st->meet_l(a, st->meet_l(b, c)) == st->meet_l(st->meet_l(a, b), c));
    REQUIRE(st->join_l(a, st->join_l(b, c)) == st->join_l(st->join_l(a, b), c));
    REQUIRE(st->meet_r(a, st->meet_r(b, c)) == st->meet_r(st->meet_r(a, b), c));
    REQUIRE(st->join_r(a, st->join_r(b, c)) == st->join_r(st->join_r(a, b), c));
  }
}

// Exhaustive maximum common divisor over all simples, for validating the
// lattice tables against an independent route.
inline Simple brute_simple_meet_l(const StructurePtr& st, Simple a, Simple b) {
  Simple best = st->one();
  for (std::uint64_t i = 0; i < st->simple_count(); ++i) {
    const Simple s = static_cast<Simple>(i);
    if (st->left_divides(s, a) && st->left_divides(s, b) && st->left_divides(best, s)) best = s;
  }
  return best;
}

}  // namespace testing_support
