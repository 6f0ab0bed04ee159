#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "element.hpp"
#include "structure.hpp"

// Deliberately naive validators, independent of the lattice machinery they
// cross-check: everything here is built from normalize/multiply/invert
// alone.
namespace garside::oracle {

// Exact shortest word length of a over the simples and their inverses, by
// breadth-first search outward from the identity; nullopt when the length
// exceeds the radius.
inline std::optional<long long> bfs_word_length(const Element& a, long long radius) {
  if (radius < 0) throw std::invalid_argument("bfs radius must be nonnegative");
  const StructurePtr st = a.structure();
  const Element id = Element::identity(st);
  if (a == id) return 0;

  std::vector<Element> alphabet;
  for (std::uint64_t s = 0; s < st->simple_count(); ++s) {
    if (static_cast<Simple>(s) == st->one()) continue;
    alphabet.push_back(simple_element(st, static_cast<Simple>(s)));
    alphabet.push_back(invert(alphabet.back()));
  }

  std::unordered_set<Element, ElementHash> seen{id};
  std::vector<Element> frontier{id};
  for (long long depth = 1; depth <= radius; ++depth) {
    std::vector<Element> next;
    for (const Element& g : frontier)
      for (const Element& letter : alphabet) {
        Element h = multiply(g, letter);
        if (h == a) return depth;
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// All positive left divisors of a positive element of atom norm at most 8,
// by exhaustively growing atom products and testing positivity of the
// quotient.
inline std::vector<Element> brute_left_divisors(const Element& a) {
  if (!a.is_positive()) throw std::domain_error("brute_left_divisors needs a positive element");
  if (atom_norm(a) > 8) throw std::domain_error("brute_left_divisors norm cap is 8");
  const StructurePtr st = a.structure();

  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> out;
  std::vector<Element> frontier{Element::identity(st)};
  seen.insert(frontier.front());
  out.push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& d : frontier)
      for (Simple atom : st->atoms()) {
        Element cand = multiply(d, simple_element(st, atom));
        if (!multiply(invert(cand), a).is_positive()) continue;
        if (seen.insert(cand).second) {
          out.push_back(cand);
          next.push_back(std::move(cand));
        }
      }
    frontier = std::move(next);
  }
  return out;
}

// One-sided conjugacy test: searches positive atom words u of length at
// most word_len for u^{-1} a u == b.  Returns the witness when found;
// nullopt means "unknown", not "no".
inline std::optional<Element> brute_conjugacy(const Element& a, const Element& b, int word_len) {
  if (word_len > 6) throw std::invalid_argument("brute_conjugacy word length cap is 6");
  require_same_structure(a, b);
  const StructurePtr st = a.structure();

  std::vector<Element> frontier{Element::identity(st)};
  if (a == b) return frontier.front();
  for (int len = 1; len <= word_len; ++len) {
    std::vector<Element> next;
    for (const Element& u : frontier)
      for (Simple atom : st->atoms()) {
        Element cand = multiply(u, simple_element(st, atom));
        if (conjugate(a, cand) == b) return cand;
        next.push_back(std::move(cand));
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace garside::oracle
