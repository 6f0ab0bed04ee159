#pragma once

#include <map>
#include <string>
#include <vector>

#include "element.hpp"
#include "structure.hpp"

namespace garside {

namespace detail {

// All positive left (or right) divisors of a positive element, by climbing
// atom by atom; the divisor set is downward closed, so the climb reaches
// everything.
inline std::vector<Element> positive_divisors(const Element& a, bool left) {
  const StructurePtr st = a.structure();
  std::map<std::string, Element> seen;
  std::vector<Element> frontier{Element::identity(st)};
  seen.emplace(to_text(frontier.front()), frontier.front());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& d : frontier)
      for (Simple atom : st->atoms()) {
        const Element cand = left ? multiply(d, simple_element(st, atom))
                                  : multiply(simple_element(st, atom), d);
        const bool divides = left ? multiply(invert(cand), a).is_positive()
                                  : multiply(a, invert(cand)).is_positive();
        if (!divides) continue;
        if (seen.emplace(to_text(cand), cand).second) next.push_back(cand);
      }
    frontier = std::move(next);
  }
  std::vector<Element> out;
  out.reserve(seen.size());
  for (auto& [_, e] : seen) out.push_back(e);
  return out;
}

}  // namespace detail

// Smallest set of positive elements containing the seeds and closed under
// the four lattice operations, the two complements a^{-1}(a v_L b) and
// (a v_R b)a^{-1}, and passage to divisors on either side.  Termination is
// guaranteed when the seed is the atom set; the cap guards everything else.
inline std::vector<Element> lc_closure(const StructurePtr& st, const std::vector<Element>& seeds,
                                       std::uint64_t cap = Caps{}.lc_closure_elements) {
  std::map<std::string, Element> members;
  std::vector<Element> todo;
  auto add = [&](const Element& e) {
    if (!e.is_positive()) throw std::logic_error("lc_closure produced a non-positive element");
    if (members.emplace(to_text(e), e).second) {
      todo.push_back(e);
      if (members.size() > cap) throw ResourceError("lc_closure exceeded the element cap");
    }
  };
  const Element id = Element::identity(st);
  for (const Element& s : seeds) {
    require_same_structure(s, id);
    if (!s.is_positive()) throw std::invalid_argument("lc_closure seeds must be positive");
    add(s);
  }

  while (!todo.empty()) {
    const Element x = todo.back();
    todo.pop_back();
    for (const Element& d : detail::positive_divisors(x, /*left=*/true)) add(d);
    for (const Element& d : detail::positive_divisors(x, /*left=*/false)) add(d);
    const std::vector<Element> snapshot = [&] {
      std::vector<Element> v;
      v.reserve(members.size());
      for (auto& [_, e] : members) v.push_back(e);
      return v;
    }();
    for (const Element& y : snapshot) {
      add(meet_l(x, y));
      add(meet_r(x, y));
      const Element jl = join_l(x, y);
      const Element jr = join_r(x, y);
      add(jl);
      add(jr);
      add(multiply(invert(x), jl));  // right complement of x in y
      add(multiply(jr, invert(x)));  // left complement of x in y
      add(multiply(invert(y), jl));
      add(multiply(jr, invert(y)));
    }
  }

  std::vector<Element> out;
  out.reserve(members.size());
  for (auto& [_, e] : members) out.push_back(e);
  return out;
}

// The right lcm of the LC-closure of the atoms: the smallest Garside
// element of the monoid.  It divides the configured Delta on both sides.
inline Element minimal_garside(const StructurePtr& st,
                               std::uint64_t cap = Caps{}.lc_closure_elements) {
  std::vector<Element> seeds;
  for (Simple a : st->atoms()) seeds.push_back(simple_element(st, a));
  Element lcm = Element::identity(st);
  for (const Element& e : lc_closure(st, seeds, cap)) lcm = join_r(lcm, e);
  return lcm;
}

}  // namespace garside
