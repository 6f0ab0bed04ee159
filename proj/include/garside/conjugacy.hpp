#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "element.hpp"
#include "structure.hpp"

namespace garside {

enum class SummitKind { Super, Ultra };

// A summit set together with, for every member h, a conjugator u with
// h == u^{-1} * base * u.  Members are kept sorted by canonical text.
struct SummitSet {
  SummitKind kind = SummitKind::Super;
  Element base;
  std::vector<Element> members;
  std::vector<Element> conjugators;

  long long inf_s() const { return members.front().inf(); }
  long long sup_s() const { return members.front().sup(); }

  std::optional<Element> conjugator_for(const Element& h) const {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] == h) return conjugators[i];
    return std::nullopt;
  }

  std::vector<std::string> fingerprint() const {
    std::vector<std::string> fp;
    fp.reserve(members.size());
    for (const Element& m : members) fp.push_back(to_text(m));
    return fp;  // members are sorted already
  }
};

namespace detail {

struct OrbitResult {
  Element element;
  Element conjugator;
};

// Iterate one of the two orbit maps from h, keeping the accumulated
// conjugator, until either the tracked invariant improves (restart) or the
// trajectory revisits an element.  The revisited element lies on a cycle of
// the map, which is exactly the stabilization certificate: a d-periodic
// element has minimal sup and a c-periodic one maximal inf.
template <typename Step, typename Better>
OrbitResult orbit_stabilize(const Element& start, const Element& start_conj, Step step,
                            Better better) {
  Element h = start;
  Element u = start_conj;
  std::unordered_set<Element, ElementHash> seen;
  seen.insert(h);
  while (true) {
    const auto [h2, v] = step(h);
    const Element u2 = multiply(u, v);
    if (better(h2, h)) {
      h = h2;
      u = u2;
      seen.clear();
      seen.insert(h);
      continue;
    }
    if (seen.count(h2)) return {h2, u2};
    seen.insert(h2);
    h = h2;
    u = u2;
  }
}

}  // namespace detail

// A member h of the requested summit set of a and a conjugator u with
// h == u^{-1} a u.  Decycling first drives sup down to its stable value,
// then cycling drives inf up; the final element is cycling-periodic, so it
// lies in the ultra summit set as well.
inline std::pair<Element, Element> summit_representative(const Element& a,
                                                         SummitKind kind = SummitKind::Super) {
  (void)kind;  // the construction lands in the ultra summit set either way
  const auto down = detail::orbit_stabilize(
      a, Element::identity(a.structure()), [](const Element& h) { return decycling(h); },
      [](const Element& hn, const Element& ho) { return hn.sup() < ho.sup(); });
  const auto up = detail::orbit_stabilize(
      down.element, down.conjugator, [](const Element& h) { return cycling(h); },
      [](const Element& hn, const Element& ho) { return hn.inf() > ho.inf(); });
  return {up.element, up.conjugator};
}

// True iff the cycling orbit of h returns to h.  h must lie in its super
// summit set.
inline bool uss_membership(const Element& h) {
  const auto [rep, u] = summit_representative(h, SummitKind::Super);
  if (rep.inf() != h.inf() || rep.sup() != h.sup())
    throw std::domain_error("uss_membership requires a super summit element");
  std::unordered_set<Element, ElementHash> seen{h};
  Element cur = cycling(h).first;
  while (!seen.count(cur)) {
    seen.insert(cur);
    cur = cycling(cur).first;
  }
  return cur == h;
}

namespace detail {

inline bool cycling_periodic(const Element& h) {
  std::unordered_set<Element, ElementHash> seen{h};
  Element cur = cycling(h).first;
  while (!seen.count(cur)) {
    seen.insert(cur);
    cur = cycling(cur).first;
  }
  return cur == h;
}

}  // namespace detail

// The full summit set of a, as the closure of a representative under
// conjugation by all simples, keeping exactly the conjugates with the
// summit (inf, sup) (and cycling-periodicity for the ultra kind).
// Conjugators are composed along the search tree; ties between candidate
// conjugators for the same new member go to the smallest canonical text,
// so the result does not depend on expansion order.
inline SummitSet summit_set(const Element& a, SummitKind kind = SummitKind::Super,
                            std::uint64_t cap = Caps{}.summit_members) {
  const StructurePtr st = a.structure();
  auto [rep, rep_u] = summit_representative(a, kind);
  const long long target_inf = rep.inf();
  const long long target_sup = rep.sup();

  std::unordered_map<Element, Element, ElementHash> members;  // member -> conjugator
  members.emplace(rep, rep_u);
  if (members.size() > cap) throw ResourceError("summit set exceeded the member cap");
  std::vector<Element> frontier{rep};

  std::vector<Element> simple_cache, simple_inverse_cache;
  simple_cache.reserve(st->simple_count());
  for (std::uint64_t s = 0; s < st->simple_count(); ++s) {
    simple_cache.push_back(simple_element(st, static_cast<Simple>(s)));
    simple_inverse_cache.push_back(invert(simple_cache.back()));
  }

  while (!frontier.empty()) {
    // candidate -> best conjugator, merged per level for determinism
    std::unordered_map<Element, Element, ElementHash> level;
    for (const Element& h : frontier) {
      const Element& hu = members.at(h);
      for (std::uint64_t s = 0; s < st->simple_count(); ++s) {
        if (static_cast<Simple>(s) == st->one()) continue;
        const Element hn =
            multiply(multiply(simple_inverse_cache[s], h), simple_cache[s]);
        if (hn.inf() != target_inf || hn.sup() != target_sup) continue;
        if (members.count(hn)) continue;
        if (kind == SummitKind::Ultra && !detail::cycling_periodic(hn)) continue;
        const Element cand_u = multiply(hu, simple_cache[s]);
        auto it = level.find(hn);
        if (it == level.end())
          level.emplace(hn, cand_u);
        else if (to_text(cand_u) < to_text(it->second))
          it->second = cand_u;
      }
    }
    frontier.clear();
    for (auto& [h, u] : level) {
      members.emplace(h, u);
      frontier.push_back(h);
      if (members.size() > cap) throw ResourceError("summit set exceeded the member cap");
    }
  }

  SummitSet out;
  out.kind = kind;
  out.base = a;
  std::vector<std::pair<std::string, const Element*>> order;
  order.reserve(members.size());
  for (const auto& [m, u] : members) order.emplace_back(to_text(m), &m);
  std::sort(order.begin(), order.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [text, m] : order) {
    out.members.push_back(*m);
    out.conjugators.push_back(members.at(*m));
  }
  return out;
}

// Either an explicit conjugator (u^{-1} a u == b, verified exactly) or a
// disjointness witness: the two distinct summit fingerprints.
struct ConjugacyCertificate {
  std::optional<Element> conjugator;
  std::vector<std::string> fingerprint_a;
  std::vector<std::string> fingerprint_b;

  bool conjugate() const { return conjugator.has_value(); }
};

inline ConjugacyCertificate are_conjugate(const Element& a, const Element& b,
                                          std::uint64_t cap = Caps{}.summit_members) {
  require_same_structure(a, b);
  const auto [rep_b, u_b] = summit_representative(b, SummitKind::Super);
  const SummitSet set_a = summit_set(a, SummitKind::Super, cap);

  if (rep_b.inf() == set_a.inf_s() && rep_b.sup() == set_a.sup_s()) {
    if (auto u_a = set_a.conjugator_for(rep_b)) {
      // rep_b = u_a^{-1} a u_a and rep_b = u_b^{-1} b u_b.
      const Element u = multiply(*u_a, invert(u_b));
      if (conjugate(a, u) != b) throw std::logic_error("conjugator verification failed");
      ConjugacyCertificate cert;
      cert.conjugator = u;
      return cert;
    }
  }

  const SummitSet set_b = summit_set(b, SummitKind::Super, cap);
  ConjugacyCertificate cert;
  cert.fingerprint_a = set_a.fingerprint();
  cert.fingerprint_b = set_b.fingerprint();
  if (cert.fingerprint_a == cert.fingerprint_b)
    throw std::logic_error("summit sets agree but no conjugator was found");
  return cert;
}

}  // namespace garside
