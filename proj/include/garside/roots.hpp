#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "conjugacy.hpp"
#include "element.hpp"
#include "gn.hpp"

namespace garside {

// Outcome of an n-th root extraction.  A successful result carries the
// root x (with x^n == g verified exactly), the diagonal ultra summit
// witness d(h,...,h) over G(n) and the conjugator gamma with
// d(g,1,...,1) == gamma^{-1} * diagonal * gamma.
struct RootResult {
  std::optional<Element> root;
  std::optional<Element> diagonal;
  std::optional<Element> conjugator;
  std::uint64_t uss_size = 0;

  bool has_root() const { return root.has_value(); }
};

// Root extraction through conjugacy in G(n): g has an n-th root iff the
// ultra summit set of d(g,1,...,1) contains a diagonal element
// d(h,...,h); from any conjugator gamma = d^k(x_1,...,x_n) between them,
// x = x_n^{-1} h x_n satisfies x^n = g.
inline RootResult nth_root(const Element& g, long long n, const Caps& caps = {}) {
  if (n < 2) throw std::invalid_argument("nth_root needs n >= 2");
  const GnPtr gn = gn_structure(g.structure(), static_cast<std::uint32_t>(n), caps);

  std::vector<Element> comps(static_cast<std::size_t>(n), Element::identity(g.structure()));
  comps[0] = g;
  const Element alpha = gn_make(gn, 1, comps);

  const SummitSet uss = summit_set(alpha, SummitKind::Ultra, caps.summit_members);

  RootResult result;
  result.uss_size = uss.members.size();
  for (std::size_t i = 0; i < uss.members.size(); ++i) {
    const auto [k, parts] = gn_parts(uss.members[i]);
    bool diagonal = true;
    for (const Element& p : parts) diagonal &= (p == parts.front());
    if (!diagonal) continue;

    // member == c^{-1} alpha c, so alpha == gamma^{-1} member gamma with
    // gamma = c^{-1}.
    const Element gamma = invert(uss.conjugators[i]);
    const auto [gk, xs] = gn_parts(gamma);
    const Element x = conjugate(parts.front(), xs.back());
    if (power(x, n) != g)
      throw std::logic_error("root verification failed: conjugator bookkeeping is broken");
    result.root = x;
    result.diagonal = uss.members[i];
    result.conjugator = gamma;
    return result;
  }
  return result;
}

// Degrees 2..n_max for which g has a root.  When g is conjugate to a Delta
// power, degrees dividing the exponent are recognized directly from the
// summit representative before any G(n) search.
inline std::vector<long long> root_degrees(const Element& g, long long n_max,
                                           const Caps& caps = {}) {
  if (n_max < 2) throw std::invalid_argument("root_degrees needs n_max >= 2");
  std::vector<long long> found;
  const auto [rep, u] = summit_representative(g, SummitKind::Super);
  const bool delta_power_class = rep.factors().empty();
  for (long long n = 2; n <= n_max; ++n) {
    if (delta_power_class && rep.inf() % n == 0) {
      found.push_back(n);  // u Delta^{m/n} u^{-1} is an n-th root
      continue;
    }
    if (nth_root(g, n, caps).has_root()) found.push_back(n);
  }
  return found;
}

}  // namespace garside
