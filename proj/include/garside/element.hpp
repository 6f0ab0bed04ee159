#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "structure.hpp"

namespace garside {

struct SignedLetter {
  Simple simple;
  int sign;  // +1 or -1
};
using Word = std::vector<SignedLetter>;

namespace detail {

// Left-weighting sweep.  Local rewrites move weight toward the front, so
// delta factors accumulate as a prefix and identity factors as a suffix;
// both are stripped afterwards (the prefix into the infimum).
inline void left_weight(const GarsideStructure& st, long long& r, std::vector<Simple>& f) {
  const Simple one = st.one();
  const Simple delta = st.delta();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const auto [x, y] = st.simple_product(f[i], f[i + 1]);
      if (x != f[i]) {
        f[i] = x;
        f[i + 1] = y;
        changed = true;
      }
    }
  }
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == delta) ++lead;
  std::size_t tail = f.size();
  while (tail > lead && f[tail - 1] == one) --tail;
  r += static_cast<long long>(lead);
  f = std::vector<Simple>(f.begin() + lead, f.begin() + tail);
}

// Dual sweep used by the right-gcd: weight moves toward the back.  Only
// called on factor lists of elements with inf == 0, so no delta factor can
// form and no identity factor can survive.
inline void right_weight(const GarsideStructure& st, std::vector<Simple>& f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const auto [x, y] = st.simple_product_right(f[i], f[i + 1]);
      if (y != f[i + 1]) {
        f[i] = x;
        f[i + 1] = y;
        changed = true;
      }
    }
  }
}

}  // namespace detail

// A group element in left-weighted normal form Delta^r s_1 ... s_k over a
// fixed structure.  Factors never contain 1 or Delta; two elements over
// structures with equal keys are equal iff (r, factors) agree.  Immutable.
class Element {
public:
  Element() = default;

  static Element identity(StructurePtr st) { return Element(std::move(st), 0, {}); }

  // Normalizes arbitrary factors (which may include 1 and Delta).
  static Element make(StructurePtr st, long long r, std::vector<Simple> factors) {
    const std::uint64_t count = st->simple_count();
    for (Simple s : factors)
      if (s >= count) throw std::invalid_argument("unknown simple token in factor list");
    detail::left_weight(*st, r, factors);
    return Element(std::move(st), r, std::move(factors));
  }

  const StructurePtr& structure() const { return st_; }
  long long inf() const { return r_; }
  long long sup() const { return r_ + static_cast<long long>(factors_.size()); }
  long long canonical_length() const { return static_cast<long long>(factors_.size()); }
  const std::vector<Simple>& factors() const { return factors_; }
  bool is_identity() const { return r_ == 0 && factors_.empty(); }
  bool is_positive() const { return r_ >= 0; }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.r_ != b.r_ || a.factors_ != b.factors_) return false;
    if (a.st_ == b.st_) return true;
    if (!a.st_ || !b.st_) return false;
    return a.st_->key() == b.st_->key();
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
  Element(StructurePtr st, long long r, std::vector<Simple> factors)
      : st_(std::move(st)), r_(r), factors_(std::move(factors)) {}

  StructurePtr st_;
  long long r_ = 0;
  std::vector<Simple> factors_;
};

struct ElementHash {
  std::size_t operator()(const Element& a) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(a.inf()));
    for (Simple s : a.factors()) mix(s);
    return static_cast<std::size_t>(h);
  }
};

inline void require_same_structure(const Element& a, const Element& b) {
  if (a.structure() == b.structure()) return;
  if (a.structure() && b.structure() && a.structure()->key() == b.structure()->key()) return;
  throw std::invalid_argument("elements belong to different structures");
}

inline Element delta_power(StructurePtr st, long long k) {
  return Element::make(std::move(st), k, {});
}

inline Element simple_element(StructurePtr st, Simple s) {
  return Element::make(std::move(st), 0, {s});
}

// Normal form of a word of signed simples.
inline Element normalize(const StructurePtr& st, const Word& word) {
  const auto& s = *st;
  const std::uint64_t count = s.simple_count();
  long long r = 0;
  std::vector<Simple> f;
  f.reserve(word.size());
  auto twist_inv = [&] {
    for (auto& x : f) x = s.tau_inverse_simple(x);
  };
  for (const auto& [tok, sign] : word) {
    if (tok >= count) throw std::invalid_argument("unknown simple token in word");
    if (sign >= 0) {
      if (tok == s.delta()) {
        ++r;
        for (auto& x : f) x = s.tau_simple(x);
      } else if (tok != s.one()) {
        f.push_back(tok);
      }
    } else {
      // s^{-1} == Delta^{-1} * left_complement(s)
      --r;
      twist_inv();
      const Simple c = s.left_complement(tok);
      if (c != s.one()) f.push_back(c);
    }
  }
  return Element::make(st, r, std::move(f));
}

inline Word to_word(const Element& a) {
  Word w;
  const long long r = a.inf();
  const Simple delta = a.structure()->delta();
  for (long long i = 0; i < (r >= 0 ? r : -r); ++i) w.push_back({delta, r >= 0 ? 1 : -1});
  for (Simple s : a.factors()) w.push_back({s, 1});
  return w;
}

inline Element tau_iter(const Element& a, long long m) {
  const auto& st = *a.structure();
  std::vector<Simple> f = a.factors();
  for (auto& s : f) s = st.tau_power(s, m);
  return Element::make(a.structure(), a.inf(), std::move(f));
}

inline Element multiply(const Element& a, const Element& b) {
  require_same_structure(a, b);
  const auto& st = *a.structure();
  long long r = a.inf() + b.inf();
  std::vector<Simple> f = a.factors();
  for (auto& s : f) s = st.tau_power(s, b.inf());
  if (f.empty()) {
    // Delta^r * (factors of b) is already left-weighted.
    return Element::make(a.structure(), r, b.factors());
  }
  if (b.factors().empty()) {
    return Element::make(a.structure(), r, std::move(f));
  }
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return Element::make(a.structure(), r, std::move(f));
}

inline Element invert(const Element& a) {
  Word w;
  for (auto it = a.factors().rbegin(); it != a.factors().rend(); ++it) w.push_back({*it, -1});
  const Simple delta = a.structure()->delta();
  const long long r = a.inf();
  for (long long i = 0; i < (r >= 0 ? r : -r); ++i) w.push_back({delta, r >= 0 ? -1 : 1});
  return normalize(a.structure(), w);
}

inline Element power(const Element& a, long long n) {
  if (n < 0) return power(invert(a), -n);
  Element acc = Element::identity(a.structure());
  Element base = a;
  while (n > 0) {
    if (n & 1) acc = multiply(acc, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return acc;
}

// u^{-1} a u
inline Element conjugate(const Element& a, const Element& u) {
  return multiply(multiply(invert(u), a), u);
}

namespace detail {

inline Simple first_simple(const Element& a) {
  // Largest simple prefix a ^_L Delta of a positive element.
  if (a.inf() > 0) return a.structure()->delta();
  if (a.factors().empty()) return a.structure()->one();
  return a.factors().front();
}

inline Simple last_simple(const Element& a) {
  // Largest simple suffix a ^_R Delta of a positive element.
  const auto& st = *a.structure();
  if (a.inf() > 0) return st.delta();
  if (a.factors().empty()) return st.one();
  std::vector<Simple> f = a.factors();
  right_weight(st, f);
  return f.back();
}

// gcd of two positive elements with respect to left division: repeatedly
// strip the meet of the largest simple prefixes.
inline Element positive_meet_l(Element a, Element b) {
  const StructurePtr st = a.structure();
  std::vector<Simple> acc;
  while (true) {
    const Simple x = st->meet_l(first_simple(a), first_simple(b));
    if (x == st->one()) break;
    const Element xi = invert(simple_element(st, x));
    a = multiply(xi, a);
    b = multiply(xi, b);
    acc.push_back(x);
  }
  return Element::make(st, 0, std::move(acc));
}

inline Element positive_meet_r(Element a, Element b) {
  const StructurePtr st = a.structure();
  std::vector<Simple> acc;  // built back to front
  while (true) {
    const Simple x = st->meet_r(last_simple(a), last_simple(b));
    if (x == st->one()) break;
    const Element xi = invert(simple_element(st, x));
    a = multiply(a, xi);
    b = multiply(b, xi);
    acc.push_back(x);
  }
  std::vector<Simple> f(acc.rbegin(), acc.rend());
  return Element::make(st, 0, std::move(f));
}

}  // namespace detail

// Lattice operations extended to the group: shift both arguments into the
// positive cone by a delta power, compute there, shift back.
inline Element meet_l(const Element& a, const Element& b) {
  require_same_structure(a, b);
  const long long m = std::min(a.inf(), b.inf());
  const Element shift = delta_power(a.structure(), -m);
  const Element d = detail::positive_meet_l(multiply(shift, a), multiply(shift, b));
  return multiply(delta_power(a.structure(), m), d);
}

inline Element meet_r(const Element& a, const Element& b) {
  require_same_structure(a, b);
  const long long m = std::min(a.inf(), b.inf());
  const Element shift = delta_power(a.structure(), -m);
  const Element d = detail::positive_meet_r(multiply(a, shift), multiply(b, shift));
  return multiply(d, delta_power(a.structure(), m));
}

inline Element join_l(const Element& a, const Element& b) {
  require_same_structure(a, b);
  // x <=_L y iff y^{-1}Delta^M <=_R x^{-1}Delta^M for Delta^M above both, so
  // the left join is the image of a right meet under that reversal.
  const long long m = std::max(a.sup(), b.sup());
  const Element dm = delta_power(a.structure(), m);
  const Element z = meet_r(multiply(invert(a), dm), multiply(invert(b), dm));
  return multiply(dm, invert(z));
}

inline Element join_r(const Element& a, const Element& b) {
  require_same_structure(a, b);
  const long long m = std::max(a.sup(), b.sup());
  const Element dm = delta_power(a.structure(), m);
  const Element z = meet_l(multiply(dm, invert(a)), multiply(dm, invert(b)));
  return multiply(invert(z), dm);
}

inline bool left_divides(const Element& a, const Element& b) {
  return multiply(invert(a), b).is_positive();
}

inline bool right_divides(const Element& a, const Element& b) {
  return multiply(b, invert(a)).is_positive();
}

// Cycling c(g) = Delta^r s_2...s_k tau^{-r}(s_1) together with the
// conjugator u satisfying c(g) == u^{-1} g u.  Length-zero elements are
// fixed with identity conjugator.
inline std::pair<Element, Element> cycling(const Element& a) {
  if (a.factors().empty()) return {a, Element::identity(a.structure())};
  const auto& st = *a.structure();
  const Simple moved = st.tau_power(a.factors().front(), -a.inf());
  std::vector<Simple> f(a.factors().begin() + 1, a.factors().end());
  f.push_back(moved);
  return {Element::make(a.structure(), a.inf(), std::move(f)),
          simple_element(a.structure(), moved)};
}

// Decycling d(g) = Delta^r tau^r(s_k) s_1...s_{k-1}, conjugator s_k^{-1}.
inline std::pair<Element, Element> decycling(const Element& a) {
  if (a.factors().empty()) return {a, Element::identity(a.structure())};
  const auto& st = *a.structure();
  const Simple last = a.factors().back();
  std::vector<Simple> f;
  f.reserve(a.factors().size());
  f.push_back(st.tau_power(last, a.inf()));
  f.insert(f.end(), a.factors().begin(), a.factors().end() - 1);
  return {Element::make(a.structure(), a.inf(), std::move(f)),
          invert(simple_element(a.structure(), last))};
}

// Shortest word length over the simples and their inverses, in closed form:
// sup if inf >= 0, -inf if sup <= 0, len otherwise.
inline long long geodesic_length(const Element& a) {
  if (a.inf() >= 0) return a.sup();
  if (a.sup() <= 0) return -a.inf();
  return a.canonical_length();
}

inline std::uint64_t atom_norm(const Element& a) {
  if (a.inf() < 0) throw std::domain_error("atom_norm requires a positive element");
  const auto& st = *a.structure();
  std::uint64_t total = static_cast<std::uint64_t>(a.inf()) * st.simple_atom_norm(st.delta());
  for (Simple s : a.factors()) total += st.simple_atom_norm(s);
  return total;
}

inline std::string to_text(const Element& a) {
  std::string out = "D^" + std::to_string(a.inf());
  if (a.factors().empty()) {
    out += " .";
    return out;
  }
  for (Simple s : a.factors()) {
    out += " . ";
    out += a.structure()->simple_name(s);
  }
  return out;
}

}  // namespace garside
