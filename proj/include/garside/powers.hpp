#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "conjugacy.hpp"
#include "element.hpp"
#include "rational.hpp"

namespace garside {

// Extremal normal-form exponents over a conjugacy class.
struct StableInvariants {
  long long inf_s = 0;
  long long sup_s = 0;
  long long len_s = 0;
};

inline StableInvariants stable_invariants(const Element& a) {
  const auto [rep, u] = summit_representative(a, SummitKind::Super);
  return {rep.inf(), rep.sup(), rep.sup() - rep.inf()};
}

// Recover the stable invariants of g from those of g^n:
// inf_s(g) = floor(inf_s(g^n)/n), sup_s(g) = ceil(sup_s(g^n)/n).
inline StableInvariants stable_from_power(long long n, const StableInvariants& power) {
  if (n < 1) throw std::invalid_argument("stable_from_power needs n >= 1");
  const long long lo = floor_div(power.inf_s, n);
  const long long hi = ceil_div(power.sup_s, n);
  return {lo, hi, hi - lo};
}

// Certified rational interval (lower, upper] around the translation number
// t_D(a) with respect to the simples and their inverses, obtained from a
// super summit representative h of a^N:  (|h|_D - 2)/N < t_D(a) <= |h|_D/N.
struct TranslationBounds {
  Rational lower;
  Rational upper;
  long long witness_power = 1;
};

inline TranslationBounds translation_bounds(const Element& a, long long witness_power) {
  if (witness_power < 1) throw std::invalid_argument("translation_bounds needs N >= 1");
  const auto [rep, u] = summit_representative(power(a, witness_power), SummitKind::Super);
  const long long len = geodesic_length(rep);
  return {Rational(len - 2, witness_power), Rational(len, witness_power), witness_power};
}

enum class TranslationComparison { AtMost, Greater, Undecided };

inline const char* to_string(TranslationComparison c) {
  switch (c) {
    case TranslationComparison::AtMost: return "at_most";
    case TranslationComparison::Greater: return "greater";
    default: return "undecided";
  }
}

// Doubles the witness power until the certified interval separates from r
// or the power budget runs out.  Boundary cases stay undecided rather than
// guessed: "greater" means r is excluded by the open lower end.
inline TranslationComparison compare_translation(const Element& a, const Rational& r,
                                                 long long n_max) {
  if (n_max < 1) throw std::invalid_argument("compare_translation needs N_max >= 1");
  for (long long n = 1; n <= n_max; n *= 2) {
    const TranslationBounds b = translation_bounds(a, n);
    if (b.upper <= r) return TranslationComparison::AtMost;
    if (b.lower >= r) return TranslationComparison::Greater;
  }
  return TranslationComparison::Undecided;
}

struct ConjugacyClassBelow {
  Element representative;  // super summit member with least canonical text
  TranslationComparison status = TranslationComparison::Undecided;
};

namespace detail {

// All normal forms with geodesic length at most the bound: bounded factor
// alphabet, bounded length, bounded delta exponent.
inline std::vector<Element> enumerate_by_geodesic_length(const StructurePtr& st,
                                                         long long bound,
                                                         std::uint64_t cap) {
  std::vector<Simple> proper;
  for (std::uint64_t s = 0; s < st->simple_count(); ++s) {
    const Simple tok = static_cast<Simple>(s);
    if (tok != st->one() && tok != st->delta()) proper.push_back(tok);
  }

  // Left-weighted factor sequences of each length, grown one factor at a
  // time through the locally checkable adjacency condition.
  std::vector<std::vector<std::vector<Simple>>> by_len(static_cast<std::size_t>(bound) + 1);
  by_len[0].push_back({});
  std::uint64_t produced = 1;
  for (long long k = 1; k <= bound; ++k) {
    for (const auto& seq : by_len[k - 1])
      for (Simple next : proper) {
        if (!seq.empty() && !st->left_weighted_pair(seq.back(), next)) continue;
        auto longer = seq;
        longer.push_back(next);
        by_len[k].push_back(std::move(longer));
        if (++produced > cap)
          throw ResourceError("class enumeration exceeded the element cap");
      }
  }

  std::vector<Element> out;
  std::map<std::string, bool> seen;
  auto emit = [&](long long r, const std::vector<Simple>& f) {
    Element e = Element::make(st, r, f);
    if (seen.emplace(to_text(e), true).second) {
      out.push_back(std::move(e));
      if (out.size() > cap) throw ResourceError("class enumeration exceeded the element cap");
    }
  };
  for (long long k = 0; k <= bound; ++k)
    for (const auto& seq : by_len[k]) {
      // inf >= 0: |g| = sup = r + k <= bound
      for (long long r = 0; r + k <= bound; ++r) emit(r, seq);
      // sup <= 0: |g| = -r <= bound and r + k <= 0
      for (long long r = -bound; r + k <= 0; ++r) emit(r, seq);
      // inf < 0 < sup: |g| = k <= bound
      for (long long r = -k + 1; r <= -1; ++r) emit(r, seq);
    }
  return out;
}

}  // namespace detail

// All conjugacy classes with certified translation number at most r, plus
// the classes the power budget could not decide, each with its status.
// Classes certified greater than r are dropped.
inline std::vector<ConjugacyClassBelow> classes_below(const StructurePtr& st, const Rational& r,
                                                      long long n_max, const Caps& caps = {}) {
  std::vector<ConjugacyClassBelow> out;
  if (r < Rational(0)) return out;

  const long long bound = (r + Rational(2)).floor();
  const auto elements = detail::enumerate_by_geodesic_length(st, bound, caps.class_enumeration);

  std::map<std::string, Element> classes;  // summit fingerprint -> representative
  for (const Element& g : elements) {
    const SummitSet set = summit_set(g, SummitKind::Super, caps.summit_members);
    std::string fp;
    for (const auto& line : set.fingerprint()) {
      fp += line;
      fp += ';';
    }
    classes.emplace(fp, set.members.front());
  }

  for (auto& [fp, rep] : classes) {
    const TranslationComparison status = compare_translation(rep, r, n_max);
    if (status == TranslationComparison::Greater) continue;
    out.push_back({rep, status});
  }
  std::sort(out.begin(), out.end(), [](const ConjugacyClassBelow& x, const ConjugacyClassBelow& y) {
    return to_text(x.representative) < to_text(y.representative);
  });
  return out;
}

}  // namespace garside
