#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "element.hpp"
#include "semidirect.hpp"

namespace garside {

// G(n) = Z |x G^n where the generator d of Z cycles the coordinates:
// (g_1,...,g_n)^d = (g_n, g_1, ..., g_{n-1}).  Its Garside element is
// d(Delta,...,Delta) and the simples are d^eps(s_1,...,s_n) with eps in
// {0,1} and each s_i a simple of the base group.
class GnStructure final : public SemidirectStructure {
public:
  GnStructure(StructurePtr base, std::shared_ptr<const PowerStructure> pow,
              ActionSpec action, std::uint32_t copies)
      : SemidirectStructure(cyclic_structure(), pow, std::move(action),
                            "gn:" + base->key() + ":" + std::to_string(copies)),
        base_(std::move(base)), pow_(std::move(pow)), n_(copies) {}

  const StructurePtr& base() const { return base_; }
  const std::shared_ptr<const PowerStructure>& cartesian() const { return pow_; }
  std::uint32_t copies() const { return n_; }

  // d^eps(s_1,...,s_n) prints as d^eps[name_1|...|name_n].
  std::string simple_name(Simple s) const override {
    const auto [eps, body] = unpair(s);
    std::string out = "d^" + std::to_string(eps) + "[";
    const auto d = pow_->digits(body);
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (i) out += "|";
      out += base_->simple_name(d[i]);
    }
    return out + "]";
  }

  Simple gn_token(Simple eps, const std::vector<Simple>& comps) const {
    return pair_token(eps, pow_->from_digits(comps));
  }

private:
  StructurePtr base_;
  std::shared_ptr<const PowerStructure> pow_;
  std::uint32_t n_;
};

using GnPtr = std::shared_ptr<const GnStructure>;

inline GnPtr gn_structure(StructurePtr base, std::uint32_t copies, const Caps& caps = {}) {
  if (copies < 1) throw std::invalid_argument("G(n) needs n >= 1");
  auto pow = power_structure(base, copies, caps);

  // Rotating (g_1,...,g_n) right by k is the action of d^k.
  auto rotate = [pow, copies](long long k, Simple body) {
    long long shift = k % static_cast<long long>(copies);
    if (shift < 0) shift += copies;
    if (shift == 0) return body;
    auto d = pow->digits(body);
    std::vector<Simple> out(copies);
    for (std::uint32_t i = 0; i < copies; ++i)
      out[(i + shift) % copies] = d[i];
    return pow->from_digits(out);
  };

  ActionSpec action;
  action.act = [rotate](Simple g, Simple h) { return g == 1 ? rotate(1, h) : h; };
  action.act_inv = [rotate](Simple g, Simple h) { return g == 1 ? rotate(-1, h) : h; };
  action.act_delta_pow = rotate;

  auto z = cyclic_structure();
  validate_action(*z, *pow, action);
  return std::make_shared<GnStructure>(std::move(base), std::move(pow), std::move(action),
                                       copies);
}

// delta^k(g_1,...,g_n) from the Z exponent and the coordinates.
inline Element gn_make(const GnPtr& st, long long k, const std::vector<Element>& components) {
  if (components.size() != st->copies())
    throw std::invalid_argument("G(n) element needs exactly n components");
  const Simple delta_token = st->pair_token(1, st->cartesian()->one());
  Word w;
  for (long long i = 0; i < (k >= 0 ? k : -k); ++i) w.push_back({delta_token, k >= 0 ? 1 : -1});
  for (std::uint32_t slot = 0; slot < st->copies(); ++slot) {
    const Element& c = components[slot];
    require_same_structure(c, Element::identity(st->base()));
    for (const auto& [s, sign] : to_word(c))
      w.push_back({st->pair_token(0, st->cartesian()->embed(slot, s)), sign});
  }
  return normalize(std::static_pointer_cast<const GarsideStructure>(st), w);
}

// Inverse of gn_make: the Z exponent and the coordinates of an element.
inline std::pair<long long, std::vector<Element>> gn_parts(const Element& a) {
  const auto st = std::dynamic_pointer_cast<const GnStructure>(a.structure());
  if (!st) throw std::invalid_argument("gn_parts needs an element of a G(n) structure");
  const std::uint32_t n = st->copies();
  const StructurePtr base = st->base();

  // Delta^r = d^r(Delta_b^r,...,Delta_b^r), then fold in the factors with
  // the product rule (k, c)(eps, t) = (k + eps, rot^eps(c) * t).
  long long k = a.inf();
  std::vector<Element> comps(n, delta_power(base, a.inf()));
  for (Simple f : a.factors()) {
    const auto [eps, body] = st->unpair(f);
    if (eps == 1) {
      std::rotate(comps.rbegin(), comps.rbegin() + 1, comps.rend());
      ++k;
    }
    const auto d = st->cartesian()->digits(body);
    for (std::uint32_t i = 0; i < n; ++i)
      comps[i] = multiply(comps[i], simple_element(base, d[i]));
  }
  return {k, std::move(comps)};
}

}  // namespace garside
