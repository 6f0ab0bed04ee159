#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "structure.hpp"

namespace garside {

// Right action of an acting Garside group G on the simple set of an acted
// structure H, given on the level needed by the product formulas: the
// action of each simple of G, of its inverse, and of arbitrary powers of
// Delta_G.  Each assigned map must be a monoid automorphism of H^+ fixing
// Delta_H, and the assignment must respect products of simples.
struct ActionSpec {
  std::function<Simple(Simple g, Simple h)> act;                // h^g
  std::function<Simple(Simple g, Simple h)> act_inv;            // h^(g^-1)
  std::function<Simple(long long k, Simple h)> act_delta_pow;   // h^(Delta_G^k)
};

inline ActionSpec trivial_action() {
  ActionSpec a;
  a.act = [](Simple, Simple h) { return h; };
  a.act_inv = [](Simple, Simple h) { return h; };
  a.act_delta_pow = [](long long, Simple h) { return h; };
  return a;
}

// Construction-time checks of the ActionSpec invariants.  The linear-size
// checks (identity, Delta_H fixed, atoms permuted, inverses) always run;
// the quadratic automorphism checks (products and meets preserved) run only
// while the estimated work stays within a fixed budget, which covers every
// structure small enough to enumerate comfortably.
inline void validate_action(const GarsideStructure& g, const GarsideStructure& h,
                            const ActionSpec& action) {
  if (!action.act || !action.act_inv || !action.act_delta_pow)
    throw std::invalid_argument("action spec is incomplete");

  const std::uint64_t ng = g.simple_count();
  const std::uint64_t nh = h.simple_count();

  for (Simple a = 0; a < ng; ++a) {
    if (action.act(a, h.one()) != h.one())
      throw std::invalid_argument("action does not fix the identity");
    if (action.act(a, h.delta()) != h.delta())
      throw std::invalid_argument("action does not fix the Garside element of the acted group");
    for (Simple atom : h.atoms()) {
      const Simple img = action.act(a, atom);
      bool is_atom = false;
      for (Simple x : h.atoms()) is_atom |= (x == img);
      if (!is_atom) throw std::invalid_argument("action does not permute the atoms");
    }
  }
  for (Simple b = 0; b < nh; ++b) {
    if (action.act(g.one(), b) != b)
      throw std::invalid_argument("action of the identity is not trivial");
    for (Simple a : g.atoms())
      if (action.act_inv(a, action.act(a, b)) != b)
        throw std::invalid_argument("act_inv is not inverse to act");
    if (action.act_delta_pow(1, b) != action.act(g.delta(), b))
      throw std::invalid_argument("act_delta_pow(1) disagrees with act(Delta)");
    if (action.act_delta_pow(-1, action.act_delta_pow(1, b)) != b)
      throw std::invalid_argument("act_delta_pow(-1) is not inverse to act_delta_pow(1)");
  }

  // Homomorphism on products of acting simples that stay simple.
  for (Simple a1 = 0; a1 < ng; ++a1)
    for (Simple a2 = 0; a2 < ng; ++a2) {
      const auto p = g.product_if_simple(a1, a2);
      if (!p) continue;
      for (Simple atom : h.atoms())
        if (action.act(*p, atom) != action.act(a2, action.act(a1, atom)))
          throw std::invalid_argument("action is not a homomorphism on simple products");
    }

  const std::uint64_t quad_budget = 20000000ull;
  if (ng * nh * nh <= quad_budget) {
    for (Simple a = 0; a < ng; ++a)
      for (Simple b1 = 0; b1 < nh; ++b1)
        for (Simple b2 = 0; b2 < nh; ++b2) {
          const Simple i1 = action.act(a, b1);
          const Simple i2 = action.act(a, b2);
          if (action.act(a, h.meet_l(b1, b2)) != h.meet_l(i1, i2))
            throw std::invalid_argument("action does not preserve left meets");
          const auto prod = h.product_if_simple(b1, b2);
          const auto iprod = h.product_if_simple(i1, i2);
          if (prod.has_value() != iprod.has_value() ||
              (prod && action.act(a, *prod) != *iprod))
            throw std::invalid_argument("action does not preserve products");
        }
  }
}

// Semidirect product G |x H of two Garside structures along an action of G
// on H^+ fixing Delta_H.  Simples are the pairs (a, b) of simples encoded
// as a * |D_H| + b; every lattice operation is synthesized from the
// component structures, so nothing is tabulated here and the composite can
// be large.
class SemidirectStructure : public GarsideStructure {
public:
  SemidirectStructure(StructurePtr acting, StructurePtr acted, ActionSpec action,
                      std::string key)
      : g_(std::move(acting)), h_(std::move(acted)), action_(std::move(action)),
        key_(std::move(key)) {
    ng_ = g_->simple_count();
    nh_ = h_->simple_count();
    for (Simple a : g_->atoms()) atoms_.push_back(pair_token(a, h_->one()));
    for (Simple b : h_->atoms()) atoms_.push_back(pair_token(g_->one(), b));
    e_ = compute_central_power();
  }

  const StructurePtr& acting() const { return g_; }
  const StructurePtr& acted() const { return h_; }

  Simple pair_token(Simple a, Simple b) const {
    return static_cast<Simple>(static_cast<std::uint64_t>(a) * nh_ + b);
  }
  std::pair<Simple, Simple> unpair(Simple s) const {
    return {static_cast<Simple>(s / nh_), static_cast<Simple>(s % nh_)};
  }

  Simple act_simple(Simple g, Simple h) const { return action_.act(g, h); }
  Simple act_inv_simple(Simple g, Simple h) const { return action_.act_inv(g, h); }
  Simple act_delta_pow_simple(long long k, Simple h) const { return action_.act_delta_pow(k, h); }

  std::string key() const override { return key_; }
  std::uint64_t simple_count() const override { return ng_ * nh_; }
  Simple one() const override { return pair_token(g_->one(), h_->one()); }
  Simple delta() const override { return pair_token(g_->delta(), h_->delta()); }
  const std::vector<Simple>& atoms() const override { return atoms_; }
  long long central_power() const override { return e_; }

  // (a1,b1) ^ (a2,b2) = (a1^a2, (b1^{a1^-1} ^ b2^{a2^-1})^{a1^a2}), and the
  // join with the same shape; the right-hand versions are componentwise.
  Simple meet_l(Simple s, Simple t) const override {
    const auto [a1, b1] = unpair(s);
    const auto [a2, b2] = unpair(t);
    const Simple a = g_->meet_l(a1, a2);
    const Simple b = h_->meet_l(action_.act_inv(a1, b1), action_.act_inv(a2, b2));
    return pair_token(a, action_.act(a, b));
  }
  Simple join_l(Simple s, Simple t) const override {
    const auto [a1, b1] = unpair(s);
    const auto [a2, b2] = unpair(t);
    const Simple a = g_->join_l(a1, a2);
    const Simple b = h_->join_l(action_.act_inv(a1, b1), action_.act_inv(a2, b2));
    return pair_token(a, action_.act(a, b));
  }
  Simple meet_r(Simple s, Simple t) const override {
    const auto [a1, b1] = unpair(s);
    const auto [a2, b2] = unpair(t);
    return pair_token(g_->meet_r(a1, a2), h_->meet_r(b1, b2));
  }
  Simple join_r(Simple s, Simple t) const override {
    const auto [a1, b1] = unpair(s);
    const auto [a2, b2] = unpair(t);
    return pair_token(g_->join_r(a1, a2), h_->join_r(b1, b2));
  }

  Simple right_complement(Simple s) const override {
    const auto [a, b] = unpair(s);
    const Simple ra = g_->right_complement(a);
    return pair_token(ra, h_->right_complement(action_.act(ra, b)));
  }
  Simple left_complement(Simple s) const override {
    const auto [a, b] = unpair(s);
    return pair_token(g_->left_complement(a), action_.act_inv(a, h_->left_complement(b)));
  }

  Simple tau_simple(Simple s) const override {
    const auto [a, b] = unpair(s);
    return pair_token(g_->tau_simple(a), h_->tau_simple(action_.act_delta_pow(1, b)));
  }
  Simple tau_inverse_simple(Simple s) const override {
    const auto [a, b] = unpair(s);
    return pair_token(g_->tau_inverse_simple(a),
                      action_.act_delta_pow(-1, h_->tau_inverse_simple(b)));
  }

  std::optional<Simple> product_if_simple(Simple s, Simple t) const override {
    const auto [a1, b1] = unpair(s);
    const auto [a2, b2] = unpair(t);
    const auto a = g_->product_if_simple(a1, a2);
    if (!a) return std::nullopt;
    const auto b = h_->product_if_simple(action_.act(a2, b1), b2);
    if (!b) return std::nullopt;
    return pair_token(*a, *b);
  }
  std::optional<Simple> left_quotient(Simple s, Simple t) const override {
    const auto [a1, b1] = unpair(s);
    const auto [a2, b2] = unpair(t);
    const auto x = g_->left_quotient(a1, a2);
    if (!x) return std::nullopt;
    const auto y = h_->left_quotient(action_.act(*x, b1), b2);
    if (!y) return std::nullopt;
    return pair_token(*x, *y);
  }
  std::optional<Simple> right_quotient(Simple s, Simple t) const override {
    const auto [a1, b1] = unpair(s);
    const auto [a2, b2] = unpair(t);
    const auto x = g_->right_quotient(a1, a2);
    if (!x) return std::nullopt;
    const auto y = h_->right_quotient(b1, b2);
    if (!y) return std::nullopt;
    return pair_token(*x, action_.act_inv(a1, *y));
  }

  std::uint64_t simple_atom_norm(Simple s) const override {
    const auto [a, b] = unpair(s);
    return g_->simple_atom_norm(a) + h_->simple_atom_norm(b);
  }

  std::string simple_name(Simple s) const override {
    const auto [a, b] = unpair(s);
    return "(" + g_->simple_name(a) + "|" + h_->simple_name(b) + ")";
  }

private:
  long long compute_central_power() const {
    // tau^k(a, b) = (tau_G^k a, tau_H^k(b^{Delta_G^k})); an automorphism
    // fixing every atom is the identity on the monoid.
    std::vector<Simple> cur = atoms_;
    const long long cap = 10000000;
    for (long long k = 1; k <= cap; ++k) {
      bool all_fixed = true;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        cur[i] = tau_simple(cur[i]);
        all_fixed &= (cur[i] == atoms_[i]);
      }
      if (all_fixed) return k;
    }
    throw ResourceError(key_ + ": central power of Delta not found within cap");
  }

  StructurePtr g_, h_;
  ActionSpec action_;
  std::string key_;
  std::uint64_t ng_ = 0, nh_ = 0;
  std::vector<Simple> atoms_;
  long long e_ = 1;
};

inline std::shared_ptr<const SemidirectStructure> semidirect_structure(
    StructurePtr acting, StructurePtr acted, ActionSpec action, std::string key = "") {
  validate_action(*acting, *acted, action);
  if (key.empty()) key = "semidirect(" + acting->key() + "," + acted->key() + ")";
  return std::make_shared<SemidirectStructure>(std::move(acting), std::move(acted),
                                               std::move(action), std::move(key));
}

// Cartesian power G^n: tokens are mixed-radix digit strings over the base
// simple set, every operation componentwise.
class PowerStructure final : public GarsideStructure {
public:
  PowerStructure(StructurePtr base, std::uint32_t copies, const Caps& caps)
      : base_(std::move(base)), n_(copies) {
    if (n_ == 0) throw std::invalid_argument("cartesian power needs at least one copy");
    nb_ = base_->simple_count();
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
      count *= nb_;
      if (count > caps.power_simples)
        throw ResourceError("cartesian power exceeds the simple-set cap");
    }
    count_ = count;
    for (std::uint32_t slot = 0; slot < n_; ++slot)
      for (Simple a : base_->atoms()) atoms_.push_back(embed(slot, a));
  }

  const StructurePtr& base() const { return base_; }
  std::uint32_t copies() const { return n_; }

  std::vector<Simple> digits(Simple s) const {
    std::vector<Simple> d(n_);
    std::uint64_t v = s;
    for (std::uint32_t i = 0; i < n_; ++i) {
      d[i] = static_cast<Simple>(v % nb_);
      v /= nb_;
    }
    return d;
  }
  Simple from_digits(const std::vector<Simple>& d) const {
    std::uint64_t v = 0;
    for (std::uint32_t i = n_; i-- > 0;) v = v * nb_ + d[i];
    return static_cast<Simple>(v);
  }
  Simple embed(std::uint32_t slot, Simple s) const {
    std::vector<Simple> d(n_, base_->one());
    d[slot] = s;
    return from_digits(d);
  }

  std::string key() const override {
    return "power(" + base_->key() + "," + std::to_string(n_) + ")";
  }
  std::uint64_t simple_count() const override { return count_; }
  Simple one() const override {
    std::vector<Simple> d(n_, base_->one());
    return from_digits(d);
  }
  Simple delta() const override {
    std::vector<Simple> d(n_, base_->delta());
    return from_digits(d);
  }
  const std::vector<Simple>& atoms() const override { return atoms_; }
  long long central_power() const override { return base_->central_power(); }

  Simple meet_l(Simple a, Simple b) const override {
    return map2(a, b, [this](Simple x, Simple y) { return base_->meet_l(x, y); });
  }
  Simple meet_r(Simple a, Simple b) const override {
    return map2(a, b, [this](Simple x, Simple y) { return base_->meet_r(x, y); });
  }
  Simple join_l(Simple a, Simple b) const override {
    return map2(a, b, [this](Simple x, Simple y) { return base_->join_l(x, y); });
  }
  Simple join_r(Simple a, Simple b) const override {
    return map2(a, b, [this](Simple x, Simple y) { return base_->join_r(x, y); });
  }
  Simple right_complement(Simple s) const override {
    return map1(s, [this](Simple x) { return base_->right_complement(x); });
  }
  Simple left_complement(Simple s) const override {
    return map1(s, [this](Simple x) { return base_->left_complement(x); });
  }
  Simple tau_simple(Simple s) const override {
    return map1(s, [this](Simple x) { return base_->tau_simple(x); });
  }
  Simple tau_inverse_simple(Simple s) const override {
    return map1(s, [this](Simple x) { return base_->tau_inverse_simple(x); });
  }

  std::optional<Simple> product_if_simple(Simple a, Simple b) const override {
    return map2_partial(a, b,
                        [this](Simple x, Simple y) { return base_->product_if_simple(x, y); });
  }
  std::optional<Simple> left_quotient(Simple a, Simple b) const override {
    return map2_partial(a, b,
                        [this](Simple x, Simple y) { return base_->left_quotient(x, y); });
  }
  std::optional<Simple> right_quotient(Simple a, Simple b) const override {
    return map2_partial(a, b,
                        [this](Simple x, Simple y) { return base_->right_quotient(x, y); });
  }

  std::uint64_t simple_atom_norm(Simple s) const override {
    std::uint64_t total = 0;
    for (Simple d : digits(s)) total += base_->simple_atom_norm(d);
    return total;
  }
  std::string simple_name(Simple s) const override {
    std::string out = "(";
    const auto d = digits(s);
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (i) out += "|";
      out += base_->simple_name(d[i]);
    }
    return out + ")";
  }

private:
  template <typename F>
  Simple map1(Simple s, F&& f) const {
    auto d = digits(s);
    for (auto& x : d) x = f(x);
    return from_digits(d);
  }
  template <typename F>
  Simple map2(Simple a, Simple b, F&& f) const {
    auto da = digits(a);
    const auto db = digits(b);
    for (std::uint32_t i = 0; i < n_; ++i) da[i] = f(da[i], db[i]);
    return from_digits(da);
  }
  template <typename F>
  std::optional<Simple> map2_partial(Simple a, Simple b, F&& f) const {
    auto da = digits(a);
    const auto db = digits(b);
    for (std::uint32_t i = 0; i < n_; ++i) {
      const auto r = f(da[i], db[i]);
      if (!r) return std::nullopt;
      da[i] = *r;
    }
    return from_digits(da);
  }

  StructurePtr base_;
  std::uint32_t n_;
  std::uint64_t nb_ = 0;
  std::uint64_t count_ = 0;
  std::vector<Simple> atoms_;
};

inline std::shared_ptr<const PowerStructure> power_structure(StructurePtr base,
                                                             std::uint32_t copies,
                                                             const Caps& caps = {}) {
  return std::make_shared<PowerStructure>(std::move(base), copies, caps);
}

// -- element-level helpers over a semidirect product -------------------

// Action of a group element g of the acting group on an element of the
// acted group, computed letter by letter on the normal form of g.
inline Element action_on(const std::shared_ptr<const SemidirectStructure>& st,
                         const Element& h, const Element& g) {
  std::vector<Simple> f = h.factors();
  auto apply = [&](auto&& fn) {
    for (auto& x : f) x = fn(x);
  };
  apply([&](Simple x) { return st->act_delta_pow_simple(g.inf(), x); });
  for (Simple s : g.factors()) apply([&](Simple x) { return st->act_simple(s, x); });
  return Element::make(st->acted(), h.inf(), std::move(f));
}

// (g, h) as an element of the product, from components.
inline Element make_pair_element(const std::shared_ptr<const SemidirectStructure>& st,
                                 const Element& g, const Element& h) {
  Word w;
  for (const auto& [s, sign] : to_word(g)) w.push_back({st->pair_token(s, st->acted()->one()), sign});
  for (const auto& [s, sign] : to_word(h)) w.push_back({st->pair_token(st->acting()->one(), s), sign});
  return normalize(std::static_pointer_cast<const GarsideStructure>(st), w);
}

// Components (g, h) of an element of the product.
inline std::pair<Element, Element> pair_parts(const std::shared_ptr<const SemidirectStructure>& st,
                                              const Element& a) {
  Element g = delta_power(st->acting(), a.inf());
  Element h = delta_power(st->acted(), a.inf());
  for (Simple f : a.factors()) {
    const auto [x, y] = st->unpair(f);
    // (g, h)(x, y) = (g x, h^x y)
    std::vector<Simple> hf = h.factors();
    for (auto& t : hf) t = st->act_simple(x, t);
    h = multiply(Element::make(st->acted(), h.inf(), std::move(hf)),
                 simple_element(st->acted(), y));
    g = multiply(g, simple_element(st->acting(), x));
  }
  return {g, h};
}

}  // namespace garside
