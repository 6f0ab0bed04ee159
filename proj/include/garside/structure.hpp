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

#include "errors.hpp"

namespace garside {

// Opaque token naming a simple element within one structure.  Tokens are
// dense: a structure with N simples uses exactly the values 0..N-1, so code
// may iterate over all simples by counting.
using Simple = std::uint32_t;

inline constexpr Simple kNoSimple = static_cast<Simple>(-1);

// Resource limits for the unbounded-search operations.  Every limit can be
// overridden by the caller (CLI: --cap).
struct Caps {
  std::uint64_t lc_closure_elements = 100000;
  std::uint64_t summit_members = 1000000;
  std::uint64_t power_simples = 1000000;  // |D|^n bound for cartesian powers
  std::uint64_t class_enumeration = 200000;

  static Caps uniform(std::uint64_t value) {
    Caps c;
    c.lc_closure_elements = value;
    c.summit_members = value;
    c.power_simples = value;
    c.class_enumeration = value;
    return c;
  }
};

// Finite description of a Garside monoid.  An implementation provides the
// simple-element lattice of one chosen Garside element Delta: meets, joins,
// the two complements, tau (conjugation by Delta), partial products and
// quotients inside the simple set, atom norms and the central power of
// Delta.  Everything the group engine does is expressed through this
// interface, so braids, torus-type monoids and semidirect products plug in
// uniformly.
//
// Instances are immutable after construction and safe to share across
// threads.
class GarsideStructure {
public:
  virtual ~GarsideStructure() = default;

  // Canonical description, e.g. "braid:3".  Elements of two structures with
  // equal keys are interoperable (tokens are constructed deterministically).
  virtual std::string key() const = 0;

  virtual std::uint64_t simple_count() const = 0;
  virtual Simple one() const = 0;
  virtual Simple delta() const = 0;
  virtual const std::vector<Simple>& atoms() const = 0;

  // Smallest e >= 1 with Delta^e central (equivalently tau^e = id).
  virtual long long central_power() const = 0;

  virtual Simple meet_l(Simple a, Simple b) const = 0;
  virtual Simple meet_r(Simple a, Simple b) const = 0;
  virtual Simple join_l(Simple a, Simple b) const = 0;
  virtual Simple join_r(Simple a, Simple b) const = 0;

  // s \ Delta and Delta / s:  s * right_complement(s) == Delta,
  // left_complement(s) * s == Delta.
  virtual Simple right_complement(Simple s) const = 0;
  virtual Simple left_complement(Simple s) const = 0;

  virtual Simple tau_simple(Simple s) const = 0;
  virtual Simple tau_inverse_simple(Simple s) const = 0;

  // Monoid product a*b if it is still simple, otherwise nullopt.
  virtual std::optional<Simple> product_if_simple(Simple a, Simple b) const = 0;
  // c with a*c == b (defined iff a left-divides b), and c with c*a == b.
  virtual std::optional<Simple> left_quotient(Simple a, Simple b) const = 0;
  virtual std::optional<Simple> right_quotient(Simple a, Simple b) const = 0;

  virtual std::uint64_t simple_atom_norm(Simple s) const = 0;
  virtual std::string simple_name(Simple s) const = 0;

  // -- derived helpers ------------------------------------------------

  bool left_divides(Simple a, Simple b) const { return left_quotient(a, b).has_value(); }
  bool right_divides(Simple a, Simple b) const { return right_quotient(a, b).has_value(); }

  // Left-weighted rewriting of a two-factor product: returns (a', b') with
  // a'b' == ab and a' == (ab) ^ Delta.  Uses the identity
  // (ab) ^ Delta == a * (right_complement(a) ^ b).
  std::pair<Simple, Simple> simple_product(Simple a, Simple b) const {
    const Simple u = meet_l(right_complement(a), b);
    if (u == one()) return {a, b};
    return {*product_if_simple(a, u), *left_quotient(u, b)};
  }

  // Dual rewriting: (a'', b'') with a''b'' == ab and b'' == (ab) ^_R Delta.
  std::pair<Simple, Simple> simple_product_right(Simple a, Simple b) const {
    const Simple v = meet_r(a, left_complement(b));
    if (v == one()) return {a, b};
    return {*right_quotient(v, a), *product_if_simple(v, b)};
  }

  bool left_weighted_pair(Simple a, Simple b) const {
    return meet_l(right_complement(a), b) == one();
  }

  Simple tau_power(Simple s, long long m) const {
    const long long e = central_power();
    m %= e;
    if (m < 0) m += e;
    for (; m > 0; --m) s = tau_simple(s);
    return s;
  }
};

using StructurePtr = std::shared_ptr<const GarsideStructure>;

// ---------------------------------------------------------------------
// Table-backed structure for small simple sets.
//
// A concrete monoid is described by a TabulationSeed: the dense token
// range, the distinguished tokens, the atoms and one partial operation --
// the product of two simples when the result is again simple.  Everything
// else (quotients, complements, tau, meets, joins, atom norms, the central
// power) is derived here and stored in flat lookup tables.
// ---------------------------------------------------------------------

struct TabulationSeed {
  std::string key;
  std::uint32_t simple_count = 0;
  Simple one = 0;
  Simple delta = 0;
  std::vector<Simple> atoms;
  std::function<std::optional<Simple>(Simple, Simple)> multiply;
  std::function<std::string(Simple)> simple_name;
};

class TabulatedStructure final : public GarsideStructure {
public:
  explicit TabulatedStructure(TabulationSeed seed)
      : key_(std::move(seed.key)),
        n_(seed.simple_count),
        one_(seed.one),
        delta_(seed.delta),
        atoms_(std::move(seed.atoms)),
        name_(std::move(seed.simple_name)) {
    if (n_ < 2) throw std::invalid_argument(key_ + ": needs at least two simples");
    if (one_ == delta_) throw std::invalid_argument(key_ + ": one equals delta");
    if (atoms_.empty()) throw std::invalid_argument(key_ + ": no atoms");

    const std::size_t nn = static_cast<std::size_t>(n_) * n_;
    prod_.assign(nn, kNoSimple);
    lquot_.assign(nn, kNoSimple);
    rquot_.assign(nn, kNoSimple);
    for (Simple a = 0; a < n_; ++a)
      for (Simple b = 0; b < n_; ++b)
        if (auto p = seed.multiply(a, b)) prod_[at(a, b)] = *p;

    for (Simple a = 0; a < n_; ++a) {
      if (prod_[at(a, one_)] != a || prod_[at(one_, a)] != a)
        throw std::invalid_argument(key_ + ": token " + std::to_string(a) +
                                    " does not absorb the identity");
      for (Simple b = 0; b < n_; ++b) {
        const Simple w = prod_[at(a, b)];
        if (w == kNoSimple) continue;
        if (lquot_[at(a, w)] != kNoSimple && lquot_[at(a, w)] != b)
          throw std::invalid_argument(key_ + ": seed product is not left cancellative");
        if (rquot_[at(b, w)] != kNoSimple && rquot_[at(b, w)] != a)
          throw std::invalid_argument(key_ + ": seed product is not right cancellative");
        lquot_[at(a, w)] = b;
        rquot_[at(b, w)] = a;
      }
    }

    rcomp_.resize(n_);
    lcomp_.resize(n_);
    for (Simple s = 0; s < n_; ++s) {
      rcomp_[s] = lquot_[at(s, delta_)];
      lcomp_[s] = rquot_[at(s, delta_)];
      if (rcomp_[s] == kNoSimple || lcomp_[s] == kNoSimple)
        throw std::invalid_argument(key_ + ": token " + std::to_string(s) +
                                    " does not divide delta on both sides");
    }

    meetl_.assign(nn, kNoSimple);
    meetr_.assign(nn, kNoSimple);
    for (Simple a = 0; a < n_; ++a)
      for (Simple b = 0; b < n_; ++b) {
        meetl_[at(a, b)] = greedy_meet(a, b, /*left=*/true);
        meetr_[at(a, b)] = greedy_meet(a, b, /*left=*/false);
      }

    // Joins through the complement anti-isomorphisms: the right complement
    // reverses <=_L into <=_R (and the left complement the other way), so a
    // join on one side is the complement of a meet on the other.
    joinl_.assign(nn, kNoSimple);
    joinr_.assign(nn, kNoSimple);
    for (Simple a = 0; a < n_; ++a)
      for (Simple b = 0; b < n_; ++b) {
        joinl_[at(a, b)] = lcomp_[meetr_[at(rcomp_[a], rcomp_[b])]];
        joinr_[at(a, b)] = rcomp_[meetl_[at(lcomp_[a], lcomp_[b])]];
      }

    tau_.resize(n_);
    tauinv_.resize(n_);
    for (Simple s = 0; s < n_; ++s) {
      tau_[s] = rcomp_[rcomp_[s]];
      tauinv_[s] = lcomp_[lcomp_[s]];
    }
    for (Simple s = 0; s < n_; ++s)
      if (tauinv_[tau_[s]] != s)
        throw std::invalid_argument(key_ + ": tau is not a bijection of the simples");

    norm_.assign(n_, 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (Simple s = 0; s < n_; ++s)
        for (Simple a : atoms_) {
          const Simple q = lquot_[at(a, s)];
          if (q == kNoSimple) continue;
          const std::uint64_t cand = 1 + norm_[q];
          if (cand > norm_[s]) {
            norm_[s] = cand;
            changed = true;
          }
        }
    }

    e_ = tau_order();
  }

  std::string key() const override { return key_; }
  std::uint64_t simple_count() const override { return n_; }
  Simple one() const override { return one_; }
  Simple delta() const override { return delta_; }
  const std::vector<Simple>& atoms() const override { return atoms_; }
  long long central_power() const override { return e_; }

  Simple meet_l(Simple a, Simple b) const override { return meetl_[at(a, b)]; }
  Simple meet_r(Simple a, Simple b) const override { return meetr_[at(a, b)]; }
  Simple join_l(Simple a, Simple b) const override { return joinl_[at(a, b)]; }
  Simple join_r(Simple a, Simple b) const override { return joinr_[at(a, b)]; }
  Simple right_complement(Simple s) const override { return rcomp_[s]; }
  Simple left_complement(Simple s) const override { return lcomp_[s]; }
  Simple tau_simple(Simple s) const override { return tau_[s]; }
  Simple tau_inverse_simple(Simple s) const override { return tauinv_[s]; }

  std::optional<Simple> product_if_simple(Simple a, Simple b) const override {
    const Simple w = prod_[at(a, b)];
    if (w == kNoSimple) return std::nullopt;
    return w;
  }
  std::optional<Simple> left_quotient(Simple a, Simple b) const override {
    const Simple w = lquot_[at(a, b)];
    if (w == kNoSimple) return std::nullopt;
    return w;
  }
  std::optional<Simple> right_quotient(Simple a, Simple b) const override {
    const Simple w = rquot_[at(a, b)];
    if (w == kNoSimple) return std::nullopt;
    return w;
  }

  std::uint64_t simple_atom_norm(Simple s) const override { return norm_[s]; }
  std::string simple_name(Simple s) const override { return name_(s); }

private:
  std::size_t at(Simple a, Simple b) const { return static_cast<std::size_t>(a) * n_ + b; }

  // Climb from 1 through common divisors one atom at a time.  The common
  // divisors form the down-set of the meet, and inside a down-set every
  // non-maximal element has an atom extension, so the climb stops exactly
  // at the meet.
  Simple greedy_meet(Simple a, Simple b, bool left) const {
    Simple u = one_;
    bool progress = true;
    while (progress) {
      progress = false;
      for (Simple t : atoms_) {
        const Simple w = left ? prod_[at(u, t)] : prod_[at(t, u)];
        if (w == kNoSimple) continue;
        const bool div_a = left ? lquot_[at(w, a)] != kNoSimple : rquot_[at(w, a)] != kNoSimple;
        const bool div_b = left ? lquot_[at(w, b)] != kNoSimple : rquot_[at(w, b)] != kNoSimple;
        if (div_a && div_b) {
          u = w;
          progress = true;
          break;
        }
      }
    }
    return u;
  }

  long long tau_order() const {
    long long order = 1;
    std::vector<char> seen(n_, 0);
    for (Simple s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      long long len = 0;
      Simple cur = s;
      do {
        seen[cur] = 1;
        cur = tau_[cur];
        ++len;
      } while (cur != s);
      order = std::lcm(order, len);
      if (order > (1LL << 40)) throw std::invalid_argument(key_ + ": tau order overflow");
    }
    return order;
  }

  std::string key_;
  std::uint32_t n_;
  Simple one_, delta_;
  std::vector<Simple> atoms_;
  std::function<std::string(Simple)> name_;
  long long e_ = 1;

  std::vector<Simple> prod_, lquot_, rquot_;
  std::vector<Simple> meetl_, meetr_, joinl_, joinr_;
  std::vector<Simple> rcomp_, lcomp_, tau_, tauinv_;
  std::vector<std::uint64_t> norm_;
};

inline StructurePtr tabulate(TabulationSeed seed) {
  return std::make_shared<TabulatedStructure>(std::move(seed));
}

}  // namespace garside
