#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "structure.hpp"

namespace garside {

// Torus-type group <x_1,...,x_m : x_1^{p_1} = ... = x_m^{pm}> with
// Delta = x_1^{p_1}.  The proper simples form m disjoint chains x_i^j
// (0 < j < p_i) glued at 1 and Delta, so every lattice operation has a
// closed form and no tables are needed; simple sets of any size work.
// Delta is central, hence tau is the identity and e = 1.
class TorusStructure final : public GarsideStructure {
public:
  explicit TorusStructure(std::vector<long long> exponents) : p_(std::move(exponents)) {
    if (p_.empty()) throw std::invalid_argument("torus structure needs a generator");
    for (long long e : p_)
      if (e < 2) throw std::invalid_argument("torus exponents must be at least 2");
    offset_.reserve(p_.size());
    Simple next = 1;
    for (long long e : p_) {
      offset_.push_back(next);
      next += static_cast<Simple>(e - 1);
    }
    delta_ = next;
    for (std::size_t i = 0; i < p_.size(); ++i) atoms_.push_back(offset_[i]);
    key_ = "torus:";
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (i) key_ += ",";
      key_ += std::to_string(p_[i]);
    }
  }

  std::string key() const override { return key_; }
  std::uint64_t simple_count() const override { return static_cast<std::uint64_t>(delta_) + 1; }
  Simple one() const override { return 0; }
  Simple delta() const override { return delta_; }
  const std::vector<Simple>& atoms() const override { return atoms_; }
  long long central_power() const override { return 1; }

  Simple meet_l(Simple a, Simple b) const override { return meet(a, b); }
  Simple meet_r(Simple a, Simple b) const override { return meet(a, b); }
  Simple join_l(Simple a, Simple b) const override { return join(a, b); }
  Simple join_r(Simple a, Simple b) const override { return join(a, b); }

  Simple right_complement(Simple s) const override {
    if (s == 0) return delta_;
    if (s == delta_) return 0;
    const auto [g, e] = decode(s);
    return encode(g, p_[g] - e);
  }
  Simple left_complement(Simple s) const override { return right_complement(s); }

  Simple tau_simple(Simple s) const override { return s; }
  Simple tau_inverse_simple(Simple s) const override { return s; }

  std::optional<Simple> product_if_simple(Simple a, Simple b) const override {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == delta_ || b == delta_) return std::nullopt;
    const auto [ga, ea] = decode(a);
    const auto [gb, eb] = decode(b);
    if (ga != gb || ea + eb > p_[ga]) return std::nullopt;
    return encode(ga, ea + eb);
  }
  std::optional<Simple> left_quotient(Simple a, Simple b) const override {
    if (a == 0) return b;
    if (a == b) return Simple{0};
    if (a == delta_) return std::nullopt;  // only Delta is above Delta
    const auto [ga, ea] = decode(a);
    if (b == delta_) return encode(ga, p_[ga] - ea);
    if (b == 0) return std::nullopt;
    const auto [gb, eb] = decode(b);
    if (ga != gb || ea > eb) return std::nullopt;
    return encode(ga, eb - ea);
  }
  std::optional<Simple> right_quotient(Simple a, Simple b) const override {
    return left_quotient(a, b);  // the chains are abelian factor by factor
  }

  std::uint64_t simple_atom_norm(Simple s) const override {
    if (s == 0) return 0;
    if (s == delta_) return static_cast<std::uint64_t>(*std::max_element(p_.begin(), p_.end()));
    return static_cast<std::uint64_t>(decode(s).second);
  }

  std::string simple_name(Simple s) const override {
    if (s == 0) return "1";
    if (s == delta_) return "D";
    const auto [g, e] = decode(s);
    std::string out = "x" + std::to_string(g + 1);
    if (e != 1) out += "^" + std::to_string(e);
    return out;
  }

private:
  std::pair<int, long long> decode(Simple s) const {
    // binary search over the chain offsets
    std::size_t lo = 0, hi = offset_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (offset_[mid] <= s) lo = mid;
      else hi = mid - 1;
    }
    return {static_cast<int>(lo), static_cast<long long>(s - offset_[lo] + 1)};
  }
  Simple encode(int gen, long long exp) const {
    if (exp == 0) return 0;
    if (exp == p_[gen]) return delta_;
    return offset_[gen] + static_cast<Simple>(exp - 1);
  }

  Simple meet(Simple a, Simple b) const {
    if (a == 0 || b == 0) return 0;
    if (a == delta_) return b;
    if (b == delta_) return a;
    const auto [ga, ea] = decode(a);
    const auto [gb, eb] = decode(b);
    if (ga != gb) return 0;
    return encode(ga, std::min(ea, eb));
  }
  Simple join(Simple a, Simple b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == delta_ || b == delta_) return delta_;
    const auto [ga, ea] = decode(a);
    const auto [gb, eb] = decode(b);
    if (ga != gb) return delta_;
    return encode(ga, std::max(ea, eb));
  }

  std::vector<long long> p_;
  std::vector<Simple> offset_;
  Simple delta_ = 0;
  std::vector<Simple> atoms_;
  std::string key_;
};

inline StructurePtr torus_structure(const std::vector<long long>& exponents) {
  return std::make_shared<TorusStructure>(exponents);
}

}  // namespace garside
