#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "structure.hpp"

namespace garside {

namespace detail {

struct BraidTables {
  int n;
  std::vector<std::vector<std::uint8_t>> perms;  // lexicographic, 0-based images
  std::vector<std::uint32_t> inversions;
  std::vector<Simple> lookup;  // packed one-line form -> token

  std::uint32_t pack(const std::vector<std::uint8_t>& p) const {
    std::uint32_t code = 0;
    for (int i = 0; i < n; ++i) code = code * 8 + p[i];
    return code;
  }
};

inline std::uint32_t count_inversions(const std::vector<std::uint8_t>& p) {
  std::uint32_t inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

}  // namespace detail

// Braid group B_n with the classical Garside structure: simples are the
// permutation braids (one per permutation of n points), Delta is the half
// twist, and the product of two simples stays simple exactly when the
// crossing numbers add up.
inline StructurePtr braid_structure(int strands, int max_strands = 6) {
  if (strands < 2 || strands > max_strands)
    throw std::invalid_argument("braid strand count out of range [2, " +
                                std::to_string(max_strands) + "]");

  auto t = std::make_shared<detail::BraidTables>();
  t->n = strands;
  std::vector<std::uint8_t> p(strands);
  std::iota(p.begin(), p.end(), 0);
  do {
    t->perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::uint32_t lut_size = 1;
  for (int i = 0; i < strands; ++i) lut_size *= 8;
  t->lookup.assign(lut_size, kNoSimple);
  t->inversions.resize(t->perms.size());
  for (Simple i = 0; i < t->perms.size(); ++i) {
    t->lookup[t->pack(t->perms[i])] = i;
    t->inversions[i] = detail::count_inversions(t->perms[i]);
  }

  TabulationSeed seed;
  seed.key = "braid:" + std::to_string(strands);
  seed.simple_count = static_cast<std::uint32_t>(t->perms.size());
  seed.one = 0;  // identity permutation is lexicographically first
  std::vector<std::uint8_t> rev(strands);
  for (int i = 0; i < strands; ++i) rev[i] = static_cast<std::uint8_t>(strands - 1 - i);
  seed.delta = t->lookup[t->pack(rev)];

  for (int i = 0; i + 1 < strands; ++i) {
    std::vector<std::uint8_t> tr(strands);
    std::iota(tr.begin(), tr.end(), 0);
    std::swap(tr[i], tr[i + 1]);
    seed.atoms.push_back(t->lookup[t->pack(tr)]);
  }

  seed.multiply = [t](Simple a, Simple b) -> std::optional<Simple> {
    const auto& pa = t->perms[a];
    const auto& pb = t->perms[b];
    std::vector<std::uint8_t> c(t->n);
    for (int i = 0; i < t->n; ++i) c[i] = pb[pa[i]];
    const Simple w = t->lookup[t->pack(c)];
    if (t->inversions[w] != t->inversions[a] + t->inversions[b]) return std::nullopt;
    return w;
  };

  seed.simple_name = [t](Simple s) {
    std::string out;
    for (int i = 0; i < t->n; ++i) out += static_cast<char>('1' + t->perms[s][i]);
    return out;
  };

  return tabulate(std::move(seed));
}

}  // namespace garside
