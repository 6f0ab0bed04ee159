#pragma once

#include <string>

#include "structure.hpp"

namespace garside {

// The infinite cyclic group Z = <d> viewed as a Garside group with
// Delta = d; its only simples are 1 and d.
inline StructurePtr cyclic_structure() {
  TabulationSeed seed;
  seed.key = "z";
  seed.simple_count = 2;
  seed.one = 0;
  seed.delta = 1;
  seed.atoms = {1};
  seed.multiply = [](Simple a, Simple b) -> std::optional<Simple> {
    if (a == 0) return b;
    if (b == 0) return a;
    return std::nullopt;  // d*d is no longer simple
  };
  seed.simple_name = [](Simple s) { return std::string(s == 0 ? "1" : "d"); };
  return tabulate(std::move(seed));
}

}  // namespace garside
