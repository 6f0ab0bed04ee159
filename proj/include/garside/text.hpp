#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "braid.hpp"
#include "cyclic.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "gn.hpp"
#include "rational.hpp"
#include "torus.hpp"

namespace garside {

// Group specifier strings: "braid:n", "torus:p1,p2,...", "z",
// "gn:<base-spec>:<n>".
inline StructurePtr make_structure(const std::string& spec, const Caps& caps = {}) {
  auto fail = [&](const std::string& why) -> StructurePtr {
    throw ParseError("bad group spec '" + spec + "': " + why, 0);
  };
  if (spec == "z") return cyclic_structure();
  if (spec.rfind("braid:", 0) == 0) {
    try {
      return braid_structure(std::stoi(spec.substr(6)));
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    } catch (const std::out_of_range&) {
      return fail("strand count out of range");
    }
  }
  if (spec.rfind("torus:", 0) == 0) {
    std::vector<long long> p;
    std::string rest = spec.substr(6);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t comma = rest.find(',', pos);
      const std::string piece = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      try {
        p.push_back(std::stoll(piece));
      } catch (...) {
        return fail("bad exponent '" + piece + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    try {
      return torus_structure(p);
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    }
  }
  if (spec.rfind("gn:", 0) == 0) {
    const std::size_t colon = spec.rfind(':');
    if (colon <= 3) return fail("expected gn:<base>:<n>");
    const std::string base_spec = spec.substr(3, colon - 3);
    long long n = 0;
    try {
      n = std::stoll(spec.substr(colon + 1));
    } catch (...) {
      return fail("bad copy count");
    }
    if (n < 1) return fail("copy count must be positive");
    return gn_structure(make_structure(base_spec, caps), static_cast<std::uint32_t>(n), caps);
  }
  return fail("unknown group kind");
}

namespace detail {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
};

inline bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '^' && c != '[' && c != ']' &&
         c != '|' && c != '.';
}

inline long long parse_int(Cursor& c) {
  const std::size_t start = c.pos;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) ++c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start || (c.pos == start + 1 && !std::isdigit(static_cast<unsigned char>(c.s[start]))))
    throw ParseError("expected integer", start);
  long long value = 0;
  try {
    value = std::stoll(c.s.substr(start, c.pos - start));
  } catch (const std::out_of_range&) {
    throw ParseError("integer literal out of range", start);
  }
  if (value > 1000000 || value < -1000000)
    throw ParseError("exponent exceeds the supported range", start);
  return value;
}

inline Element parse_word(const StructurePtr& st, Cursor& c, bool stop_at_bar);

// Resolve a bare generator/simple name against the structure.
inline Element resolve_name(const StructurePtr& st, const std::string& name, std::size_t pos) {
  const std::string key = st->key();
  if (name == "1") return Element::identity(st);
  if (name == "D") return delta_power(st, 1);

  if (name == "d") {
    if (key == "z") return delta_power(st, 1);
    if (auto gn = std::dynamic_pointer_cast<const GnStructure>(st))
      return simple_element(st, gn->pair_token(1, gn->cartesian()->one()));
    throw ParseError("generator 'd' is not defined for group " + key, pos);
  }
  if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'x')) {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      digits &= std::isdigit(static_cast<unsigned char>(name[i])) != 0;
    if (digits) {
      const bool braid_gen = name[0] == 'a';
      if (braid_gen != (key.rfind("braid:", 0) == 0) ||
          (!braid_gen && key.rfind("torus:", 0) != 0))
        throw ParseError("generator '" + name + "' is not defined for group " + key, pos);
      const std::size_t index = std::stoul(name.substr(1));
      if (index < 1 || index > st->atoms().size())
        throw ParseError("generator index out of range: " + name, pos);
      return simple_element(st, st->atoms()[index - 1]);
    }
  }
  // Fall back to the printed simple names (e.g. braid one-line permutations).
  for (std::uint64_t s = 0; s < st->simple_count(); ++s)
    if (st->simple_name(static_cast<Simple>(s)) == name)
      return simple_element(st, static_cast<Simple>(s));
  throw ParseError("unknown generator '" + name + "' for group " + key, pos);
}

// d^k [ w1 | w2 | ... | wn ] over a G(n) structure.
inline Element parse_gn_bracket(const StructurePtr& st, Cursor& c, long long k) {
  const auto gn = std::dynamic_pointer_cast<const GnStructure>(st);
  if (!gn) throw ParseError("bracketed elements need a G(n) group", c.pos);
  ++c.pos;  // consume '['
  std::vector<Element> comps;
  while (true) {
    comps.push_back(parse_word(gn->base(), c, /*stop_at_bar=*/true));
    c.skip_ws();
    if (c.done()) throw ParseError("unterminated bracket", c.pos);
    if (c.peek() == '|') {
      ++c.pos;
      continue;
    }
    if (c.peek() == ']') {
      ++c.pos;
      break;
    }
    throw ParseError("expected '|' or ']'", c.pos);
  }
  if (comps.size() != gn->copies())
    throw ParseError("expected " + std::to_string(gn->copies()) + " components, got " +
                         std::to_string(comps.size()),
                     c.pos);
  return gn_make(gn, k, comps);
}

inline Element parse_term(const StructurePtr& st, Cursor& c) {
  if (c.peek() == '.') {  // separator emitted by the printer
    ++c.pos;
    return Element::identity(st);
  }
  if (c.peek() == '[') return parse_gn_bracket(st, c, 0);

  const std::size_t start = c.pos;
  std::string name;
  while (!c.done() && is_name_char(c.peek())) name += c.s[c.pos++];
  if (name.empty()) throw ParseError("expected a generator", start);

  long long exponent = 1;
  bool have_exp = false;
  if (!c.done() && c.peek() == '^') {
    ++c.pos;
    exponent = parse_int(c);
    have_exp = true;
  }

  if (name == "d") {
    const std::size_t mark = c.pos;
    c.skip_ws();
    if (!c.done() && c.peek() == '[') return parse_gn_bracket(st, c, exponent);
    c.pos = mark;
  }
  (void)have_exp;
  const Element base = resolve_name(st, name, start);
  return exponent == 1 ? base : power(base, exponent);
}

inline Element parse_word(const StructurePtr& st, Cursor& c, bool stop_at_bar) {
  Element out = Element::identity(st);
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    if (stop_at_bar && (c.peek() == '|' || c.peek() == ']')) break;
    out = multiply(out, parse_term(st, c));
  }
  return out;
}

}  // namespace detail

// Parse a word in the element grammar of the given group and return its
// normal form.  Accepts everything to_text prints, so printing and
// re-parsing is the identity.
inline Element parse_element(const StructurePtr& st, const std::string& word) {
  detail::Cursor c{word};
  Element e = detail::parse_word(st, c, /*stop_at_bar=*/false);
  if (!c.done()) throw ParseError("trailing input", c.pos);
  return e;
}

inline Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + text + "'", 0);
  } catch (const std::out_of_range&) {
    throw ParseError("rational out of range '" + text + "'", 0);
  }
}

}  // namespace garside
