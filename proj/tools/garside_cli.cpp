// Command-line front end: normal forms, summit sets, conjugacy decisions,
// translation-number intervals, class enumeration, root extraction and the
// brute-force oracles, with line-oriented text output or a stable JSON
// schema.
//
// Exit codes: 0 success; 1 negative decision (not conjugate / no root);
// 2 usage or parse error; 3 classes output contains an undecided entry;
// 4 resource cap hit.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/garside.hpp"

using json = nlohmann::json;
using namespace garside;

namespace {

json rational_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

json element_json(const Element& e) {
  json factors = json::array();
  for (Simple s : e.factors()) factors.push_back(e.structure()->simple_name(s));
  return json{{"text", to_text(e)},
              {"inf", e.inf()},
              {"sup", e.sup()},
              {"len", e.canonical_length()},
              {"factors", factors}};
}

struct CommandResult {
  int exit_code = 0;
  std::string text;  // line-oriented output
  json result = json::object();
  json certificates = json::object();
};

struct Invocation {
  std::string group;
  json query = json::object();
};

CommandResult run_nf(const StructurePtr& st, const std::string& word) {
  const Element e = parse_element(st, word);
  CommandResult out;
  out.text = to_text(e) + "\ninf=" + std::to_string(e.inf()) + " sup=" + std::to_string(e.sup()) +
             " len=" + std::to_string(e.canonical_length()) + "\n";
  out.result = element_json(e);
  return out;
}

CommandResult run_conj(const StructurePtr& st, const std::string& gw, const std::string& hw,
                       const Caps& caps) {
  const Element g = parse_element(st, gw);
  const Element h = parse_element(st, hw);
  const ConjugacyCertificate cert = are_conjugate(g, h, caps.summit_members);
  CommandResult out;
  if (cert.conjugate()) {
    out.text = "conjugate u=" + to_text(*cert.conjugator) + "\n";
    out.result = json{{"conjugate", true}};
    out.certificates = json{{"conjugator", element_json(*cert.conjugator)}};
  } else {
    out.exit_code = 1;
    out.text = "not-conjugate\n";
    out.result = json{{"conjugate", false}};
    out.certificates = json{{"summit_a", cert.fingerprint_a}, {"summit_b", cert.fingerprint_b}};
  }
  return out;
}

CommandResult run_summit(const StructurePtr& st, const std::string& word, SummitKind kind,
                         const Caps& caps) {
  const Element g = parse_element(st, word);
  const SummitSet set = summit_set(g, kind, caps.summit_members);
  CommandResult out;
  std::ostringstream text;
  text << "size=" << set.members.size() << " inf_s=" << set.inf_s() << " sup_s=" << set.sup_s()
       << "\n";
  json members = json::array();
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    text << to_text(set.members[i]) << "\tconjugator=" << to_text(set.conjugators[i]) << "\n";
    members.push_back(json{{"element", element_json(set.members[i])},
                           {"conjugator", element_json(set.conjugators[i])}});
  }
  out.text = text.str();
  out.result = json{{"size", set.members.size()},
                    {"inf_s", set.inf_s()},
                    {"sup_s", set.sup_s()},
                    {"members", members}};
  return out;
}

CommandResult run_root(const StructurePtr& st, const std::string& word, long long n,
                       const Caps& caps) {
  const Element g = parse_element(st, word);
  const RootResult r = nth_root(g, n, caps);
  CommandResult out;
  if (r.has_root()) {
    out.text = "root=" + to_text(*r.root) + "\n";
    out.result = json{{"found", true}, {"root", element_json(*r.root)}};
    out.certificates = json{{"diagonal", to_text(*r.diagonal)},
                            {"conjugator", to_text(*r.conjugator)},
                            {"uss_size", r.uss_size}};
  } else {
    out.exit_code = 1;
    out.text = "no-root uss_size=" + std::to_string(r.uss_size) + "\n";
    out.result = json{{"found", false}};
    out.certificates = json{{"uss_size", r.uss_size}};
  }
  return out;
}

CommandResult run_tnum(const StructurePtr& st, const std::string& word, long long power) {
  const Element g = parse_element(st, word);
  const TranslationBounds b = translation_bounds(g, power);
  CommandResult out;
  out.text = "t in (" + b.lower.str() + ", " + b.upper.str() +
             "] witness_power=" + std::to_string(b.witness_power) + "\n";
  out.result = json{{"lower", rational_json(b.lower)},
                    {"upper", rational_json(b.upper)},
                    {"witness_power", b.witness_power}};
  return out;
}

CommandResult run_classes(const StructurePtr& st, const std::string& max_t, long long n_max,
                          const Caps& caps) {
  const Rational r = parse_rational(max_t);
  const auto classes = classes_below(st, r, n_max, caps);
  CommandResult out;
  std::ostringstream text;
  text << "classes=" << classes.size() << "\n";
  json list = json::array();
  bool undecided = false;
  for (const auto& c : classes) {
    text << to_string(c.status) << " " << to_text(c.representative) << "\n";
    list.push_back(
        json{{"status", to_string(c.status)}, {"representative", element_json(c.representative)}});
    undecided |= (c.status == TranslationComparison::Undecided);
  }
  out.text = text.str();
  out.result = json{{"count", classes.size()}, {"classes", list}};
  if (undecided) out.exit_code = 3;
  return out;
}

CommandResult run_oracle_bfs(const StructurePtr& st, const std::string& word, long long radius) {
  const Element g = parse_element(st, word);
  const auto len = oracle::bfs_word_length(g, radius);
  CommandResult out;
  if (len) {
    out.text = "length=" + std::to_string(*len) + "\n";
    out.result = json{{"length", *len}, {"exceeded", false}};
  } else {
    out.text = "exceeded\n";
    out.result = json{{"exceeded", true}};
  }
  return out;
}

CommandResult run_oracle_divisors(const StructurePtr& st, const std::string& word) {
  const Element g = parse_element(st, word);
  auto divisors = oracle::brute_left_divisors(g);
  std::sort(divisors.begin(), divisors.end(),
            [](const Element& a, const Element& b) { return to_text(a) < to_text(b); });
  CommandResult out;
  std::ostringstream text;
  text << "count=" << divisors.size() << "\n";
  json list = json::array();
  for (const Element& d : divisors) {
    text << to_text(d) << "\n";
    list.push_back(to_text(d));
  }
  out.text = text.str();
  out.result = json{{"count", divisors.size()}, {"divisors", list}};
  return out;
}

CommandResult run_oracle_conj(const StructurePtr& st, const std::string& gw, const std::string& hw,
                              int len) {
  const Element g = parse_element(st, gw);
  const Element h = parse_element(st, hw);
  const auto u = oracle::brute_conjugacy(g, h, len);
  CommandResult out;
  if (u) {
    out.text = "conjugator=" + to_text(*u) + "\n";
    out.result = json{{"known", true}};
    out.certificates = json{{"conjugator", element_json(*u)}};
  } else {
    out.text = "unknown\n";
    out.result = json{{"known", false}};
  }
  return out;
}

int emit(const CommandResult& r, const Invocation& inv, bool json_mode) {
  if (json_mode) {
    const json record{{"group", inv.group},
                      {"query", inv.query},
                      {"result", r.result},
                      {"certificates", r.certificates}};
    std::cout << record.dump() << "\n";
  } else {
    std::cout << r.text;
  }
  return r.exit_code;
}

int run_args(const std::vector<std::string>& args, bool force_json);

int run_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open batch file: " << path << "\n";
    return 2;
  }
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> args;
    std::string cur;
    bool quoted = false;
    bool have = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
        have = true;
        continue;
      }
      if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
        if (have || !cur.empty()) args.push_back(cur);
        cur.clear();
        have = false;
        continue;
      }
      cur += c;
    }
    if (have || !cur.empty()) args.push_back(cur);
    if (args.empty()) continue;
    run_args(args, /*force_json=*/true);  // one record per line, errors included
    std::cout.flush();
  }
  return 0;
}

int run_args(const std::vector<std::string>& args, bool force_json) {
  CLI::App app{"Garside group calculator"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // global flags may follow the subcommand
  bool json_mode = false;
  long long cap_override = -1;
  std::string batch_file;
  app.add_flag("--json", json_mode, "emit one JSON record");
  app.add_option("--cap", cap_override, "override all resource caps");
  app.add_option("--batch", batch_file, "run one command per line of a file");

  std::string group, word, word2, max_t = "0";
  long long root_degree = 2, tnum_power = 1, nmax = 64, radius = 4;
  int conj_len = 4;

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("group", group)->required();
  nf->add_option("word", word)->required();

  auto* conj = app.add_subcommand("conj", "decide conjugacy with certificate");
  conj->add_option("group", group)->required();
  conj->add_option("lhs", word)->required();
  conj->add_option("rhs", word2)->required();

  auto* sss = app.add_subcommand("sss", "super summit set");
  sss->add_option("group", group)->required();
  sss->add_option("g", word)->required();

  auto* uss = app.add_subcommand("uss", "ultra summit set");
  uss->add_option("group", group)->required();
  uss->add_option("g", word)->required();

  auto* root = app.add_subcommand("root", "extract an n-th root");
  root->add_option("group", group)->required();
  root->add_option("g", word)->required();
  root->add_option("n", root_degree)->required();

  auto* tnum = app.add_subcommand("tnum", "translation-number interval");
  tnum->add_option("group", group)->required();
  tnum->add_option("g", word)->required();
  tnum->add_option("--power", tnum_power, "witness power N");

  auto* classes = app.add_subcommand("classes", "conjugacy classes below a threshold");
  classes->add_option("group", group)->required();
  classes->add_option("--max-t", max_t, "translation threshold (rational)")->required();
  classes->add_option("--nmax", nmax, "power budget for the decision");

  auto* orc = app.add_subcommand("oracle", "brute-force validators");
  orc->require_subcommand(0, 1);
  auto* obfs = orc->add_subcommand("bfs", "shortest word length by search");
  obfs->add_option("group", group)->required();
  obfs->add_option("g", word)->required();
  obfs->add_option("--radius", radius, "search radius");
  auto* odiv = orc->add_subcommand("divisors", "positive left divisors");
  odiv->add_option("group", group)->required();
  odiv->add_option("g", word)->required();
  auto* oconj = orc->add_subcommand("conj", "one-sided conjugacy search");
  oconj->add_option("group", group)->required();
  oconj->add_option("lhs", word)->required();
  oconj->add_option("rhs", word2)->required();
  oconj->add_option("--len", conj_len, "conjugator word length bound");

  std::vector<std::string> cli_args(args.rbegin(), args.rend());
  try {
    app.parse(cli_args);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (!batch_file.empty()) {
    if (force_json) {  // already inside a batch run
      std::cerr << "--batch cannot be nested\n";
      return 2;
    }
    return run_batch(batch_file);
  }
  json_mode |= force_json;

  Invocation inv;
  inv.group = group;

  try {
    const Caps caps =
        cap_override >= 0 ? Caps::uniform(static_cast<std::uint64_t>(cap_override)) : Caps{};
    CommandResult r;
    if (nf->parsed()) {
      inv.query = json{{"command", "nf"}, {"word", word}};
      r = run_nf(make_structure(group, caps), word);
    } else if (conj->parsed()) {
      inv.query = json{{"command", "conj"}, {"g", word}, {"h", word2}};
      r = run_conj(make_structure(group, caps), word, word2, caps);
    } else if (sss->parsed()) {
      inv.query = json{{"command", "sss"}, {"g", word}};
      r = run_summit(make_structure(group, caps), word, SummitKind::Super, caps);
    } else if (uss->parsed()) {
      inv.query = json{{"command", "uss"}, {"g", word}};
      r = run_summit(make_structure(group, caps), word, SummitKind::Ultra, caps);
    } else if (root->parsed()) {
      inv.query = json{{"command", "root"}, {"g", word}, {"n", root_degree}};
      r = run_root(make_structure(group, caps), word, root_degree, caps);
    } else if (tnum->parsed()) {
      inv.query = json{{"command", "tnum"}, {"g", word}, {"power", tnum_power}};
      r = run_tnum(make_structure(group, caps), word, tnum_power);
    } else if (classes->parsed()) {
      inv.query = json{{"command", "classes"}, {"max_t", max_t}, {"nmax", nmax}};
      r = run_classes(make_structure(group, caps), max_t, nmax, caps);
    } else if (orc->parsed()) {
      if (obfs->parsed()) {
        inv.query = json{{"command", "oracle bfs"}, {"g", word}, {"radius", radius}};
        r = run_oracle_bfs(make_structure(group, caps), word, radius);
      } else if (odiv->parsed()) {
        inv.query = json{{"command", "oracle divisors"}, {"g", word}};
        r = run_oracle_divisors(make_structure(group, caps), word);
      } else if (oconj->parsed()) {
        inv.query = json{{"command", "oracle conj"}, {"g", word}, {"h", word2}, {"len", conj_len}};
        r = run_oracle_conj(make_structure(group, caps), word, word2, conj_len);
      } else {
        std::cerr << "oracle needs a subcommand (bfs|divisors|conj)\n";
        return 2;
      }
    } else {
      std::cout << app.help();
      return 2;
    }
    return emit(r, inv, json_mode);
  } catch (const ResourceError& e) {
    if (json_mode) {
      const json record{{"group", inv.group},
                        {"query", inv.query},
                        {"result", json{{"error", e.what()}}},
                        {"certificates", json::object()}};
      std::cout << record.dump() << "\n";
    } else {
      std::cerr << "resource cap: " << e.what() << "\n";
    }
    return 4;
  } catch (const std::exception& e) {
    if (json_mode) {
      const json record{{"group", inv.group},
                        {"query", inv.query},
                        {"result", json{{"error", e.what()}}},
                        {"certificates", json::object()}};
      std::cout << record.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_args(args, /*force_json=*/false);
}
