#pragma once

#include <cctype>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "afmx/framework.hpp"

namespace afmx {

/// External argument names <-> internal identifiers 1..n, in first-declaration order.
class NameMap {
public:
  NameMap() = default;

  /// Names "1".."n".
  static NameMap numeric(int n) {
    NameMap m;
    for (int i = 1; i <= n; ++i) m.add(std::to_string(i));
    return m;
  }

  /// Returns the new identifier; throws ParseError on a repeated name.
  Arg add(const std::string& name) {
    if (name.empty()) throw ParseError("empty argument name");
    auto [it, inserted] = ids_.emplace(name, static_cast<Arg>(names_.size() + 1));
    if (!inserted) throw ParseError("argument '" + name + "' declared twice");
    names_.push_back(name);
    return it->second;
  }

  bool has(const std::string& name) const { return ids_.count(name) != 0; }

  Arg id(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw ParseError("undeclared argument '" + name + "'");
    return it->second;
  }

  const std::string& name(Arg a) const { return names_.at(a - 1); }
  int size() const { return static_cast<int>(names_.size()); }

  friend bool operator==(const NameMap& a, const NameMap& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Arg> ids_;
};

struct ParsedFramework {
  Framework framework;
  NameMap names;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

} // namespace detail

/// Trivial graph format: one argument per line (first token is the name), a
/// line holding only "#", then one "src dst" attack per line.
inline ParsedFramework parse_tgf(std::string_view text) {
  NameMap names;
  std::vector<Attack> attacks;
  bool in_attacks = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    const bool last = nl == text.size();
    pos = nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view line = detail::trim(raw);
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (!in_attacks) {
      if (line == "#") {
        in_attacks = true;
      } else if (line.empty()) {
        if (!last) throw ParseError(where + "empty argument name");
      } else {
        names.add(detail::split_ws(line).front());
      }
    } else if (!line.empty()) {
      const auto tok = detail::split_ws(line);
      if (tok.size() < 2) throw ParseError(where + "attack needs a source and a target");
      if (!names.has(tok[0])) throw ParseError(where + "undeclared argument '" + tok[0] + "'");
      if (!names.has(tok[1])) throw ParseError(where + "undeclared argument '" + tok[1] + "'");
      attacks.push_back({names.id(tok[0]), names.id(tok[1])});
    }
    if (last) break;
  }
  if (!in_attacks) throw ParseError("missing '#' separator between arguments and attacks");
  return {Framework(names.size(), std::move(attacks)), std::move(names)};
}

/// Aspartix-style facts: arg(X). att(X,Y). Whitespace anywhere between
/// tokens; '%' starts a comment running to end of line. att facts may come
/// before the arg facts they mention, but every name must be declared.
inline ParsedFramework parse_apx(std::string_view text) {
  std::size_t i = 0;
  int line_no = 1;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + msg);
  };
  auto skip = [&] {
    while (i < text.size()) {
      const char c = text[i];
      if (c == '%') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_no;
        ++i;
      } else {
        break;
      }
    }
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw fail(std::string("expected '") + c + "'");
    ++i;
  };
  auto word = [&] {
    skip();
    const std::size_t start = i;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '(' || c == ')' || c == ',' || c == '.' || c == '%' || std::isspace(static_cast<unsigned char>(c))) break;
      ++i;
    }
    if (i == start) throw fail("expected a name");
    return std::string(text.substr(start, i - start));
  };

  NameMap names;
  struct PendingAttack {
    std::string from, to;
    int line;
  };
  std::vector<PendingAttack> pending;
  while (true) {
    skip();
    if (i >= text.size()) break;
    const std::string head = word();
    if (head == "arg") {
      expect('(');
      const std::string a = word();
      expect(')');
      expect('.');
      try {
        names.add(a);
      } catch (const ParseError& e) {
        throw fail(e.what());
      }
    } else if (head == "att") {
      const int at = line_no;
      expect('(');
      std::string a = word();
      expect(',');
      std::string b = word();
      expect(')');
      expect('.');
      pending.push_back({std::move(a), std::move(b), at});
    } else {
      throw fail("unknown fact '" + head + "'");
    }
  }

  std::vector<Attack> attacks;
  attacks.reserve(pending.size());
  for (const auto& p : pending) {
    for (const auto* nm : {&p.from, &p.to})
      if (!names.has(*nm)) throw ParseError("line " + std::to_string(p.line) + ": undeclared argument '" + *nm + "'");
    attacks.push_back({names.id(p.from), names.id(p.to)});
  }
  return {Framework(names.size(), std::move(attacks)), std::move(names)};
}

inline std::string write_tgf(const Framework& f, const NameMap& names) {
  std::string out;
  for (Arg a = 1; a <= f.size(); ++a) out += names.name(a) + "\n";
  out += "#\n";
  for (const auto& at : f.attacks()) out += names.name(at.attacker) + " " + names.name(at.target) + "\n";
  return out;
}

inline std::string write_apx(const Framework& f, const NameMap& names) {
  std::string out;
  for (Arg a = 1; a <= f.size(); ++a) out += "arg(" + names.name(a) + ").\n";
  for (const auto& at : f.attacks()) out += "att(" + names.name(at.attacker) + "," + names.name(at.target) + ").\n";
  return out;
}

/// "[a,b,c]" with members in ascending internal order, rendered by name.
inline std::string format_set(const ArgSet& s, const NameMap& names) {
  std::string out = "[";
  bool first = true;
  for (Arg a : s) {
    if (!first) out += ",";
    out += names.name(a);
    first = false;
  }
  return out + "]";
}

struct GeneratorConfig {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Random framework: each ordered pair (i, j), self-pairs included, visited
/// row-major over 1..n, is an attack iff u < p, where u = (x >> 11) * 2^-53 and
/// x is the next output of std::mt19937_64 seeded with cfg.seed. Both the
/// engine and this mapping are fully specified, so output is identical on
/// every platform.
inline Framework generate(const GeneratorConfig& cfg) {
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw UsageError("attack probability must lie in [0, 1]");
  if (cfg.n < 0) throw UsageError("argument count must be non-negative");
  std::mt19937_64 engine(cfg.seed);
  std::vector<Attack> attacks;
  for (Arg i = 1; i <= cfg.n; ++i)
    for (Arg j = 1; j <= cfg.n; ++j) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (u < cfg.p) attacks.push_back({i, j});
    }
  return Framework(cfg.n, std::move(attacks));
}

} // namespace afmx
