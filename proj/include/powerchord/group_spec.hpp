#pragma once

/**
 * @file group_spec.hpp
 * @brief Parser and printer for group-construction expressions.
 *
 * Grammar (whitespace between tokens is ignored, names are case-sensitive):
 *
 *     spec  := term ( "x" term )*
 *     term  := NAME digits? ( "(" int ( "," int )* ")" )?
 *
 * Recognised atoms: Cn, Dn, Dicn, Q8, Q16, Sn, An, F5, F7, M11, SL(d,q),
 * PSL(d,q), GL(d,q) and G(order,index) for catalog lookups. A name with a
 * digit suffix and a name with one parenthesised parameter are equivalent,
 * so C6 and C(6) parse to the same atom.
 */

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"

namespace powerchord {

struct SpecAtom {
  std::string name;
  std::vector<std::uint64_t> params;

  friend bool operator==(const SpecAtom &, const SpecAtom &) = default;
};

/// A spec is a product of one or more atoms; a single atom is a product of length 1.
struct GroupSpec {
  std::vector<SpecAtom> factors;

  bool is_product() const { return factors.size() >= 2; }
  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

namespace detail {

struct AtomRule {
  std::string_view name;
  bool suffix_form; // rendered as name followed by its single parameter
  std::size_t arity;
};

inline constexpr AtomRule kAtomRules[] = {
    {"C", true, 1},   {"D", true, 1},   {"Dic", true, 1}, {"Q", true, 1},    {"S", true, 1},
    {"A", true, 1},   {"F", true, 1},   {"M", true, 1},   {"SL", false, 2},  {"PSL", false, 2},
    {"GL", false, 2}, {"G", false, 2},
};

inline const AtomRule *find_rule(std::string_view name) {
  for (const auto &r : kAtomRules)
    if (r.name == name)
      return &r;
  return nullptr;
}

/// Parameter validation that does not depend on construction limits.
inline void check_params(const SpecAtom &a, std::size_t offset) {
  const auto bad = [&](const std::string &why) { throw ParseError("invalid parameter for " + a.name + ": " + why, offset); };
  const auto &p = a.params;
  if (a.name == "C" || a.name == "D" || a.name == "S" || a.name == "A") {
    if (p[0] == 0)
      bad("must be positive");
  } else if (a.name == "Dic") {
    if (p[0] < 2)
      bad("must be at least 2");
  } else if (a.name == "Q") {
    if (p[0] != 8 && p[0] != 16)
      bad("only Q8 and Q16 are defined");
  } else if (a.name == "F") {
    if (p[0] != 5 && p[0] != 7)
      bad("only F5 and F7 are defined");
  } else if (a.name == "M") {
    if (p[0] != 11)
      bad("only M11 is defined");
  } else if (a.name == "SL" || a.name == "PSL" || a.name == "GL") {
    if (p[0] < 1 || p[1] < 2)
      bad("expected (d, q) with d >= 1 and q >= 2");
  } else if (a.name == "G") {
    if (p[0] == 0 || p[1] == 0)
      bad("expected (order, index) with both positive");
  }
}

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec out;
    out.factors.push_back(term());
    for (;;) {
      skip_ws();
      if (i_ == s_.size())
        break;
      if (s_[i_] != 'x')
        throw ParseError("expected 'x' between factors", i_);
      ++i_;
      out.factors.push_back(term());
    }
    return out;
  }

private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }

  std::uint64_t integer() {
    const std::size_t start = i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      throw ParseError("expected an integer", i_);
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
      if (v > 1000000000)
        throw ParseError("integer too large", start);
      ++i_;
    }
    if (i_ - start > 1 && s_[start] == '0')
      throw ParseError("malformed integer (leading zero)", start);
    return v;
  }

  SpecAtom term() {
    skip_ws();
    const std::size_t start = i_;
    if (i_ >= s_.size())
      throw ParseError("expected a group name", i_);
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_])))
      ++i_;
    SpecAtom a;
    a.name = std::string(s_.substr(start, i_ - start));
    if (a.name.empty())
      throw ParseError("expected a group name", start);
    const AtomRule *rule = find_rule(a.name);
    if (!rule)
      throw ParseError("unknown group name '" + a.name + "'", start);
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      a.params.push_back(integer());
    } else {
      skip_ws();
      if (i_ < s_.size() && s_[i_] == '(') {
        ++i_;
        for (;;) {
          skip_ws();
          a.params.push_back(integer());
          skip_ws();
          if (i_ < s_.size() && s_[i_] == ',') {
            ++i_;
            continue;
          }
          if (i_ < s_.size() && s_[i_] == ')') {
            ++i_;
            break;
          }
          throw ParseError("expected ',' or ')'", i_);
        }
      }
    }
    if (a.params.size() != rule->arity)
      throw ParseError(a.name + " takes " + std::to_string(rule->arity) + " parameter(s), got " +
                           std::to_string(a.params.size()),
                       start);
    check_params(a, start);
    if (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != 'x')
      throw ParseError("unexpected character '" + std::string(1, s_[i_]) + "'", i_);
    return a;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

} // namespace detail

/// Parse a spec; throws ParseError carrying the byte offset of the problem.
inline GroupSpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

inline std::string render(const SpecAtom &a) {
  const auto *rule = detail::find_rule(a.name);
  if (rule && rule->suffix_form && a.params.size() == 1)
    return a.name + std::to_string(a.params[0]);
  std::string out = a.name + "(";
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(a.params[i]);
  }
  return out + ")";
}

/// Canonical text, factors joined by " x ".
inline std::string render(const GroupSpec &spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i)
      out += " x ";
    out += render(spec.factors[i]);
  }
  return out;
}

} // namespace powerchord
