#pragma once

// Text grammar for sequences: `seq := term*`, `term := label ("^" INT)?`.
// Terms are separated by whitespace, '*' or a middle dot; a label may be
// wrapped in one pair of parentheses, e.g. `g^3 (-g)^3` or `e0 e1 e2 e3`.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsum/error.hpp"
#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

namespace detail {

struct RawTerm {
  std::string label;
  std::uint32_t exponent = 1;
};

inline std::vector<RawTerm> tokenize_sequence(std::string_view text) {
  std::string normalized;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+00B7 MIDDLE DOT
    if (static_cast<unsigned char>(text[i]) == 0xC2 && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0xB7) {
      normalized += ' ';
      ++i;
    } else if (text[i] == '*' || text[i] == '\t' || text[i] == '\n' || text[i] == ',') {
      // commas only separate terms outside parentheses; handled below
      normalized += text[i] == ',' ? ',' : ' ';
    } else {
      normalized += text[i];
    }
  }

  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char c : normalized) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ' ' || (c == ',' && depth == 0)) && depth == 0) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw error(errc::parse_error, "unbalanced parentheses in '" + std::string(text) + "'");
  if (!cur.empty()) tokens.push_back(std::move(cur));

  if (tokens.size() == 1 && tokens[0] == "1") return {};

  std::vector<RawTerm> out;
  for (auto& tok : tokens) {
    RawTerm t;
    const auto caret = tok.rfind('^');
    if (caret != std::string::npos && caret > 0 && tok.find(')', caret) == std::string::npos) {
      const auto exp_text = std::string_view(tok).substr(caret + 1);
      auto e = parse_int(exp_text);
      if (!e) throw error(errc::parse_error, "bad exponent in '" + tok + "'");
      if (*e < 0) throw error(errc::parse_error, "negative exponent in '" + tok + "'");
      t.exponent = static_cast<std::uint32_t>(*e);
      t.label = tok.substr(0, caret);
    } else {
      t.label = tok;
    }
    if (t.label.empty()) throw error(errc::parse_error, "empty label in '" + tok + "'");
    out.push_back(std::move(t));
  }
  return out;
}

inline std::string_view strip_parens(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

inline std::optional<GroupElement> try_element(const GroupSpec& spec, std::string_view label) {
  try {
    return parse_element(spec, label);
  } catch (const error&) {
    return std::nullopt;
  }
}

inline GroupElement element_from_label(const GroupSpec& spec, std::string_view label) {
  if (auto g = try_element(spec, label)) return *g;
  if (auto g = try_element(spec, strip_parens(label))) return *g;
  throw error(errc::parse_error, "unknown label '" + std::string(label) + "'");
}

}  // namespace detail

/// Parses terms as group elements without reference to an alphabet; used to
/// build B(supp S) for infinite groups.
inline std::vector<std::pair<GroupElement, std::uint32_t>> parse_terms(std::string_view text, const GroupSpec& spec) {
  std::vector<std::pair<GroupElement, std::uint32_t>> out;
  for (const auto& t : detail::tokenize_sequence(text))
    out.emplace_back(detail::element_from_label(spec, t.label), t.exponent);
  return out;
}

inline Sequence parse_sequence(std::string_view text, const AlphabetPtr& alphabet) {
  Exponents e(alphabet->size(), 0);
  for (const auto& t : detail::tokenize_sequence(text)) {
    std::optional<std::size_t> idx = alphabet->find(t.label);
    if (!idx) idx = alphabet->find(detail::strip_parens(t.label));
    if (!idx) {
      const auto g = detail::element_from_label(alphabet->spec(), t.label);
      const auto letters = alphabet->letters_of_class(g);
      if (letters.empty()) throw error(errc::parse_error, "no letter of class " + to_string(g) + " in alphabet");
      if (letters.size() > 1)
        throw error(errc::parse_error, "class " + to_string(g) + " has several letters; use an explicit label");
      idx = letters.front();
    }
    e[*idx] += t.exponent;
  }
  return Sequence(alphabet, std::move(e));
}

}  // namespace zsum
