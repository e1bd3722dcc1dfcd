#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "baaz/errors.hpp"
#include "baaz/structure_io.hpp"
#include "baaz/term.hpp"

namespace baaz {

namespace detail {

struct TermLexer {
  const std::string& text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_space();
    return pos >= text.size();
  }

  // Identifiers cover element names, primed forms, and operation names.
  std::optional<std::string> identifier() {
    skip_space();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '\''))
      ++pos;
    if (pos == start) return std::nullopt;
    return text.substr(start, pos - start);
  }

  bool consume(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

inline std::optional<TermKind> op_by_name(const std::string& name) {
  for (TermKind k :
       {TermKind::add, TermKind::sub, TermKind::mul, TermKind::join,
        TermKind::meet, TermKind::comp, TermKind::sdiff, TermKind::delta,
        TermKind::max_l, TermKind::min_u, TermKind::set_union})
    if (name == term_kind_name(k)) return k;
  return std::nullopt;
}

inline Term parse_term_at(TermLexer& lex, Setting setting,
                          const std::vector<std::string>& names) {
  auto ident = lex.identifier();
  if (!ident)
    throw ParseError("expected a term at position " +
                     std::to_string(lex.pos + 1));

  if (std::optional<TermKind> op = op_by_name(*ident)) {
    if (!lex.consume('('))
      throw ParseError("expected '(' after '" + *ident + "'");
    std::vector<Term> args;
    args.push_back(parse_term_at(lex, setting, names));
    while (lex.consume(','))
      args.push_back(parse_term_at(lex, setting, names));
    if (!lex.consume(')'))
      throw ParseError("expected ')' to close '" + *ident + "'");
    return make_node(setting, *op, std::move(args));
  }

  if (*ident == "x") return make_var(setting);

  std::string name = normalize_name(*ident);
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return make_const(setting, static_cast<int>(i));
  throw ParseError("unknown name '" + *ident + "'");
}

}  // namespace detail

// Parses the term grammar: `x`, element names (primed forms accepted),
// and nested `op(arg, ...)` applications. Operation names double as the
// canonical unparse spelling, so parse and term_to_text round-trip.
inline Term parse_term(const std::string& text, Setting setting,
                       const std::vector<std::string>& names) {
  detail::TermLexer lex{text};
  Term t = detail::parse_term_at(lex, setting, names);
  if (!lex.at_end())
    throw ParseError("trailing input after the term at position " +
                     std::to_string(lex.pos + 1));
  return t;
}

}  // namespace baaz
