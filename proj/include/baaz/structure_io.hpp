#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "baaz/errors.hpp"
#include "baaz/poset.hpp"
#include "baaz/ring.hpp"

namespace baaz {

// A structure file holds either a poset or a ring. Boolean algebras travel
// as poset files; classification recovers the rest.
using Structure = std::variant<FinitePoset, UnitaryRing>;

inline const std::string& structure_label(const Structure& s) {
  if (const FinitePoset* p = std::get_if<FinitePoset>(&s)) return p->label();
  return std::get<UnitaryRing>(s).label();
}

inline const std::vector<std::string>& structure_carrier(const Structure& s) {
  if (const FinitePoset* p = std::get_if<FinitePoset>(&s)) return p->carrier();
  return std::get<UnitaryRing>(s).carrier();
}

// Primed names are written `aprime` canonically; a trailing apostrophe is
// accepted on input and folded into the suffix.
inline std::string normalize_name(std::string name) {
  if (!name.empty() && name.back() == '\'')
    name = name.substr(0, name.size() - 1) + "prime";
  return name;
}

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

[[noreturn]] inline void parse_fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

// Parses the line-oriented structure format:
//   kind poset|ring
//   name <label>
//   elements <names...>
//   poset bodies:  cover <a> < <b>      complement <x> -> <y>
//   ring bodies:   zero <z>   one <o>   add <row> : <entries>   mul ...
// `#` starts a comment. Validation is delegated to the builders, so every
// semantic guarantee of build_poset / build_ring applies to parsed files.
inline Structure parse_structure(const std::string& text) {
  std::optional<bool> is_poset;
  std::string label;
  std::vector<std::string> elements;
  bool have_elements = false;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::pair<std::string, std::string>> complements;
  std::string zero, one;
  std::map<std::string, std::vector<std::string>> add_rows, mul_rows;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (size_t hash = raw.find('#'); hash != std::string::npos)
      raw = raw.substr(0, hash);
    std::vector<std::string> tok = detail::split_tokens(raw);
    if (tok.empty()) continue;
    const std::string& head = tok[0];

    if (head == "kind") {
      if (tok.size() != 2 || (tok[1] != "poset" && tok[1] != "ring"))
        detail::parse_fail(line_no, "expected 'kind poset' or 'kind ring'");
      if (is_poset.has_value())
        detail::parse_fail(line_no, "duplicate kind line");
      is_poset = tok[1] == "poset";
      continue;
    }
    if (!is_poset.has_value())
      detail::parse_fail(line_no, "the first directive must be 'kind'");

    if (head == "name") {
      if (tok.size() != 2)
        detail::parse_fail(line_no, "expected 'name <label>'");
      label = tok[1];
    } else if (head == "elements") {
      if (tok.size() < 2)
        detail::parse_fail(line_no, "expected at least one element name");
      if (have_elements)
        detail::parse_fail(line_no, "duplicate elements line");
      for (size_t i = 1; i < tok.size(); ++i)
        elements.push_back(normalize_name(tok[i]));
      have_elements = true;
    } else if (head == "cover" && *is_poset) {
      if (tok.size() != 4 || tok[2] != "<")
        detail::parse_fail(line_no, "expected 'cover <a> < <b>'");
      covers.emplace_back(normalize_name(tok[1]), normalize_name(tok[3]));
    } else if (head == "complement" && *is_poset) {
      if (tok.size() != 4 || tok[2] != "->")
        detail::parse_fail(line_no, "expected 'complement <x> -> <y>'");
      complements.emplace_back(normalize_name(tok[1]), normalize_name(tok[3]));
    } else if (head == "zero" && !*is_poset) {
      if (tok.size() != 2) detail::parse_fail(line_no, "expected 'zero <name>'");
      zero = normalize_name(tok[1]);
    } else if (head == "one" && !*is_poset) {
      if (tok.size() != 2) detail::parse_fail(line_no, "expected 'one <name>'");
      one = normalize_name(tok[1]);
    } else if ((head == "add" || head == "mul") && !*is_poset) {
      if (tok.size() < 4 || tok[2] != ":")
        detail::parse_fail(line_no,
                           "expected '" + head + " <row> : <entries>'");
      std::string row = normalize_name(tok[1]);
      std::vector<std::string> entries;
      for (size_t i = 3; i < tok.size(); ++i)
        entries.push_back(normalize_name(tok[i]));
      auto& rows = head == "add" ? add_rows : mul_rows;
      if (rows.count(row))
        detail::parse_fail(line_no, "duplicate " + head + " row '" + row + "'");
      rows[row] = std::move(entries);
    } else {
      detail::parse_fail(line_no, "unknown directive '" + head + "'");
    }
  }

  if (!is_poset.has_value()) throw ParseError("empty input: no kind line");
  if (!have_elements) throw ParseError("missing elements line");

  if (*is_poset) return build_poset(elements, covers, complements, label);

  if (zero.empty()) throw ParseError("ring file is missing the zero line");
  if (one.empty()) throw ParseError("ring file is missing the one line");
  std::vector<std::vector<std::string>> add_table, mul_table;
  for (const std::string& e : elements) {
    for (const auto& [what, rows] :
         {std::pair{"add", &add_rows}, std::pair{"mul", &mul_rows}}) {
      auto it = rows->find(e);
      if (it == rows->end())
        throw ParseError(std::string(what) + " table has no row for '" + e +
                         "'");
      if (it->second.size() != elements.size())
        throw ParseError(std::string(what) + " row '" + e + "' has " +
                         std::to_string(it->second.size()) + " entries, want " +
                         std::to_string(elements.size()));
    }
    add_table.push_back(add_rows[e]);
    mul_table.push_back(mul_rows[e]);
  }
  if (add_rows.size() != elements.size() || mul_rows.size() != elements.size())
    throw ParseError("table row for an undeclared element");
  return build_ring(elements, add_table, mul_table, zero, one, label);
}

// Canonical emission: elements in carrier order; covers as the transitive
// reduction, sorted lexicographically by names; complements (when resolved)
// for every element in carrier order; ring tables row by row in carrier
// order. parse(emit(s)) reproduces s, and emit(parse(f)) == f for files
// already in this form.
inline std::string emit_structure(const FinitePoset& p) {
  std::ostringstream out;
  out << "kind poset\n";
  if (!p.label().empty()) out << "name " << p.label() << "\n";
  out << "elements";
  for (const std::string& n : p.carrier()) out << " " << n;
  out << "\n";
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : p.cover_pairs())
    covers.emplace_back(p.name_of(lo), p.name_of(hi));
  std::sort(covers.begin(), covers.end());
  for (const auto& [lo, hi] : covers) out << "cover " << lo << " < " << hi << "\n";
  if (p.has_complements())
    for (int x = 0; x < p.size(); ++x)
      out << "complement " << p.name_of(x) << " -> "
          << p.name_of(p.complement_of(x)) << "\n";
  return out.str();
}

inline std::string emit_structure(const UnitaryRing& r) {
  std::ostringstream out;
  out << "kind ring\n";
  if (!r.label().empty()) out << "name " << r.label() << "\n";
  out << "elements";
  for (const std::string& n : r.carrier()) out << " " << n;
  out << "\n";
  out << "zero " << r.name_of(r.zero()) << "\n";
  out << "one " << r.name_of(r.one()) << "\n";
  for (bool adding : {true, false})
    for (int a = 0; a < r.size(); ++a) {
      out << (adding ? "add " : "mul ") << r.name_of(a) << " :";
      for (int b = 0; b < r.size(); ++b)
        out << " " << r.name_of(adding ? r.add(a, b) : r.mul(a, b));
      out << "\n";
    }
  return out.str();
}

inline std::string emit_structure(const Structure& s) {
  if (const FinitePoset* p = std::get_if<FinitePoset>(&s))
    return emit_structure(*p);
  return emit_structure(std::get<UnitaryRing>(s));
}

}  // namespace baaz
