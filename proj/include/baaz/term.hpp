#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baaz/errors.hpp"
#include "baaz/subset.hpp"

namespace baaz {

// The setting a term is built for. It fixes both the operations available
// in the term and the value domain of evaluation: elements everywhere
// except Boolean posets, where every node evaluates to a subset.
enum class Setting { field, ring, boolean_algebra, boolean_poset };

inline const char* setting_name(Setting s) {
  switch (s) {
    case Setting::field: return "field";
    case Setting::ring: return "ring";
    case Setting::boolean_algebra: return "boolean_algebra";
    case Setting::boolean_poset: return "boolean_poset";
  }
  return "?";
}

enum class TermKind {
  constant,
  variable,
  add,
  sub,
  mul,
  join,
  meet,
  comp,
  sdiff,
  delta,
  max_l,
  min_u,
  set_union,
};

inline const char* term_kind_name(TermKind k) {
  switch (k) {
    case TermKind::constant: return "const";
    case TermKind::variable: return "x";
    case TermKind::add: return "add";
    case TermKind::sub: return "sub";
    case TermKind::mul: return "mul";
    case TermKind::join: return "join";
    case TermKind::meet: return "meet";
    case TermKind::comp: return "comp";
    case TermKind::sdiff: return "sdiff";
    case TermKind::delta: return "delta";
    case TermKind::max_l: return "max_l";
    case TermKind::min_u: return "min_u";
    case TermKind::set_union: return "union";
  }
  return "?";
}

inline const char* required_setting_text(TermKind k) {
  switch (k) {
    case TermKind::add:
    case TermKind::sub:
    case TermKind::mul:
      return "field or ring";
    case TermKind::join:
    case TermKind::meet:
      return "boolean_algebra";
    case TermKind::comp:
    case TermKind::sdiff:
      return "boolean_algebra or boolean_poset";
    case TermKind::max_l:
    case TermKind::min_u:
    case TermKind::set_union:
      return "boolean_poset";
    default:
      return "any";
  }
}

inline bool kind_allowed(Setting s, TermKind k) {
  switch (k) {
    case TermKind::constant:
    case TermKind::variable:
    case TermKind::delta:
      return true;
    case TermKind::add:
    case TermKind::sub:
    case TermKind::mul:
      return s == Setting::field || s == Setting::ring;
    case TermKind::join:
    case TermKind::meet:
      return s == Setting::boolean_algebra;
    case TermKind::comp:
    case TermKind::sdiff:
      return s == Setting::boolean_algebra || s == Setting::boolean_poset;
    case TermKind::max_l:
    case TermKind::min_u:
    case TermKind::set_union:
      return s == Setting::boolean_poset;
  }
  return false;
}

struct Term {
  TermKind kind = TermKind::variable;
  Setting setting = Setting::ring;
  int value = -1;  // element index, for constants
  std::vector<Term> args;
};

inline Term make_const(Setting s, int element) {
  return Term{TermKind::constant, s, element, {}};
}

inline Term make_var(Setting s) { return Term{TermKind::variable, s, -1, {}}; }

inline Term make_node(Setting s, TermKind k, std::vector<Term> args) {
  if (!kind_allowed(s, k))
    throw EvalError(std::string("construct '") + term_kind_name(k) +
                    "' requires the " + required_setting_text(k) +
                    " setting, not " + setting_name(s));
  bool arity_ok = false;
  switch (k) {
    case TermKind::comp:
    case TermKind::delta:
      arity_ok = args.size() == 1;
      break;
    case TermKind::add:
    case TermKind::sub:
    case TermKind::mul:
    case TermKind::join:
    case TermKind::meet:
    case TermKind::sdiff:
      arity_ok = args.size() == 2;
      break;
    case TermKind::max_l:
    case TermKind::min_u:
    case TermKind::set_union:
      arity_ok = !args.empty();
      break;
    default:
      break;
  }
  if (!arity_ok)
    throw EvalError(std::string("wrong arity for '") + term_kind_name(k) +
                    "'");
  return Term{k, s, -1, std::move(args)};
}

// Grammar text of a term, resolving constants against the carrier names.
inline std::string term_to_text(const Term& t,
                                const std::vector<std::string>& names) {
  switch (t.kind) {
    case TermKind::constant: return names[t.value];
    case TermKind::variable: return "x";
    default: break;
  }
  std::string out = term_kind_name(t.kind);
  out += "(";
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ",";
    out += term_to_text(t.args[i], names);
  }
  return out + ")";
}

// Evaluation outcome: an element in the field/ring/algebra settings, a
// subset of the carrier in the Boolean-poset setting. Singleton subsets
// compare equal to their element.
struct EvalResult {
  Setting setting = Setting::ring;
  int element = -1;
  Mask subset = 0;

  bool is_subset() const { return setting == Setting::boolean_poset; }

  bool equals_element(int e) const {
    if (is_subset()) return subset == unit_mask(e);
    return element == e;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (!is_subset()) return names[element];
    if (is_singleton(subset)) return names[singleton_element(subset)];
    std::string out = "{";
    bool first = true;
    for (int i : mask_elements(subset)) {
      if (!first) out += ", ";
      out += names[i];
      first = false;
    }
    return out + "}";
  }
};

inline EvalResult element_result(Setting s, int e) {
  return EvalResult{s, e, 0};
}

inline EvalResult subset_result(Mask m) {
  return EvalResult{Setting::boolean_poset, -1, m};
}

}  // namespace baaz
