#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baaz/boolean_algebra.hpp"
#include "baaz/errors.hpp"
#include "baaz/poset.hpp"
#include "baaz/ring.hpp"
#include "baaz/subset.hpp"
#include "baaz/term.hpp"

namespace baaz {

// Baaz delta on a ring: 0 at zero, 1 everywhere else.
inline int baaz_delta_elem(const UnitaryRing& r, int x) {
  return x == r.zero() ? r.zero() : r.one();
}

// Baaz delta on subsets of a bounded poset: {0} goes to 0, every other
// nonempty subset to 1. The empty set signals a malformed structure or an
// evaluator bug; cones in bounded finite posets are never empty.
inline int baaz_delta_subset(const FinitePoset& p, Mask a) {
  if (!p.bounded())
    throw EvalError("delta on subsets requires a bounded poset");
  if (a == 0) throw EvalError("empty cone");
  return a == unit_mask(*p.bottom()) ? *p.bottom() : *p.top();
}

// The symmetric-difference operator x + y := Min U(L(x',y), L(x,y')),
// a subset of the carrier.
inline Mask sdiff_poset(const FinitePoset& p, int x, int y) {
  if (!p.bounded() || !p.has_complements())
    throw EvalError(
        "the + operator requires a bounded complemented poset with a "
        "resolved complement map");
  int xc = p.complement_of(x);
  int yc = p.complement_of(y);
  Mask left = p.lower_cone(unit_mask(xc) | unit_mask(y));
  Mask right = p.lower_cone(unit_mask(x) | unit_mask(yc));
  return p.minimal(p.upper_cone(left | right));
}

// A function with finite support: distinct points a_1..a_n with values
// f(a_i), all from one carrier.
struct SupportFunction {
  std::vector<std::pair<int, int>> points;
  int size() const { return static_cast<int>(points.size()); }
  int point(int i) const { return points[i].first; }
  int value(int i) const { return points[i].second; }
};

inline SupportFunction make_support(
    const std::vector<std::pair<int, int>>& points, int carrier_size,
    const std::vector<std::string>* names = nullptr) {
  if (points.empty())
    throw ValidationError("support must contain at least one point");
  for (size_t i = 0; i < points.size(); ++i) {
    auto [a, v] = points[i];
    if (a < 0 || a >= carrier_size || v < 0 || v >= carrier_size)
      throw ValidationError("support point out of carrier range");
    for (size_t j = 0; j < i; ++j)
      if (points[j].first == a)
        throw ValidationError(
            "duplicate support point" +
            (names ? " '" + (*names)[a] + "'" : std::string()));
  }
  return SupportFunction{points};
}

// An interpolation: the term p plus its building blocks p_i, one per
// support point. Each p_i takes the value 1 at its own point and 0 at the
// other support points, so p hits f exactly on the support.
struct Interpolation {
  Setting setting = Setting::ring;
  Term p;
  std::vector<Term> basis;
  SupportFunction support;
};

namespace detail {

inline Term fold_binary(Setting s, TermKind k, const std::vector<Term>& parts,
                        const Term& if_empty) {
  if (parts.empty()) return if_empty;
  Term acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i)
    acc = make_node(s, k, {std::move(acc), parts[i]});
  return acc;
}

}  // namespace detail

// Classical Lagrange interpolation over a finite field: the baseline the
// delta constructions generalize. Inverses are found by exhaustive search.
inline Interpolation lagrange_field(const UnitaryRing& f,
                                    const SupportFunction& s) {
  if (!f.is_field())
    throw ValidationError("'" + f.label() + "' is not a field");
  const Setting st = Setting::field;
  Interpolation out;
  out.setting = st;
  out.support = s;
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    std::vector<Term> factors;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      int diff = f.sub(s.point(i), s.point(j));
      auto inv = f.mul_inverse(diff);
      if (!inv)
        throw ValidationError("'" + f.name_of(diff) + "' has no inverse in '" +
                              f.label() + "'");
      Term factor = make_node(
          st, TermKind::mul,
          {make_node(st, TermKind::sub,
                     {make_var(st), make_const(st, s.point(j))}),
           make_const(st, *inv)});
      factors.push_back(std::move(factor));
    }
    out.basis.push_back(
        detail::fold_binary(st, TermKind::mul, factors, make_const(st, f.one())));
  }
  std::vector<Term> summands;
  for (int i = 0; i < n; ++i)
    summands.push_back(make_node(
        st, TermKind::mul, {make_const(st, s.value(i)), out.basis[i]}));
  out.p = detail::fold_binary(st, TermKind::add, summands,
                              make_const(st, f.zero()));
  return out;
}

// Interpolation over a unitary ring with the Baaz delta:
//   p_i(x) = prod over j != i of delta(x - a_j),  p(x) = sum f(a_i) p_i(x),
// the value f(a_i) multiplied on the left. Works in noncommutative rings.
inline Interpolation interpolate_ring(const UnitaryRing& r,
                                      const SupportFunction& s) {
  if (r.is_trivial())
    throw ValidationError("interpolation over the trivial ring is refused");
  const Setting st = Setting::ring;
  Interpolation out;
  out.setting = st;
  out.support = s;
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    std::vector<Term> factors;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      factors.push_back(make_node(
          st, TermKind::delta,
          {make_node(st, TermKind::sub,
                     {make_var(st), make_const(st, s.point(j))})}));
    }
    out.basis.push_back(
        detail::fold_binary(st, TermKind::mul, factors, make_const(st, r.one())));
  }
  std::vector<Term> summands;
  for (int i = 0; i < n; ++i)
    summands.push_back(make_node(
        st, TermKind::mul, {make_const(st, s.value(i)), out.basis[i]}));
  out.p = detail::fold_binary(st, TermKind::add, summands,
                              make_const(st, r.zero()));
  return out;
}

// How the summands f(a_i) ∧ p_i(x) are combined over a Boolean algebra.
// The two forms agree on every support point.
enum class BooleanSumForm { join, symmetric_difference };

// Interpolation over a Boolean algebra:
//   p_i(x) = meet over j != i of delta(x + a_j),
//   p(x)   = join of f(a_i) ∧ p_i(x)   (or their symmetric difference).
inline Interpolation interpolate_boolean_algebra(
    const BooleanAlgebra& a, const SupportFunction& s,
    BooleanSumForm form = BooleanSumForm::join) {
  const Setting st = Setting::boolean_algebra;
  Interpolation out;
  out.setting = st;
  out.support = s;
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    std::vector<Term> factors;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      factors.push_back(make_node(
          st, TermKind::delta,
          {make_node(st, TermKind::sdiff,
                     {make_var(st), make_const(st, s.point(j))})}));
    }
    out.basis.push_back(
        detail::fold_binary(st, TermKind::meet, factors, make_const(st, a.one())));
  }
  std::vector<Term> summands;
  for (int i = 0; i < n; ++i)
    summands.push_back(make_node(
        st, TermKind::meet, {make_const(st, s.value(i)), out.basis[i]}));
  TermKind sum_kind = form == BooleanSumForm::join ? TermKind::join
                                                   : TermKind::sdiff;
  out.p = detail::fold_binary(st, sum_kind, summands,
                              make_const(st, a.zero()));
  return out;
}

// The raw operator-term construction over a bounded complemented poset:
//   p_i(x) = max_l over j != i of delta(sdiff(x, a_j))   (the wedge),
//   p(x)   = min_u of max_l(f(a_i), p_i(x)) over all i.
// Distributivity is NOT checked here; on a non-distributive poset the
// construction exists but loses the interpolation property.
inline Interpolation poset_interpolation_term(const FinitePoset& p,
                                              const SupportFunction& s) {
  if (!p.bounded() || !p.has_complements())
    throw ValidationError(
        "operator-term interpolation requires a bounded complemented poset");
  const Setting st = Setting::boolean_poset;
  Interpolation out;
  out.setting = st;
  out.support = s;
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    std::vector<Term> parts;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      parts.push_back(make_node(
          st, TermKind::delta,
          {make_node(st, TermKind::sdiff,
                     {make_var(st), make_const(st, s.point(j))})}));
    }
    Term wedge = parts.empty()
                     ? make_const(st, *p.top())
                     : make_node(st, TermKind::max_l, std::move(parts));
    out.basis.push_back(std::move(wedge));
  }
  std::vector<Term> branches;
  for (int i = 0; i < n; ++i)
    branches.push_back(make_node(
        st, TermKind::max_l, {make_const(st, s.value(i)), out.basis[i]}));
  out.p = make_node(st, TermKind::min_u, std::move(branches));
  return out;
}

// Interpolation over a Boolean poset; classification is enforced.
inline Interpolation interpolate_boolean_poset(const FinitePoset& p,
                                               const SupportFunction& s) {
  StructureClassification c = classify(p);
  if (!c.is_boolean_poset) {
    std::string why = !c.is_bounded        ? "not bounded"
                      : !c.is_complemented ? "not complemented"
                                           : "not distributive";
    throw ValidationError("'" + p.label() + "' is not a Boolean poset: " +
                          why);
  }
  return poset_interpolation_term(p, s);
}

// ---------------------------------------------------------------------------
// Evaluation

inline int eval_term(const UnitaryRing& r, const Term& t, int x) {
  if (t.setting != Setting::field && t.setting != Setting::ring)
    throw EvalError(std::string("term in the ") + setting_name(t.setting) +
                    " setting cannot be evaluated over a ring");
  switch (t.kind) {
    case TermKind::constant: return t.value;
    case TermKind::variable: return x;
    case TermKind::add:
      return r.add(eval_term(r, t.args[0], x), eval_term(r, t.args[1], x));
    case TermKind::sub:
      return r.sub(eval_term(r, t.args[0], x), eval_term(r, t.args[1], x));
    case TermKind::mul:
      return r.mul(eval_term(r, t.args[0], x), eval_term(r, t.args[1], x));
    case TermKind::delta:
      return baaz_delta_elem(r, eval_term(r, t.args[0], x));
    default:
      throw EvalError(std::string("operation '") + term_kind_name(t.kind) +
                      "' is not available over a ring");
  }
}

inline int eval_term(const BooleanAlgebra& a, const Term& t, int x) {
  if (t.setting != Setting::boolean_algebra)
    throw EvalError(std::string("term in the ") + setting_name(t.setting) +
                    " setting cannot be evaluated over a Boolean algebra");
  switch (t.kind) {
    case TermKind::constant: return t.value;
    case TermKind::variable: return x;
    case TermKind::join:
      return a.join(eval_term(a, t.args[0], x), eval_term(a, t.args[1], x));
    case TermKind::meet:
      return a.meet(eval_term(a, t.args[0], x), eval_term(a, t.args[1], x));
    case TermKind::comp:
      return a.comp(eval_term(a, t.args[0], x));
    case TermKind::sdiff:
      return symmetric_difference(a, eval_term(a, t.args[0], x),
                                  eval_term(a, t.args[1], x));
    case TermKind::delta: {
      int v = eval_term(a, t.args[0], x);
      return v == a.zero() ? a.zero() : a.one();
    }
    default:
      throw EvalError(std::string("operation '") + term_kind_name(t.kind) +
                      "' is not available over a Boolean algebra");
  }
}

// Boolean-poset evaluation: every node yields a subset of the carrier.
// Complement and sdiff are element operations, so they accept singletons
// only; max_l / min_u take the union of their arguments' values before the
// cone-and-extremal step.
inline Mask eval_term_subset(const FinitePoset& p, const Term& t, int x) {
  if (t.setting != Setting::boolean_poset)
    throw EvalError(std::string("term in the ") + setting_name(t.setting) +
                    " setting cannot be evaluated over a poset");
  switch (t.kind) {
    case TermKind::constant: return unit_mask(t.value);
    case TermKind::variable: return unit_mask(x);
    case TermKind::comp: {
      Mask v = eval_term_subset(p, t.args[0], x);
      if (!is_singleton(v))
        throw EvalError("complement applied to a non-singleton subset " +
                        p.subset_to_string(v));
      return unit_mask(p.complement_of(singleton_element(v)));
    }
    case TermKind::delta:
      return unit_mask(
          baaz_delta_subset(p, eval_term_subset(p, t.args[0], x)));
    case TermKind::sdiff: {
      Mask lhs = eval_term_subset(p, t.args[0], x);
      Mask rhs = eval_term_subset(p, t.args[1], x);
      if (!is_singleton(lhs) || !is_singleton(rhs))
        throw EvalError("the + operator applied to a non-singleton subset");
      return sdiff_poset(p, singleton_element(lhs), singleton_element(rhs));
    }
    case TermKind::max_l:
    case TermKind::min_u:
    case TermKind::set_union: {
      Mask u = 0;
      for (const Term& arg : t.args) u |= eval_term_subset(p, arg, x);
      if (t.kind == TermKind::max_l) return p.maximal(p.lower_cone(u));
      if (t.kind == TermKind::min_u) return p.minimal(p.upper_cone(u));
      return u;
    }
    default:
      throw EvalError(std::string("operation '") + term_kind_name(t.kind) +
                      "' is not available over a poset");
  }
}

inline EvalResult eval(const UnitaryRing& r, const Term& t, int x) {
  return element_result(t.setting, eval_term(r, t, x));
}

inline EvalResult eval(const BooleanAlgebra& a, const Term& t, int x) {
  return element_result(t.setting, eval_term(a, t, x));
}

inline EvalResult eval(const FinitePoset& p, const Term& t, int x) {
  return subset_result(eval_term_subset(p, t, x));
}

}  // namespace baaz
