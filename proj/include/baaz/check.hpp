#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "baaz/boolean_algebra.hpp"
#include "baaz/interpolate.hpp"
#include "baaz/poset.hpp"
#include "baaz/ring.hpp"
#include "baaz/structure_io.hpp"

namespace baaz {

// Hand-rolled generator so seeded runs are bit-identical across platforms
// and standard-library versions; std::uniform_int_distribution makes no
// such promise.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// One independent stream per (seed, structure, salt, trial) so reordering
// checks never shifts the supports another check sees.
inline SplitMix64 seeded_stream(std::uint64_t seed, std::string_view name,
                                std::uint64_t salt, std::uint64_t trial) {
  SplitMix64 g{seed ^ fnv1a(name)};
  g.state ^= g.next() + salt;
  g.state ^= g.next() + trial;
  g.next();
  return g;
}

// n distinct support points drawn without replacement, values independent.
inline SupportFunction random_support(int carrier_size, int n,
                                      SplitMix64& rng) {
  if (n < 1 || n > carrier_size)
    throw ValidationError("support size " + std::to_string(n) +
                          " out of range 1.." + std::to_string(carrier_size));
  std::vector<int> pool(carrier_size);
  for (int i = 0; i < carrier_size; ++i) pool[i] = i;
  std::vector<std::pair<int, int>> points;
  for (int i = 0; i < n; ++i) {
    int pick = i + static_cast<int>(rng.below(carrier_size - i));
    std::swap(pool[i], pool[pick]);
    points.emplace_back(pool[i], static_cast<int>(rng.below(carrier_size)));
  }
  return SupportFunction{points};
}

struct CaseResult {
  std::string route;  // which constructor produced the value
  std::string label;  // e.g. "p(b)" or "p_1(5)"
  std::string expected;
  std::string got;
  bool pass = false;
};

struct CheckReport {
  std::string check;
  std::string structure;
  bool pass = true;
  std::vector<CaseResult> cases;
  std::string witness;             // first failing case, human-readable
  std::vector<std::string> notes;  // off-support tables etc.; never asserted
  double millis = 0.0;

  void add_case(CaseResult c) {
    if (!c.pass && pass) {
      pass = false;
      witness = c.label + "=" + c.got + " but expected " + c.expected;
    }
    cases.push_back(std::move(c));
  }
};

// Every construction applicable to one structure. Rings get the delta
// route, plus the classical baseline when the ring is a field; posets get
// the algebra route when the order is a lattice and the operator-term
// route whenever complements exist. Building this runs the cubic
// distributivity scan and derives the algebra tables, so callers that
// check many supports on one structure should build it once and reuse it.
struct StructureRoutes {
  std::vector<std::string> names;         // in check order
  std::optional<BooleanAlgebra> algebra;  // present on the algebra route
};

inline StructureRoutes structure_routes(const Structure& s) {
  StructureRoutes out;
  if (const UnitaryRing* r = std::get_if<UnitaryRing>(&s)) {
    out.names.push_back("ring");
    if (r->is_field()) out.names.push_back("field");
    return out;
  }
  const FinitePoset& p = std::get<FinitePoset>(s);
  StructureClassification c = classify(p);
  if (c.is_boolean_algebra) {
    out.algebra = boolean_algebra_from_poset(p);
    out.names.push_back("boolean_algebra");
  }
  if (c.is_bounded && c.is_complemented) out.names.push_back("boolean_poset");
  if (out.names.empty())
    throw ValidationError("'" + p.label() +
                          "' supports no interpolation construction");
  return out;
}

namespace detail {

class StopWatch {
 public:
  double stop() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

struct Route {
  std::string name;
  Interpolation ip;
};

inline std::vector<Route> build_route_terms(const StructureRoutes& sr,
                                            const Structure& s,
                                            const SupportFunction& sup) {
  std::vector<Route> routes;
  for (const std::string& name : sr.names) {
    if (name == "ring")
      routes.push_back({name, interpolate_ring(std::get<UnitaryRing>(s), sup)});
    else if (name == "field")
      routes.push_back({name, lagrange_field(std::get<UnitaryRing>(s), sup)});
    else if (name == "boolean_algebra")
      routes.push_back({name, interpolate_boolean_algebra(*sr.algebra, sup)});
    else
      routes.push_back(
          {name, poset_interpolation_term(std::get<FinitePoset>(s), sup)});
  }
  return routes;
}

inline EvalResult eval_on(const StructureRoutes& sr, const Structure& s,
                          const Route& route, const Term& t, int x) {
  if (const UnitaryRing* r = std::get_if<UnitaryRing>(&s))
    return eval(*r, t, x);
  if (route.name == "boolean_algebra") return eval(*sr.algebra, t, x);
  return eval(std::get<FinitePoset>(s), t, x);
}

}  // namespace detail

// Builds the interpolation term(s) for the structure and checks
// p(a_k) = f(a_k) on every support point, under singleton identification.
// Off-support values go to the notes, never to the verdict.
inline CheckReport check_interpolation(const Structure& s,
                                       const StructureRoutes& sr,
                                       const SupportFunction& sup) {
  detail::StopWatch watch;
  const std::vector<std::string>& names = structure_carrier(s);
  CheckReport rep;
  rep.check = "interpolation";
  rep.structure = structure_label(s);

  std::vector<detail::Route> routes = detail::build_route_terms(sr, s, sup);
  for (const detail::Route& route : routes) {
    for (int k = 0; k < sup.size(); ++k) {
      EvalResult got = detail::eval_on(sr, s, route, route.ip.p, sup.point(k));
      CaseResult c;
      c.route = route.name;
      c.label = "p(" + names[sup.point(k)] + ")";
      c.expected = names[sup.value(k)];
      c.got = got.to_string(names);
      c.pass = got.equals_element(sup.value(k));
      rep.add_case(std::move(c));
    }
    const int size = static_cast<int>(names.size());
    for (int x = 0; x < size; ++x) {
      bool on_support = false;
      for (int k = 0; k < sup.size(); ++k)
        if (sup.point(k) == x) on_support = true;
      if (on_support) continue;
      EvalResult got = detail::eval_on(sr, s, route, route.ip.p, x);
      rep.notes.push_back(route.name + " off-support p(" + names[x] +
                          ")=" + got.to_string(names));
    }
  }

  // When both poset-flavoured routes exist they must agree on the support.
  if (routes.size() == 2 && routes[0].name == "boolean_algebra" &&
      routes[1].name == "boolean_poset") {
    for (int k = 0; k < sup.size(); ++k) {
      EvalResult alg =
          detail::eval_on(sr, s, routes[0], routes[0].ip.p, sup.point(k));
      EvalResult pos =
          detail::eval_on(sr, s, routes[1], routes[1].ip.p, sup.point(k));
      CaseResult c;
      c.route = "agreement";
      c.label = "p(" + names[sup.point(k)] + ")";
      c.expected = alg.to_string(names);
      c.got = pos.to_string(names);
      c.pass = pos.equals_element(alg.element);
      rep.add_case(std::move(c));
    }
  }
  rep.millis = watch.stop();
  return rep;
}

inline CheckReport check_interpolation(const Structure& s,
                                       const SupportFunction& sup) {
  return check_interpolation(s, structure_routes(s), sup);
}

// Checks the identity pattern p_i(a_k) = delta_ik for every constructed
// basis term, on every route the structure supports.
inline CheckReport check_kronecker(const Structure& s,
                                   const StructureRoutes& sr,
                                   const SupportFunction& sup) {
  detail::StopWatch watch;
  const std::vector<std::string>& names = structure_carrier(s);
  CheckReport rep;
  rep.check = "kronecker";
  rep.structure = structure_label(s);

  int zero, one;
  if (const UnitaryRing* r = std::get_if<UnitaryRing>(&s)) {
    zero = r->zero();
    one = r->one();
  } else {
    const FinitePoset& p = std::get<FinitePoset>(s);
    zero = *p.bottom();
    one = *p.top();
  }
  std::vector<detail::Route> routes = detail::build_route_terms(sr, s, sup);
  for (const detail::Route& route : routes) {
    for (int i = 0; i < sup.size(); ++i)
      for (int k = 0; k < sup.size(); ++k) {
        EvalResult got =
            detail::eval_on(sr, s, route, route.ip.basis[i], sup.point(k));
        int want = i == k ? one : zero;
        CaseResult c;
        c.route = route.name;
        c.label = "p_" + std::to_string(i + 1) + "(" + names[sup.point(k)] +
                  ")";
        c.expected = names[want];
        c.got = got.to_string(names);
        c.pass = got.equals_element(want);
        rep.add_case(std::move(c));
      }
  }
  rep.millis = watch.stop();
  return rep;
}

inline CheckReport check_kronecker(const Structure& s,
                                   const SupportFunction& sup) {
  return check_kronecker(s, structure_routes(s), sup);
}

// Checks x+y = {0} iff x = y over every pair of the carrier; the equality
// detector behind the delta blocks, valid on Boolean posets and refutable
// off them.
inline CheckReport check_prop1(const FinitePoset& p) {
  detail::StopWatch watch;
  CheckReport rep;
  rep.check = "prop1";
  rep.structure = p.label();
  Mask zero = unit_mask(*p.bottom());
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      Mask d = sdiff_poset(p, x, y);
      bool is_zero = d == zero;
      bool ok = is_zero == (x == y);
      CaseResult c;
      c.route = "prop1";
      c.label = p.name_of(x) + "+" + p.name_of(y);
      c.expected = x == y ? "{0}" : "nonzero";
      c.got = p.subset_to_string(d);
      c.pass = ok;
      if (!ok && rep.pass) {
        rep.pass = false;
        rep.witness = x == y ? p.name_of(x) + "+" + p.name_of(y) + "=" +
                                   p.subset_to_string(d) + " but " +
                                   p.name_of(x) + "=" + p.name_of(y)
                             : p.name_of(x) + "+" + p.name_of(y) +
                                   "={0} but " + p.name_of(x) + "≠" +
                                   p.name_of(y);
      }
      rep.cases.push_back(std::move(c));
    }
  rep.millis = watch.stop();
  return rep;
}

// Checks the four cone identities individually and their mutual agreement.
// The verdict is distributivity itself: a non-distributive input fails with
// the first violating triple as witness.
inline CheckReport check_distributivity(const FinitePoset& p) {
  detail::StopWatch watch;
  CheckReport rep;
  rep.check = "distributivity";
  rep.structure = p.label();
  DistributivityReport d = is_distributive(p);
  for (int i = 0; i < 4; ++i) {
    CaseResult c;
    c.route = "identity_" + std::to_string(i + 1);
    c.label = "holds";
    c.expected = d.per_identity[0] ? "true" : "false";
    c.got = d.per_identity[i] ? "true" : "false";
    c.pass = d.per_identity[i] == d.per_identity[0];
    rep.add_case(std::move(c));
  }
  if (!d.verdict) {
    rep.pass = false;
    if (d.witness)
      rep.witness = p.label() + " is not distributive since the identities " +
                    "fail at (" + p.name_of((*d.witness)[0]) + "," +
                    p.name_of((*d.witness)[1]) + "," +
                    p.name_of((*d.witness)[2]) + ")";
    else
      rep.witness = p.label() + " is not distributive";
  }
  rep.millis = watch.stop();
  return rep;
}

}  // namespace baaz
