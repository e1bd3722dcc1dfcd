#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "baaz/check.hpp"
#include "baaz/generate.hpp"
#include "baaz/structure_io.hpp"
#include "baaz/suite.hpp"
#include "baaz/term_io.hpp"

namespace baaz {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline int resolve_element(const std::vector<std::string>& names,
                           const std::string& raw) {
  std::string name = normalize_name(raw);
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw ValidationError("unknown element '" + raw + "'");
}

inline SupportFunction parse_points(const Structure& s,
                                    const std::string& spec) {
  const std::vector<std::string>& names = structure_carrier(s);
  std::vector<std::pair<int, int>> pairs;
  std::istringstream in(spec);
  std::string chunk;
  while (std::getline(in, chunk, ',')) {
    size_t colon = chunk.find(':');
    if (colon == std::string::npos)
      throw ValidationError("point '" + chunk +
                            "' is not a name:name pair");
    pairs.emplace_back(resolve_element(names, chunk.substr(0, colon)),
                       resolve_element(names, chunk.substr(colon + 1)));
  }
  return make_support(pairs, static_cast<int>(names.size()), &names);
}

// The construction the interpolate command presents: the join/meet form on
// a genuine algebra, the operator-term form on everything else.
inline Route presentation_route(const StructureRoutes& sr, const Structure& s,
                                const SupportFunction& sup) {
  std::vector<Route> routes = build_route_terms(sr, s, sup);
  for (Route& r : routes)
    if (r.name == "boolean_algebra") return std::move(r);
  return std::move(routes.front());
}

inline void print_classification(const FinitePoset& p, std::ostream& out) {
  StructureClassification c = classify(p);
  out << "poset '" << p.label() << "' with " << p.size() << " elements\n";
  if (c.is_bounded)
    out << "bounded: yes (bottom " << p.name_of(*p.bottom()) << ", top "
        << p.name_of(*p.top()) << ")\n";
  else
    out << "bounded: no\n";
  if (c.is_complemented) {
    ComplementSearch cs = find_complements(p);
    out << "complemented: yes"
        << (cs.unique ? "" : " (complement not unique)") << "\n";
  } else if (c.uncomplemented_witness) {
    out << "complemented: no ('" << p.name_of(*c.uncomplemented_witness)
        << "' has no complement)\n";
  } else {
    out << "complemented: no\n";
  }
  if (c.is_distributive) {
    out << "distributive: yes\n";
  } else if (c.nondistributive_witness) {
    const auto& w = *c.nondistributive_witness;
    out << "distributive: no — " << p.label()
        << " is not distributive since the identities fail at ("
        << p.name_of(w[0]) << "," << p.name_of(w[1]) << ","
        << p.name_of(w[2]) << ")\n";
  } else {
    out << "distributive: no\n";
  }
  if (c.is_lattice) {
    out << "lattice: yes\n";
  } else if (c.nonlattice_witness) {
    const auto& w = *c.nonlattice_witness;
    out << "lattice: no (Min U(" << p.name_of(w[0]) << ", " << p.name_of(w[1])
        << ") = "
        << p.subset_to_string(p.min_upper(unit_mask(w[0]) | unit_mask(w[1])))
        << ")\n";
  } else {
    out << "lattice: no\n";
  }
  out << "boolean poset: " << (c.is_boolean_poset ? "yes" : "no") << "\n";
  out << "boolean algebra: " << (c.is_boolean_algebra ? "yes" : "no") << "\n";
}

inline void print_classification(const UnitaryRing& r, std::ostream& out) {
  out << "ring '" << r.label() << "' with " << r.size() << " elements\n";
  out << "commutative: " << (r.is_commutative() ? "yes" : "no") << "\n";
  out << "field: " << (r.is_field() ? "yes" : "no") << "\n";
  out << "boolean ring: " << (r.is_boolean_ring() ? "yes" : "no") << "\n";
}

inline int report_check(const CheckReport& rep, bool porcelain,
                        const std::string& detail_line, std::ostream& out) {
  if (porcelain) {
    out << "CHECK " << rep.check << " " << (rep.pass ? "PASS" : "FAIL");
    if (!rep.pass && !rep.witness.empty()) out << " " << rep.witness;
    out << "\n";
  } else {
    out << "check " << rep.check << " on " << rep.structure << ": "
        << (rep.pass ? "PASS" : "FAIL") << detail_line << "\n";
    if (!rep.pass) out << "witness: " << rep.witness << "\n";
  }
  return rep.pass ? 0 : 1;
}

}  // namespace detail

// The whole command surface. Args come in natural order without the
// program name; output goes to the given streams so tests can capture it.
// Exit codes: 0 pass, 1 a property failed (witness printed), 2 bad input.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{
      "workbench for delta-based interpolation on finite rings, Boolean "
      "algebras, and Boolean posets"};
  app.name("baaz");
  app.require_subcommand(1);

  std::string file, points, term_text, at_name, prop, out_path;
  int trials = 100;
  int size = 0;
  int powerset_n = -1, zmod_n = -1;
  bool matring = false, porcelain = false;
  std::uint64_t seed = 42;

  CLI::App* validate =
      app.add_subcommand("validate", "parse a structure file and report it");
  validate->add_option("file", file, "structure file")->required();

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "report order/algebraic properties of a structure");
  classify_cmd->add_option("file", file, "structure file")->required();

  CLI::App* gen = app.add_subcommand(
      "gen", "emit a generated structure in canonical file form");
  gen->add_option("--powerset", powerset_n,
                  "powerset algebra on N atoms (0..6)");
  gen->add_option("--zmod", zmod_n, "integers mod N");
  gen->add_flag("--matring2", matring, "2x2 matrices over zmod 2");
  gen->add_option("-o,--output", out_path, "write to file instead of stdout");

  CLI::App* interpolate =
      app.add_subcommand("interpolate",
                         "construct the interpolation term for a support "
                         "and print its full evaluation table");
  interpolate->add_option("file", file, "structure file")->required();
  interpolate
      ->add_option("--points", points,
                   "comma-separated support as point:value name pairs")
      ->required();

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a term at one element");
  eval_cmd->add_option("file", file, "structure file")->required();
  eval_cmd->add_option("--term", term_text, "term text")->required();
  eval_cmd->add_option("--at", at_name, "element to bind x to")->required();

  CLI::App* check = app.add_subcommand(
      "check", "run one property check against a structure file");
  check->add_option("file", file, "structure file")->required();
  check
      ->add_option("--prop", prop,
                   "prop1 | interpolation | kronecker | distributivity")
      ->required();
  check->add_option("--trials", trials, "random supports per size");
  check->add_option("--size", size, "fix the support size (default: sweep)");
  check->add_option("--seed", seed, "random seed");
  check->add_flag("--porcelain", porcelain, "one machine-readable line");

  CLI::App* suite =
      app.add_subcommand("suite", "run every check on the built-in corpus");
  suite->add_option("--trials", trials, "random supports per size");
  suite->add_option("--seed", seed, "random seed");
  suite->add_flag("--porcelain", porcelain,
                  "machine-readable line per check");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      Structure s = parse_structure(detail::read_file(file));
      const char* kind = std::holds_alternative<FinitePoset>(s) ? "poset"
                                                                : "ring";
      out << "OK: " << kind << " '" << structure_label(s) << "' with "
          << structure_carrier(s).size() << " elements\n";
      return 0;
    }

    if (classify_cmd->parsed()) {
      Structure s = parse_structure(detail::read_file(file));
      if (const FinitePoset* p = std::get_if<FinitePoset>(&s))
        detail::print_classification(*p, out);
      else
        detail::print_classification(std::get<UnitaryRing>(s), out);
      return 0;
    }

    if (gen->parsed()) {
      int chosen = (powerset_n >= 0) + (zmod_n >= 0) + (matring ? 1 : 0);
      if (chosen != 1)
        throw ValidationError(
            "gen requires exactly one of --powerset, --zmod, --matring2");
      Structure s = powerset_n >= 0
                        ? Structure{generate_powerset_poset(powerset_n)}
                        : (zmod_n >= 0 ? Structure{generate_zmod(zmod_n)}
                                       : Structure{generate_matring2()});
      std::string text = emit_structure(s);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ValidationError("cannot write '" + out_path + "'");
        f << text;
        out << "wrote " << structure_label(s) << " to " << out_path << "\n";
      }
      return 0;
    }

    if (interpolate->parsed()) {
      Structure s = parse_structure(detail::read_file(file));
      const std::vector<std::string>& names = structure_carrier(s);
      SupportFunction sup = detail::parse_points(s, points);
      StructureRoutes sr = structure_routes(s);
      detail::Route route = detail::presentation_route(sr, s, sup);
      out << "structure: " << structure_label(s) << "\n";
      out << "route: " << route.name << "\n";
      out << "p(x) = " << term_to_text(route.ip.p, names) << "\n";
      std::string failure;
      for (int x = 0; x < static_cast<int>(names.size()); ++x) {
        EvalResult v = detail::eval_on(sr, s, route, route.ip.p, x);
        out << "p(" << names[x] << ")=" << v.to_string(names) << "\n";
        for (int k = 0; k < sup.size(); ++k)
          if (sup.point(k) == x && !v.equals_element(sup.value(k)) &&
              failure.empty())
            failure = "p(" + names[x] + ")=" + v.to_string(names) +
                      " but expected " + names[sup.value(k)];
      }
      if (!failure.empty()) {
        out << "FAIL: " << failure << "\n";
        return 1;
      }
      return 0;
    }

    if (eval_cmd->parsed()) {
      Structure s = parse_structure(detail::read_file(file));
      const std::vector<std::string>& names = structure_carrier(s);
      int at = detail::resolve_element(names, at_name);
      if (const UnitaryRing* r = std::get_if<UnitaryRing>(&s)) {
        Term t = parse_term(term_text, Setting::ring, names);
        out << eval(*r, t, at).to_string(names) << "\n";
        return 0;
      }
      const FinitePoset& p = std::get<FinitePoset>(s);
      if (classify(p).is_boolean_algebra) {
        BooleanAlgebra a = boolean_algebra_from_poset(p);
        Term t = parse_term(term_text, Setting::boolean_algebra, names);
        out << eval(a, t, at).to_string(names) << "\n";
      } else {
        Term t = parse_term(term_text, Setting::boolean_poset, names);
        out << eval(p, t, at).to_string(names) << "\n";
      }
      return 0;
    }

    if (check->parsed()) {
      Structure s = parse_structure(detail::read_file(file));
      if (prop == "prop1" || prop == "distributivity") {
        const FinitePoset* p = std::get_if<FinitePoset>(&s);
        if (!p)
          throw ValidationError("check '" + prop +
                                "' requires a poset file");
        CheckReport rep =
            prop == "prop1" ? check_prop1(*p) : check_distributivity(*p);
        std::string detail_line =
            " (" + std::to_string(rep.cases.size()) + " cases)";
        return detail::report_check(rep, porcelain, detail_line, out);
      }
      if (prop != "interpolation" && prop != "kronecker")
        throw ValidationError(
            "unknown property '" + prop +
            "' (expected prop1, interpolation, kronecker, distributivity)");
      if (trials < 1)
        throw ValidationError("trials must be at least 1, got " +
                              std::to_string(trials));
      StructureRoutes sr = structure_routes(s);
      int carrier = static_cast<int>(structure_carrier(s).size());
      if (size != 0 && (size < 1 || size > carrier))
        throw ValidationError("support size " + std::to_string(size) +
                              " out of range 1.." + std::to_string(carrier));
      int lo = size != 0 ? size : 1;
      int hi = size != 0 ? size : std::min(5, carrier);
      CheckReport rep;
      rep.check = prop;
      rep.structure = structure_label(s);
      int supports = 0;
      for (int n = lo; n <= hi && rep.pass; ++n)
        for (int t = 0; t < trials && rep.pass; ++t) {
          SplitMix64 rng = seeded_stream(seed, structure_label(s), n, t);
          SupportFunction sup = random_support(carrier, n, rng);
          CheckReport one = prop == "interpolation"
                                ? check_interpolation(s, sr, sup)
                                : check_kronecker(s, sr, sup);
          ++supports;
          if (!one.pass) {
            rep.pass = false;
            rep.witness = "size " + std::to_string(n) + " trial " +
                          std::to_string(t) + ": " + one.witness;
          }
        }
      std::string detail_line = " (" + std::to_string(supports) +
                                " supports, sizes " + std::to_string(lo) +
                                ".." + std::to_string(hi) + ", seed " +
                                std::to_string(seed) + ")";
      return detail::report_check(rep, porcelain, detail_line, out);
    }

    // suite
    SuiteConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    SuiteOutcome outcome = run_suite(cfg);
    if (porcelain)
      for (const std::string& line : outcome.porcelain) out << line << "\n";
    else
      out << outcome.human;
    return outcome.pass ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace baaz
