#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "baaz/check.hpp"
#include "baaz/corpus.hpp"
#include "baaz/generate.hpp"
#include "baaz/interpolate.hpp"
#include "baaz/structure_io.hpp"

namespace baaz {

// What the suite asserts a corpus structure to be. Stricter than the raw
// flags: a mislabeled entry is a failure even if every property check would
// pass on it.
enum class ExpectedKind {
  boolean_algebra,
  boolean_poset,  // and not a lattice
  complemented_nondistributive,
  ring,
  noncommutative_ring,
  field,
};

struct CorpusEntry {
  std::string name;
  Structure structure;
  ExpectedKind expected;
  // For documented counterexamples: the exact witnesses the checks must
  // produce. Random interpolation sweeps skip such entries.
  std::optional<std::string> prop1_witness;
};

struct SuiteConfig {
  int trials = 100;
  int max_support_size = 5;
  std::uint64_t seed = 42;
  std::vector<CorpusEntry> corpus;  // empty = default_corpus()
};

struct SuiteOutcome {
  bool pass = true;
  std::vector<std::string> porcelain;  // CHECK <name> PASS|FAIL <witness?>
  std::string human;
};

inline std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> corpus;
  corpus.push_back({"cube16", structures::cube16(),
                    ExpectedKind::boolean_algebra, std::nullopt});
  corpus.push_back({"np10", structures::np10(),
                    ExpectedKind::complemented_nondistributive,
                    std::string("b+c={0} but b≠c")});
  corpus.push_back({"bp10", structures::bp10(), ExpectedKind::boolean_poset,
                    std::nullopt});
  for (int n = 1; n <= 4; ++n)
    corpus.push_back({"powerset" + std::to_string(n),
                      generate_powerset_poset(n),
                      ExpectedKind::boolean_algebra, std::nullopt});
  for (int n = 2; n <= 12; ++n) {
    bool prime = n == 2 || n == 3 || n == 5 || n == 7 || n == 11;
    corpus.push_back({"zmod" + std::to_string(n), generate_zmod(n),
                      prime ? ExpectedKind::field : ExpectedKind::ring,
                      std::nullopt});
  }
  corpus.push_back({"matring2", generate_matring2(),
                    ExpectedKind::noncommutative_ring, std::nullopt});
  return corpus;
}

namespace detail {

struct SuiteSink {
  SuiteOutcome out;
  int failed = 0;

  void record(const std::string& name, bool pass,
              const std::string& witness = "") {
    std::string line = std::string("CHECK ") + name + " " +
                       (pass ? "PASS" : "FAIL");
    if (!pass && !witness.empty()) line += " " + witness;
    out.porcelain.push_back(line);
    if (!pass) {
      out.pass = false;
      ++failed;
    }
  }
};

inline std::string classification_witness(const FinitePoset& p,
                                          const StructureClassification& c) {
  if (!c.is_bounded) return p.label() + " is not bounded";
  if (!c.is_complemented)
    return p.label() + ": '" +
           p.name_of(c.uncomplemented_witness.value_or(0)) +
           "' has no complement";
  if (!c.is_distributive && c.nondistributive_witness) {
    const auto& w = *c.nondistributive_witness;
    return p.label() + " is not distributive since the identities fail at (" +
           p.name_of(w[0]) + "," + p.name_of(w[1]) + "," + p.name_of(w[2]) +
           ")";
  }
  if (!c.is_lattice && c.nonlattice_witness) {
    const auto& w = *c.nonlattice_witness;
    return p.label() + " is not a lattice (Min U(" + p.name_of(w[0]) + ", " +
           p.name_of(w[1]) + ") = " +
           p.subset_to_string(
               p.min_upper(unit_mask(w[0]) | unit_mask(w[1]))) +
           ")";
  }
  return p.label() + ": classification mismatch";
}

inline bool expectation_met(const Structure& s, ExpectedKind expected,
                            std::string* witness) {
  if (const UnitaryRing* r = std::get_if<UnitaryRing>(&s)) {
    switch (expected) {
      case ExpectedKind::field:
        if (!r->is_field()) {
          *witness = r->label() + " is not a field";
          return false;
        }
        return true;
      case ExpectedKind::noncommutative_ring:
        if (r->is_commutative()) {
          *witness = r->label() + " is unexpectedly commutative";
          return false;
        }
        return true;
      case ExpectedKind::ring:
        if (r->is_field()) {
          *witness = r->label() + " is unexpectedly a field";
          return false;
        }
        return true;
      default:
        *witness = r->label() + " is a ring, not an ordered structure";
        return false;
    }
  }
  const FinitePoset& p = std::get<FinitePoset>(s);
  StructureClassification c = classify(p);
  switch (expected) {
    case ExpectedKind::boolean_algebra:
      if (!c.is_boolean_algebra) {
        *witness = classification_witness(p, c);
        return false;
      }
      return true;
    case ExpectedKind::boolean_poset:
      if (!c.is_boolean_poset) {
        *witness = classification_witness(p, c);
        return false;
      }
      if (c.is_lattice) {
        *witness = p.label() + " is unexpectedly a lattice";
        return false;
      }
      return true;
    case ExpectedKind::complemented_nondistributive:
      if (!c.is_bounded || !c.is_complemented) {
        *witness = classification_witness(p, c);
        return false;
      }
      if (c.is_distributive) {
        *witness = p.label() + " is unexpectedly distributive";
        return false;
      }
      return true;
    default:
      *witness = p.label() + " is a poset, not a ring";
      return false;
  }
}

inline bool is_poset_entry(const CorpusEntry& e) {
  return std::holds_alternative<FinitePoset>(e.structure);
}

inline int carrier_size(const Structure& s) {
  if (const FinitePoset* p = std::get_if<FinitePoset>(&s)) return p->size();
  return std::get<UnitaryRing>(s).size();
}

}  // namespace detail

// Runs the whole corpus: classification, order-theoretic laws, Prop-1 style
// equality detection, seeded random interpolation/Kronecker sweeps, the
// golden worked examples, the documented counterexamples (asserted to fail
// exactly as documented), and the cross-setting agreement checks.
inline SuiteOutcome run_suite(const SuiteConfig& cfg) {
  if (cfg.trials < 1)
    throw ValidationError("trials must be at least 1, got " +
                          std::to_string(cfg.trials));
  if (cfg.max_support_size < 1)
    throw ValidationError("max support size must be at least 1");
  const std::vector<CorpusEntry> corpus =
      cfg.corpus.empty() ? default_corpus() : cfg.corpus;

  detail::SuiteSink sink;
  detail::StopWatch watch;

  for (const CorpusEntry& e : corpus) {
    // 1. Classification against the labeled expectation.
    std::string witness;
    bool ok = detail::expectation_met(e.structure, e.expected, &witness);
    sink.record("classify_" + e.name, ok, witness);
    if (!ok) continue;  // downstream checks assume the classification

    const bool documented_failure = e.expected ==
                                    ExpectedKind::complemented_nondistributive;

    if (detail::is_poset_entry(e)) {
      const FinitePoset& p = std::get<FinitePoset>(e.structure);

      // 2. The four cone identities agree in verdict.
      DistributivityReport d = is_distributive(p);
      bool agree = d.per_identity[0] == d.per_identity[1] &&
                   d.per_identity[0] == d.per_identity[2] &&
                   d.per_identity[0] == d.per_identity[3];
      sink.record("distributivity_agreement_" + e.name, agree,
                  agree ? "" : "the four identities disagree on " + e.name);

      // 3. Complement structure on Boolean posets.
      if (e.expected == ExpectedKind::boolean_algebra ||
          e.expected == ExpectedKind::boolean_poset) {
        ComplementSearch cs = find_complements(p);
        std::string cw;
        bool laws = cs.total && cs.unique;
        if (!laws) cw = e.name + ": complements missing or not unique";
        const std::vector<int>& cm = p.complements();
        for (int x = 0; x < p.size() && laws; ++x) {
          if (cm[cm[x]] != x) {
            laws = false;
            cw = e.name + ": complement not an involution at '" +
                 p.name_of(x) + "'";
          }
          for (int y = 0; y < p.size() && laws; ++y)
            if (p.leq(x, y) && !p.leq(cm[y], cm[x])) {
              laws = false;
              cw = e.name + ": complement not antitone at ('" +
                   p.name_of(x) + "','" + p.name_of(y) + "')";
            }
        }
        sink.record("complement_laws_" + e.name, laws, cw);
      }

      // 4. Equality detection by the + operator.
      CheckReport prop1 = check_prop1(p);
      if (documented_failure) {
        bool as_documented =
            !prop1.pass &&
            (!e.prop1_witness || prop1.witness == *e.prop1_witness);
        sink.record("prop1_expected_failure_" + e.name, as_documented,
                    as_documented ? ""
                                  : "expected failure with witness '" +
                                        e.prop1_witness.value_or("any") +
                                        "', got " +
                                        (prop1.pass ? "PASS"
                                                    : "'" + prop1.witness +
                                                          "'"));
      } else {
        sink.record("prop1_" + e.name, prop1.pass, prop1.witness);
      }
    }

    // 5. Seeded random interpolation and Kronecker sweeps. Documented
    // counterexamples are excluded: their failures are asserted separately.
    if (!documented_failure) {
      StructureRoutes routes = structure_routes(e.structure);
      bool interp_ok = true, kron_ok = true;
      std::string interp_w, kron_w;
      int carrier = detail::carrier_size(e.structure);
      int max_size = std::min(cfg.max_support_size, carrier);
      for (int size = 1; size <= max_size && (interp_ok || kron_ok); ++size)
        for (int trial = 0; trial < cfg.trials; ++trial) {
          SplitMix64 rng = seeded_stream(cfg.seed, e.name, size, trial);
          SupportFunction sup = random_support(carrier, size, rng);
          CheckReport ir = check_interpolation(e.structure, routes, sup);
          if (interp_ok && !ir.pass) {
            interp_ok = false;
            interp_w = "size " + std::to_string(size) + " trial " +
                       std::to_string(trial) + ": " + ir.witness;
          }
          CheckReport kr = check_kronecker(e.structure, routes, sup);
          if (kron_ok && !kr.pass) {
            kron_ok = false;
            kron_w = "size " + std::to_string(size) + " trial " +
                     std::to_string(trial) + ": " + kr.witness;
          }
        }
      sink.record("interpolation_" + e.name, interp_ok, interp_w);
      sink.record("kronecker_" + e.name, kron_ok, kron_w);
    }
  }

  // 6. Golden worked examples on the shipped structures.
  {
    FinitePoset cube = structures::cube16();
    auto idx = [&](const char* n) { return *cube.index_of(n); };
    SupportFunction sup = make_support({{idx("a"), idx("cprime")},
                                        {idx("g"), idx("aprime")},
                                        {idx("bprime"), idx("h")},
                                        {idx("1"), idx("eprime")}},
                                       cube.size());
    CheckReport rep = check_interpolation(Structure{cube}, sup);
    sink.record("golden_cube16", rep.pass, rep.witness);
  }
  {
    FinitePoset bp = structures::bp10();
    auto idx = [&](const char* n) { return *bp.index_of(n); };
    SupportFunction sup = make_support({{idx("0"), idx("a")},
                                        {idx("a"), idx("c")},
                                        {idx("b"), idx("dprime")},
                                        {idx("cprime"), idx("1")}},
                                       bp.size());
    CheckReport rep = check_interpolation(Structure{bp}, sup);
    bool sd = sdiff_poset(bp, idx("b"), idx("cprime")) ==
              (unit_mask(idx("bprime")) | unit_mask(idx("cprime")));
    sink.record("golden_bp10", rep.pass && sd,
                !rep.pass ? rep.witness
                          : (sd ? "" : "b+cprime is not {bprime, cprime}"));
  }
  {
    // The documented counterexample: on np10 the wedge for the point b dies
    // against c (b+c = {0}), so both checks must fail in exactly that way.
    FinitePoset np = structures::np10();
    auto idx = [&](const char* n) { return *np.index_of(n); };
    SupportFunction sup = make_support(
        {{idx("b"), idx("aprime")}, {idx("c"), idx("d")}}, np.size());
    CheckReport ir = check_interpolation(Structure{np}, sup);
    bool interp_as_doc = !ir.pass && ir.witness == "p(b)=0 but expected aprime";
    sink.record("interpolation_expected_failure_np10", interp_as_doc,
                interp_as_doc ? ""
                              : "expected p(b)=0, got " +
                                    (ir.pass ? std::string("PASS")
                                             : "'" + ir.witness + "'"));
    CheckReport kr = check_kronecker(Structure{np}, sup);
    bool kron_as_doc = !kr.pass && kr.witness == "p_1(b)=0 but expected 1";
    sink.record("kronecker_expected_failure_np10", kron_as_doc,
                kron_as_doc ? ""
                            : "expected p_1(b)=0, got " +
                                  (kr.pass ? std::string("PASS")
                                           : "'" + kr.witness + "'"));
  }

  // 7. Ring/algebra bridge on small powersets: the derived Boolean ring
  // passes idempotence and characteristic 2, and ring interpolation agrees
  // with algebra interpolation on support points.
  for (int n = 1; n <= 3; ++n) {
    BooleanAlgebra a = generate_powerset(n);
    UnitaryRing r = boolean_ring_of(a);
    std::string name = "bridge_powerset" + std::to_string(n);
    bool ok = r.is_boolean_ring();
    std::string w = ok ? "" : r.label() + " is not a Boolean ring";
    for (int x = 0; x < r.size() && ok; ++x) {
      if (r.add(x, x) != r.zero() || r.mul(x, x) != x) {
        ok = false;
        w = r.label() + ": ring laws fail at '" + r.name_of(x) + "'";
      }
    }
    for (int trial = 0; trial < 50 && ok; ++trial) {
      SplitMix64 rng = seeded_stream(cfg.seed, name, 7, trial);
      int size = 1 + static_cast<int>(rng.below(
                         std::min(a.size(), cfg.max_support_size)));
      SupportFunction sup = random_support(a.size(), size, rng);
      Interpolation ring_ip = interpolate_ring(r, sup);
      Interpolation alg_ip = interpolate_boolean_algebra(a, sup);
      for (int k = 0; k < sup.size() && ok; ++k) {
        int via_ring = eval_term(r, ring_ip.p, sup.point(k));
        int via_alg = eval_term(a, alg_ip.p, sup.point(k));
        if (via_ring != via_alg) {
          ok = false;
          w = name + ": routes disagree at '" + a.name_of(sup.point(k)) +
              "' (trial " + std::to_string(trial) + ")";
        }
      }
    }
    sink.record(name, ok, w);
  }

  // 8. The classical baseline over small prime fields, plus its worked
  // example: interpolating (1,2),(2,4) in Z_5 gives p(x) = 2x.
  for (int pr : {2, 3, 5, 7, 11}) {
    UnitaryRing f = generate_zmod(pr);
    std::string name = "lagrange_zmod" + std::to_string(pr);
    bool ok = true;
    std::string w;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      SplitMix64 rng = seeded_stream(cfg.seed, name, 11, trial);
      int size = 1 + static_cast<int>(rng.below(std::min(pr, 5)));
      SupportFunction sup = random_support(pr, size, rng);
      Interpolation ip = lagrange_field(f, sup);
      for (int k = 0; k < sup.size() && ok; ++k)
        if (eval_term(f, ip.p, sup.point(k)) != sup.value(k)) {
          ok = false;
          w = name + ": p(" + f.name_of(sup.point(k)) + ") misses (trial " +
              std::to_string(trial) + ")";
        }
    }
    sink.record(name, ok, w);
  }
  {
    UnitaryRing z5 = generate_zmod(5);
    Interpolation ip = lagrange_field(
        z5, make_support({{1, 2}, {2, 4}}, z5.size()));
    bool ok = true;
    for (int x = 0; x < 5 && ok; ++x)
      ok = eval_term(z5, ip.p, x) == (2 * x) % 5;
    sink.record("lagrange_golden_zmod5", ok,
                ok ? "" : "interpolant of (1,2),(2,4) is not 2x");
  }

  std::ostringstream human;
  for (const std::string& line : sink.out.porcelain) human << line << "\n";
  human << "suite: " << sink.out.porcelain.size() << " checks, "
        << sink.failed << " failed, " << corpus.size() << " structures, "
        << "seed " << cfg.seed << ", trials " << cfg.trials << " ("
        << static_cast<int>(watch.stop()) << " ms)\n";
  sink.out.human = human.str();
  return sink.out;
}

}  // namespace baaz
