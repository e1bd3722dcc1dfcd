#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <variant>

#include "baaz/corpus.hpp"
#include "baaz/generate.hpp"
#include "baaz/interpolate.hpp"
#include "baaz/structure_io.hpp"
#include "baaz/term_io.hpp"
#include "oracle.hpp"

using namespace baaz;
using oracle::id;

namespace {

const char* kSquareFile =
    "kind poset\n"
    "name square\n"
    "elements 0 l r 1\n"
    "cover 0 < l\n"
    "cover 0 < r\n"
    "cover l < 1\n"
    "cover r < 1\n"
    "complement 0 -> 1\n"
    "complement l -> r\n"
    "complement r -> l\n"
    "complement 1 -> 0\n";

}  // namespace

TEST_CASE("a poset file parses into a validated poset") {
  Structure s = parse_structure(kSquareFile);
  const FinitePoset& p = std::get<FinitePoset>(s);
  REQUIRE(p.label() == "square");
  REQUIRE(p.size() == 4);
  REQUIRE(p.leq(*p.index_of("0"), *p.index_of("1")));
  REQUIRE(p.has_complements());
  REQUIRE(p.complement_of(*p.index_of("l")) == *p.index_of("r"));
  REQUIRE(classify(p).is_boolean_algebra);
}

TEST_CASE("complement lines are optional: discovery fills the table") {
  std::string no_complements =
      "kind poset\nname square\nelements 0 l r 1\n"
      "cover 0 < l\ncover 0 < r\ncover l < 1\ncover r < 1\n";
  Structure s = parse_structure(no_complements);
  const FinitePoset& p = std::get<FinitePoset>(s);
  REQUIRE(p.has_complements());
  REQUIRE(p.complement_of(*p.index_of("r")) == *p.index_of("l"));
}

TEST_CASE("comments, blank lines, and primed spellings are accepted") {
  std::string text =
      "# three-element chain with primes\n"
      "kind poset\n"
      "\n"
      "name primed   # trailing comment\n"
      "elements 0 a' 1\n"
      "cover 0 < a'  \n"
      "cover a' < 1\n";
  Structure s = parse_structure(text);
  const FinitePoset& p = std::get<FinitePoset>(s);
  REQUIRE(p.carrier() == std::vector<std::string>{"0", "aprime", "1"});
}

TEST_CASE("ring files parse with full table validation") {
  std::string z3 =
      "kind ring\nname z3\nelements 0 1 2\n"
      "zero 0\none 1\n"
      "add 0 : 0 1 2\nadd 1 : 1 2 0\nadd 2 : 2 0 1\n"
      "mul 0 : 0 0 0\nmul 1 : 0 1 2\nmul 2 : 0 2 1\n";
  Structure s = parse_structure(z3);
  const UnitaryRing& r = std::get<UnitaryRing>(s);
  REQUIRE(r.is_field());
  REQUIRE(r.mul(*r.index_of("2"), *r.index_of("2")) == *r.index_of("1"));
}

TEST_CASE("parse errors carry line numbers") {
  REQUIRE_THROWS_WITH(parse_structure("kind poset\nelements a b\ncover a < a\n"),
                      Catch::Matchers::ContainsSubstring("reflexive cover"));
  REQUIRE_THROWS_WITH(parse_structure("elements a b\n"),
                      Catch::Matchers::ContainsSubstring("line 1"));
  REQUIRE_THROWS_WITH(parse_structure("kind poset\nwhat a b\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
  REQUIRE_THROWS_WITH(parse_structure("kind poset\ncover a < b\nelements a b\ncover a\n"),
                      Catch::Matchers::ContainsSubstring("line 4"));
  REQUIRE_THROWS_AS(parse_structure(""), ParseError);
  REQUIRE_THROWS_AS(parse_structure("kind poset\nname p\n"), ParseError);

  // Ring table problems.
  REQUIRE_THROWS_WITH(
      parse_structure("kind ring\nelements 0 1\nzero 0\none 1\n"
                      "add 0 : 0 1\nadd 1 : 1 0\nmul 0 : 0 0\n"),
      Catch::Matchers::ContainsSubstring("no row for '1'"));
  REQUIRE_THROWS_WITH(
      parse_structure("kind ring\nelements 0 1\nzero 0\none 1\n"
                      "add 0 : 0 1 0\nadd 1 : 1 0\nmul 0 : 0 0\nmul 1 : 0 1\n"),
      Catch::Matchers::ContainsSubstring("3 entries"));

  // A complement table contradicting the order is rejected.
  REQUIRE_THROWS_AS(
      parse_structure("kind poset\nelements 0 1\ncover 0 < 1\n"
                      "complement 0 -> 0\ncomplement 1 -> 1\n"),
      ValidationError);
}

TEST_CASE("emission is canonical and round-trips") {
  // parse . emit == identity on canonical files.
  for (const Structure& s :
       {Structure{structures::bp10()}, Structure{structures::np10()},
        Structure{structures::cube16()},
        Structure{generate_powerset_poset(2)}, Structure{generate_zmod(6)},
        Structure{generate_matring2()}}) {
    std::string text = emit_structure(s);
    REQUIRE(emit_structure(parse_structure(text)) == text);
  }

  // Non-canonical input (redundant cover, shuffled lines) normalizes.
  std::string messy =
      "kind poset\nname square\nelements 0 l r 1\n"
      "cover l < 1\ncover 0 < l\ncover 0 < 1\ncover 0 < r\ncover r < 1\n";
  std::string canon = emit_structure(parse_structure(messy));
  REQUIRE(canon ==
          "kind poset\n"
          "name square\n"
          "elements 0 l r 1\n"
          "cover 0 < l\n"
          "cover 0 < r\n"
          "cover l < 1\n"
          "cover r < 1\n"
          "complement 0 -> 1\n"
          "complement l -> r\n"
          "complement r -> l\n"
          "complement 1 -> 0\n");

  // The square algebra file has exactly four cover lines.
  std::string p2 = emit_structure(generate_powerset_poset(2));
  REQUIRE(std::count(p2.begin(), p2.end(), '\n') > 4);
  size_t covers = 0;
  for (size_t at = p2.find("cover"); at != std::string::npos;
       at = p2.find("cover", at + 1))
    ++covers;
  REQUIRE(covers == 4);
}

TEST_CASE("term parsing builds typed trees") {
  UnitaryRing z6 = generate_zmod(6);
  Term t = parse_term("delta(sub(x, 4))", Setting::ring, z6.carrier());
  REQUIRE(t.kind == TermKind::delta);
  REQUIRE(t.args[0].kind == TermKind::sub);
  REQUIRE(t.args[0].args[0].kind == TermKind::variable);
  REQUIRE(t.args[0].args[1].value == *z6.index_of("4"));
  REQUIRE(eval_term(z6, t, *z6.index_of("4")) == z6.zero());
  REQUIRE(eval_term(z6, t, *z6.index_of("2")) == z6.one());

  FinitePoset bp = structures::bp10();
  Term u = parse_term("sdiff(x, c')", Setting::boolean_poset, bp.carrier());
  REQUIRE(u.kind == TermKind::sdiff);
  REQUIRE(u.args[1].value == id(bp, "cprime"));
  REQUIRE(eval_term_subset(bp, u, id(bp, "b")) ==
          oracle::mask_of(bp, {"bprime", "cprime"}));

  Term m = parse_term("min_u(max_l(a, delta(sdiff(x, b))))",
                      Setting::boolean_poset, bp.carrier());
  REQUIRE(eval_term_subset(bp, m, id(bp, "0")) == oracle::mask_of(bp, {"a"}));
}

TEST_CASE("term parsing rejects what the setting forbids") {
  FinitePoset bp = structures::bp10();
  REQUIRE_THROWS_WITH(
      parse_term("join(x, a)", Setting::boolean_poset, bp.carrier()),
      Catch::Matchers::ContainsSubstring("requires the boolean_algebra"));
  REQUIRE_THROWS_WITH(
      parse_term("sub(x, a)", Setting::boolean_poset, bp.carrier()),
      Catch::Matchers::ContainsSubstring("requires the field or ring"));
  REQUIRE_THROWS_WITH(parse_term("delta(x, a)", Setting::boolean_poset,
                                 bp.carrier()),
                      Catch::Matchers::ContainsSubstring("arity"));
  REQUIRE_THROWS_WITH(parse_term("sdiff(x, q)", Setting::boolean_poset,
                                 bp.carrier()),
                      Catch::Matchers::ContainsSubstring("unknown name 'q'"));
  REQUIRE_THROWS_AS(parse_term("sdiff(x, a", Setting::boolean_poset,
                               bp.carrier()),
                    ParseError);
  REQUIRE_THROWS_AS(parse_term("x y", Setting::boolean_poset, bp.carrier()),
                    ParseError);
  REQUIRE_THROWS_AS(parse_term("", Setting::boolean_poset, bp.carrier()),
                    ParseError);
}

TEST_CASE("term text round-trips through the parser") {
  FinitePoset bp = structures::bp10();
  SupportFunction s = make_support(
      {{id(bp, "0"), id(bp, "a")}, {id(bp, "a"), id(bp, "c")},
       {id(bp, "b"), id(bp, "dprime")}, {id(bp, "cprime"), id(bp, "1")}},
      bp.size());
  Interpolation ip = interpolate_boolean_poset(bp, s);
  std::string text = term_to_text(ip.p, bp.carrier());
  Term back = parse_term(text, Setting::boolean_poset, bp.carrier());
  REQUIRE(term_to_text(back, bp.carrier()) == text);
  for (int x = 0; x < bp.size(); ++x)
    REQUIRE(eval_term_subset(bp, back, x) == eval_term_subset(bp, ip.p, x));

  UnitaryRing z6 = generate_zmod(6);
  Interpolation rp = interpolate_ring(
      z6, make_support({{2, 3}, {5, 1}}, z6.size()));
  std::string rtext = term_to_text(rp.p, z6.carrier());
  Term rback = parse_term(rtext, Setting::ring, z6.carrier());
  for (int x = 0; x < z6.size(); ++x)
    REQUIRE(eval_term(z6, rback, x) == eval_term(z6, rp.p, x));
}
