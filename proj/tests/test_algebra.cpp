#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "baaz/boolean_algebra.hpp"
#include "baaz/corpus.hpp"
#include "baaz/generate.hpp"
#include "baaz/interpolate.hpp"
#include "oracle.hpp"

using namespace baaz;
using oracle::id;

namespace {

// Powerset elements carry their subset encoding in their position: the
// carrier is sorted by popcount then value, so recover the bit pattern from
// the name instead and use plain set operations as the oracle.
unsigned bits_of(const BooleanAlgebra& a, int x) {
  std::string n = a.poset().name_of(x);
  if (n == "0") return 0;
  unsigned all = static_cast<unsigned>(a.size()) - 1;  // size is 2^atoms
  if (n == "1") return all;
  unsigned b = 0;
  for (char c : n) b |= 1u << (c - 'a');
  return b;
}

int of_bits(const BooleanAlgebra& a, unsigned bits) {
  for (int x = 0; x < a.size(); ++x)
    if (bits_of(a, x) == bits) return x;
  FAIL("no element with the requested bit pattern");
  return -1;
}

}  // namespace

TEST_CASE("powerset generation and classification") {
  for (int n = 0; n <= 4; ++n) {
    BooleanAlgebra a = generate_powerset(n);
    REQUIRE(a.size() == (1 << n));
    StructureClassification c = classify(a.poset());
    REQUIRE(c.is_boolean_algebra);
    REQUIRE(c.is_boolean_poset);
    REQUIRE(c.is_lattice);
  }
  REQUIRE_THROWS_AS(generate_powerset(7), ValidationError);
}

TEST_CASE("powerset join, meet, and complement match set operations") {
  BooleanAlgebra a = generate_powerset(3);
  unsigned all = 7;
  for (int x = 0; x < a.size(); ++x) {
    REQUIRE(bits_of(a, a.comp(x)) == (all & ~bits_of(a, x)));
    for (int y = 0; y < a.size(); ++y) {
      REQUIRE(bits_of(a, a.join(x, y)) == (bits_of(a, x) | bits_of(a, y)));
      REQUIRE(bits_of(a, a.meet(x, y)) == (bits_of(a, x) & bits_of(a, y)));
    }
  }
}

TEST_CASE("symmetric difference is set XOR on powerset models") {
  for (int n = 1; n <= 4; ++n) {
    BooleanAlgebra a = generate_powerset(n);
    for (int x = 0; x < a.size(); ++x) {
      REQUIRE(symmetric_difference(a, x, x) == a.zero());
      REQUIRE(symmetric_difference(a, x, a.zero()) == x);
      for (int y = 0; y < a.size(); ++y)
        REQUIRE(bits_of(a, symmetric_difference(a, x, y)) ==
                (bits_of(a, x) ^ bits_of(a, y)));
    }
  }
  BooleanAlgebra p2 = generate_powerset(2);
  REQUIRE(symmetric_difference(p2, of_bits(p2, 1), of_bits(p2, 2)) ==
          of_bits(p2, 3));
}

TEST_CASE("symmetric difference is commutative and associative") {
  for (int n = 0; n <= 3; ++n) {
    BooleanAlgebra a = generate_powerset(n);
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) {
        REQUIRE(symmetric_difference(a, x, y) ==
                symmetric_difference(a, y, x));
        for (int z = 0; z < a.size(); ++z)
          REQUIRE(symmetric_difference(a, symmetric_difference(a, x, y), z) ==
                  symmetric_difference(a, x, symmetric_difference(a, y, z)));
      }
  }
}

TEST_CASE("the ring of a Boolean algebra") {
  for (int n = 0; n <= 4; ++n) {
    BooleanAlgebra a = generate_powerset(n);
    UnitaryRing r = boolean_ring_of(a);
    REQUIRE(r.is_boolean_ring());
    REQUIRE(r.is_commutative());
    for (int x = 0; x < r.size(); ++x) {
      REQUIRE(r.add(x, x) == r.zero());
      REQUIRE(r.mul(x, x) == x);
      // x + x = 0 makes every element its own negative, so x - y = x + y.
      for (int y = 0; y < r.size(); ++y)
        REQUIRE(r.sub(x, y) == r.add(x, y));
    }
  }

  UnitaryRing f2 = boolean_ring_of(generate_powerset(1));
  REQUIRE(f2.is_field());
  REQUIRE(f2.size() == 2);

  UnitaryRing r2 = boolean_ring_of(generate_powerset(2));
  REQUIRE(r2.add(r2.one(), r2.one()) == r2.zero());
  REQUIRE(!r2.is_field());
}

TEST_CASE("ring delta of a sum detects equality") {
  BooleanAlgebra a = generate_powerset(3);
  UnitaryRing r = boolean_ring_of(a);
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y) {
      int d = baaz_delta_elem(r, r.add(x, y));
      REQUIRE(d == (x == y ? r.zero() : r.one()));
    }
}

TEST_CASE("a Boolean algebra is recovered from its poset") {
  FinitePoset cube = structures::cube16();
  BooleanAlgebra a = boolean_algebra_from_poset(cube);
  auto j = [&](const char* x, const char* y) {
    return a.poset().name_of(a.join(id(cube, x), id(cube, y)));
  };
  REQUIRE(j("a", "b") == "e");
  REQUIRE(j("a", "c") == "g");
  REQUIRE(j("a", "d") == "h");
  REQUIRE(j("b", "c") == "hprime");
  REQUIRE(j("b", "d") == "gprime");
  REQUIRE(j("c", "d") == "eprime");
  for (int x = 0; x < cube.size(); ++x) {
    REQUIRE(a.meet(x, a.comp(x)) == a.zero());
    REQUIRE(a.join(x, a.comp(x)) == a.one());
  }

  // A 2-chain is the 2-element Boolean algebra.
  BooleanAlgebra two = boolean_algebra_from_poset(
      build_poset({"0", "1"}, {{"0", "1"}}));
  REQUIRE(two.size() == 2);
  REQUIRE(two.join(0, 1) == 1);
  REQUIRE(two.meet(0, 1) == 0);

  REQUIRE_THROWS_WITH(boolean_algebra_from_poset(structures::bp10()),
                      Catch::Matchers::ContainsSubstring("not a lattice"));
  REQUIRE_THROWS_AS(boolean_algebra_from_poset(structures::np10()),
                    ValidationError);
}

TEST_CASE("powerset 4 has the same shape as the 16-element cube") {
  BooleanAlgebra p4 = generate_powerset(4);
  StructureClassification c = classify(structures::cube16());
  REQUIRE(c.is_boolean_algebra);
  REQUIRE(p4.size() == structures::cube16().size());
  // Same rank profile: count of elements with each lower-cone size.
  auto profile = [](const FinitePoset& p) {
    std::vector<int> sizes;
    for (int x = 0; x < p.size(); ++x)
      sizes.push_back(mask_size(p.lower_cone(unit_mask(x))));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  REQUIRE(profile(p4.poset()) == profile(structures::cube16()));
}
