#pragma once

// Independent reference implementations for the order-theoretic operators,
// written directly from the definitions over plain sets. These never touch
// the bitmask machinery in the library; tests compare the two routes.

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "baaz/poset.hpp"

namespace oracle {

using ElemSet = std::set<int>;

inline bool leq(const baaz::FinitePoset& p, int a, int b) {
  return p.leq(a, b);
}

inline ElemSet whole(const baaz::FinitePoset& p) {
  ElemSet out;
  for (int i = 0; i < p.size(); ++i) out.insert(i);
  return out;
}

inline ElemSet lower_cone(const baaz::FinitePoset& p, const ElemSet& a) {
  ElemSet out;
  for (int x = 0; x < p.size(); ++x) {
    bool below_all = true;
    for (int e : a)
      if (!leq(p, x, e)) {
        below_all = false;
        break;
      }
    if (below_all) out.insert(x);
  }
  return out;
}

inline ElemSet upper_cone(const baaz::FinitePoset& p, const ElemSet& a) {
  ElemSet out;
  for (int x = 0; x < p.size(); ++x) {
    bool above_all = true;
    for (int e : a)
      if (!leq(p, e, x)) {
        above_all = false;
        break;
      }
    if (above_all) out.insert(x);
  }
  return out;
}

inline ElemSet maximal(const baaz::FinitePoset& p, const ElemSet& a) {
  ElemSet out;
  for (int x : a) {
    bool is_max = true;
    for (int y : a)
      if (y != x && leq(p, x, y)) {
        is_max = false;
        break;
      }
    if (is_max) out.insert(x);
  }
  return out;
}

inline ElemSet minimal(const baaz::FinitePoset& p, const ElemSet& a) {
  ElemSet out;
  for (int x : a) {
    bool is_min = true;
    for (int y : a)
      if (y != x && leq(p, y, x)) {
        is_min = false;
        break;
      }
    if (is_min) out.insert(x);
  }
  return out;
}

inline ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

// x + y = Min U(L(x', y), L(x, y')), straight from the definition.
inline ElemSet sdiff(const baaz::FinitePoset& p, int x, int y) {
  int xc = p.complement_of(x);
  int yc = p.complement_of(y);
  ElemSet left = lower_cone(p, {xc, y});
  ElemSet right = lower_cone(p, {x, yc});
  return minimal(p, upper_cone(p, set_union(left, right)));
}

inline baaz::Mask to_mask(const ElemSet& s) {
  baaz::Mask m = 0;
  for (int e : s) m |= baaz::unit_mask(e);
  return m;
}

inline ElemSet from_mask(baaz::Mask m) {
  ElemSet out;
  for (int e : baaz::mask_elements(m)) out.insert(e);
  return out;
}

// Resolve a name that must exist; keeps tests terse.
inline int id(const baaz::FinitePoset& p, const std::string& name) {
  auto i = p.index_of(name);
  REQUIRE(i.has_value());
  return *i;
}

inline baaz::Mask mask_of(const baaz::FinitePoset& p,
                          const std::vector<std::string>& names) {
  baaz::Mask m = 0;
  for (const auto& n : names) m |= baaz::unit_mask(id(p, n));
  return m;
}

}  // namespace oracle
