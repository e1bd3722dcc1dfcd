#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "baaz/boolean_algebra.hpp"
#include "baaz/errors.hpp"
#include "baaz/poset.hpp"
#include "baaz/ring.hpp"

namespace baaz {

// Z_n, the ring of integers mod n. zmod 1 is the trivial ring, accepted but
// flagged degenerate; zmod p for prime p comes out as a field.
inline UnitaryRing generate_zmod(int n) {
  if (n < 1) throw ValidationError("zmod size must be at least 1");
  if (n > kMaxCarrier) throw ValidationError("zmod size out of range");
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  std::vector<std::vector<std::string>> add(n, std::vector<std::string>(n));
  std::vector<std::vector<std::string>> mul(n, std::vector<std::string>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[i][j] = names[(i + j) % n];
      mul[i][j] = names[(i * j) % n];
    }
  return build_ring(names, add, mul, "0", names[1 % n],
                    "zmod" + std::to_string(n));
}

namespace detail {

inline std::string powerset_element_name(unsigned subset, int atoms) {
  unsigned full = (atoms >= 1) ? ((1u << atoms) - 1) : 0u;
  if (subset == 0) return "0";
  if (subset == full) return "1";
  std::string out;
  for (int i = 0; i < atoms; ++i)
    if ((subset >> i) & 1) out += static_cast<char>('a' + i);
  return out;
}

}  // namespace detail

// The powerset of an n-element set as a poset under inclusion. Elements are
// ordered by size then by atom content; atoms are named a..f, the empty set
// 0 and the full set 1.
inline FinitePoset generate_powerset_poset(int atoms) {
  if (atoms < 0 || atoms > 6)
    throw ValidationError("powerset atom count must be between 0 and 6");
  const unsigned count = 1u << atoms;
  std::vector<unsigned> order(count);
  for (unsigned s = 0; s < count; ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::string> names;
  names.reserve(count);
  for (unsigned s : order)
    names.push_back(detail::powerset_element_name(s, atoms));
  std::vector<std::pair<std::string, std::string>> covers;
  for (unsigned s = 0; s < count; ++s)
    for (int i = 0; i < atoms; ++i)
      if (!((s >> i) & 1))
        covers.emplace_back(detail::powerset_element_name(s, atoms),
                            detail::powerset_element_name(s | (1u << i), atoms));
  return build_poset(names, covers, {}, "powerset" + std::to_string(atoms));
}

inline BooleanAlgebra generate_powerset(int atoms) {
  return boolean_algebra_from_poset(generate_powerset_poset(atoms));
}

// The 16-element ring of 2x2 matrices over Z_2; the standard small example
// of a noncommutative unitary ring. An element [[p,q],[r,s]] is named by
// its entries row-major, e.g. the identity is 1001.
inline UnitaryRing generate_matring2() {
  const int n = 16;
  auto entry = [](int m, int pos) { return (m >> (3 - pos)) & 1; };
  auto pack = [](int p, int q, int r, int s) {
    return (p << 3) | (q << 2) | (r << 1) | s;
  };
  std::vector<std::string> names(n);
  for (int m = 0; m < n; ++m) {
    names[m] = std::string() + char('0' + entry(m, 0)) + char('0' + entry(m, 1)) +
               char('0' + entry(m, 2)) + char('0' + entry(m, 3));
  }
  std::vector<std::vector<std::string>> add(n, std::vector<std::string>(n));
  std::vector<std::vector<std::string>> mul(n, std::vector<std::string>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add[x][y] = names[x ^ y];
      int p = (entry(x, 0) & entry(y, 0)) ^ (entry(x, 1) & entry(y, 2));
      int q = (entry(x, 0) & entry(y, 1)) ^ (entry(x, 1) & entry(y, 3));
      int r = (entry(x, 2) & entry(y, 0)) ^ (entry(x, 3) & entry(y, 2));
      int s = (entry(x, 2) & entry(y, 1)) ^ (entry(x, 3) & entry(y, 3));
      mul[x][y] = names[pack(p, q, r, s)];
    }
  return build_ring(names, add, mul, "0000", "1001", "matring2");
}

}  // namespace baaz
