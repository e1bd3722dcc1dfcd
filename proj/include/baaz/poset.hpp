#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "baaz/errors.hpp"
#include "baaz/subset.hpp"

namespace baaz {

enum class ConeDir { lower, upper };
enum class ExtremalDir { max, min };

// A finite poset given by its full order relation, stored as one bitmask of
// predecessors and one of successors per element. Immutable once built; all
// queries are const and allocation-free.
class FinitePoset {
 public:
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& carrier() const { return names_; }
  const std::string& name_of(int i) const { return names_[i]; }

  std::optional<int> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(int a, int b) const { return mask_contains(above_[a], b); }

  bool bounded() const { return bottom_.has_value() && top_.has_value(); }
  std::optional<int> bottom() const { return bottom_; }
  std::optional<int> top() const { return top_; }

  bool has_complements() const { return complement_.has_value(); }
  const std::vector<int>& complements() const {
    if (!complement_) throw ValidationError("poset has no complement map");
    return *complement_;
  }
  int complement_of(int i) const { return complements()[i]; }

  // L(i) and U(i) for single elements, both including i itself.
  Mask below(int i) const { return below_[i]; }
  Mask above(int i) const { return above_[i]; }

  Mask all() const { return full_mask(size()); }

  // L(A) = {x | x <= a for all a in A}; the lower cone of the empty set is
  // the whole carrier. Upper cone dually.
  Mask lower_cone(Mask a) const { return cone_from(below_, a); }
  Mask upper_cone(Mask a) const { return cone_from(above_, a); }

  Mask cone(Mask a, ConeDir dir) const {
    return dir == ConeDir::lower ? lower_cone(a) : upper_cone(a);
  }

  // Maximal elements of A: those a in A with nothing of A strictly above.
  Mask maximal(Mask a) const {
    Mask out = 0;
    for (int i : mask_elements(a))
      if ((above_[i] & a) == unit_mask(i)) out |= unit_mask(i);
    return out;
  }

  Mask minimal(Mask a) const {
    Mask out = 0;
    for (int i : mask_elements(a))
      if ((below_[i] & a) == unit_mask(i)) out |= unit_mask(i);
    return out;
  }

  Mask extremal(Mask a, ExtremalDir dir) const {
    return dir == ExtremalDir::max ? maximal(a) : minimal(a);
  }

  // Max L(A) and Min U(A), the poset surrogates for meet and join.
  Mask max_lower(Mask a) const { return maximal(lower_cone(a)); }
  Mask min_upper(Mask a) const { return minimal(upper_cone(a)); }

  // Covers of the order: the transitive reduction, as (lower, upper) pairs.
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
      for (int b : mask_elements(above_[a] & ~unit_mask(a))) {
        Mask between = above_[a] & below_[b] & ~unit_mask(a) & ~unit_mask(b);
        if (between == 0) out.emplace_back(a, b);
      }
    return out;
  }

  std::string subset_to_string(Mask m) const {
    if (is_singleton(m)) return names_[singleton_element(m)];
    std::string out = "{";
    bool first = true;
    for (int i : mask_elements(m)) {
      if (!first) out += ", ";
      out += names_[i];
      first = false;
    }
    return out + "}";
  }

  friend FinitePoset build_poset(
      const std::vector<std::string>& names,
      const std::vector<std::pair<std::string, std::string>>& covers,
      const std::vector<std::pair<std::string, std::string>>& complements,
      const std::string& label);

 private:
  FinitePoset() = default;

  Mask cone_from(const std::vector<Mask>& table, Mask a) const {
    Mask out = all();
    for (int i : mask_elements(a)) out &= table[i];
    return out;
  }

  std::string label_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
  std::optional<int> bottom_;
  std::optional<int> top_;
  std::optional<std::vector<int>> complement_;
};

// Complement candidates per element: the y with L(x,y) = {0} and
// U(x,y) = {1}. `total` iff every element has at least one.
struct ComplementSearch {
  std::vector<Mask> candidates;
  std::vector<int> map;  // first candidate per element; meaningful iff total
  bool total = false;
  bool unique = false;
  std::optional<int> missing;  // first element without a complement
};

inline ComplementSearch find_complements(const FinitePoset& p) {
  if (!p.bounded())
    throw ValidationError("complement search requires a bounded poset");
  Mask bot = unit_mask(*p.bottom());
  Mask top = unit_mask(*p.top());
  ComplementSearch out;
  out.total = true;
  out.unique = true;
  out.candidates.resize(p.size(), 0);
  out.map.assign(p.size(), -1);
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      Mask pair = unit_mask(x) | unit_mask(y);
      if (p.lower_cone(pair) == bot && p.upper_cone(pair) == top)
        out.candidates[x] |= unit_mask(y);
    }
    if (out.candidates[x] == 0) {
      out.total = false;
      out.unique = false;
      if (!out.missing) out.missing = x;
    } else {
      out.map[x] = singleton_element(out.candidates[x] & -out.candidates[x]);
      if (!is_singleton(out.candidates[x])) out.unique = false;
    }
  }
  return out;
}

struct DistributivityReport {
  bool verdict = true;
  // One verdict per displayed cone identity, all checked over every triple:
  //   1. L(U(x,y),z)  = LU(L(x,z),L(y,z))
  //   2. UL(U(x,y),z) = U(L(x,z),L(y,z))
  //   3. U(L(x,y),z)  = UL(U(x,z),U(y,z))
  //   4. LU(L(x,y),z) = L(U(x,z),U(y,z))
  std::array<bool, 4> per_identity{true, true, true, true};
  std::optional<std::array<int, 3>> witness;  // first triple violating #1
};

inline DistributivityReport is_distributive(const FinitePoset& p) {
  DistributivityReport rep;
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Mask xy_u = p.upper_cone(unit_mask(x) | unit_mask(y));
        Mask xy_l = p.lower_cone(unit_mask(x) | unit_mask(y));
        Mask xz_l = p.lower_cone(unit_mask(x) | unit_mask(z));
        Mask yz_l = p.lower_cone(unit_mask(y) | unit_mask(z));
        Mask xz_u = p.upper_cone(unit_mask(x) | unit_mask(z));
        Mask yz_u = p.upper_cone(unit_mask(y) | unit_mask(z));
        Mask zbit = unit_mask(z);

        bool ok1 = p.lower_cone(xy_u | zbit) ==
                   p.lower_cone(p.upper_cone(xz_l | yz_l));
        bool ok2 = p.upper_cone(p.lower_cone(xy_u | zbit)) ==
                   p.upper_cone(xz_l | yz_l);
        bool ok3 = p.upper_cone(xy_l | zbit) ==
                   p.upper_cone(p.lower_cone(xz_u | yz_u));
        bool ok4 = p.lower_cone(p.upper_cone(xy_l | zbit)) ==
                   p.lower_cone(xz_u | yz_u);

        if (!ok1 && !rep.witness) rep.witness = {{x, y, z}};
        rep.per_identity[0] = rep.per_identity[0] && ok1;
        rep.per_identity[1] = rep.per_identity[1] && ok2;
        rep.per_identity[2] = rep.per_identity[2] && ok3;
        rep.per_identity[3] = rep.per_identity[3] && ok4;
      }
  rep.verdict = rep.per_identity[0] && rep.per_identity[1] &&
                rep.per_identity[2] && rep.per_identity[3];
  return rep;
}

struct StructureClassification {
  bool is_poset = true;
  bool is_bounded = false;
  bool is_complemented = false;
  bool complement_unique = false;
  bool is_distributive = false;
  bool is_lattice = false;
  bool is_boolean_poset = false;
  bool is_boolean_algebra = false;
  std::optional<std::array<int, 3>> nondistributive_witness;
  std::optional<std::array<int, 2>> nonlattice_witness;
  std::optional<int> uncomplemented_witness;
};

inline StructureClassification classify(const FinitePoset& p) {
  StructureClassification c;
  c.is_bounded = p.bounded();
  if (c.is_bounded) {
    ComplementSearch cs = find_complements(p);
    c.is_complemented = cs.total;
    c.complement_unique = cs.total && cs.unique;
    c.uncomplemented_witness = cs.missing;
  }
  DistributivityReport d = is_distributive(p);
  c.is_distributive = d.verdict;
  c.nondistributive_witness = d.witness;

  c.is_lattice = true;
  for (int x = 0; x < p.size() && c.is_lattice; ++x)
    for (int y = x; y < p.size(); ++y) {
      Mask pair = unit_mask(x) | unit_mask(y);
      if (!is_singleton(p.min_upper(pair)) ||
          !is_singleton(p.max_lower(pair))) {
        c.is_lattice = false;
        c.nonlattice_witness = {{x, y}};
        break;
      }
    }

  c.is_boolean_poset = c.is_bounded && c.is_complemented && c.is_distributive;
  c.is_boolean_algebra = c.is_boolean_poset && c.is_lattice;
  return c;
}

// Builds a poset from its cover (Hasse) relation. The order is the
// reflexive-transitive closure of the covers; redundant covers are absorbed.
// Bounds are auto-detected. A supplied complement table is validated against
// the order; when none is supplied and the poset is bounded, complements are
// discovered automatically and stored if every element has one.
inline FinitePoset build_poset(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& covers,
    const std::vector<std::pair<std::string, std::string>>& complements = {},
    const std::string& label = "") {
  if (names.empty()) throw ValidationError("carrier must be nonempty");
  if (static_cast<int>(names.size()) > kMaxCarrier)
    throw ValidationError("carrier exceeds " + std::to_string(kMaxCarrier) +
                          " elements");
  FinitePoset p;
  p.label_ = label;
  p.names_ = names;
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    const std::string& s = names[i];
    if (s.empty() ||
        s.find_first_not_of("abcdefghijklmnopqrstuvwxyz"
                            "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_") !=
            std::string::npos)
      throw ValidationError("invalid element name '" + s + "'");
    if (!p.index_.emplace(s, i).second)
      throw ValidationError("duplicate element name '" + s + "'");
  }

  auto resolve = [&](const std::string& s) {
    auto it = p.index_.find(s);
    if (it == p.index_.end())
      throw ValidationError("unknown element name '" + s + "'");
    return it->second;
  };

  p.above_.assign(n, 0);
  for (int i = 0; i < n; ++i) p.above_[i] = unit_mask(i);
  for (const auto& [lo, hi] : covers) {
    int a = resolve(lo), b = resolve(hi);
    if (a == b)
      throw ValidationError("reflexive cover '" + lo + " < " + hi + "'");
    p.above_[a] |= unit_mask(b);
  }

  // Reflexive-transitive closure, then antisymmetry.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (mask_contains(p.above_[i], k)) p.above_[i] |= p.above_[k];
  for (int i = 0; i < n; ++i)
    for (int j : mask_elements(p.above_[i] & ~unit_mask(i)))
      if (mask_contains(p.above_[j], i))
        throw ValidationError("cycle detected between '" + names[i] +
                              "' and '" + names[j] + "'");

  p.below_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : mask_elements(p.above_[i])) p.below_[j] |= unit_mask(i);

  for (int i = 0; i < n; ++i) {
    if (p.above_[i] == p.all()) p.bottom_ = i;
    if (p.below_[i] == p.all()) p.top_ = i;
  }

  if (!complements.empty()) {
    if (!p.bounded())
      throw ValidationError("complement table requires a bounded poset");
    std::vector<int> cmap(n, -1);
    for (const auto& [xs, ys] : complements) {
      int x = resolve(xs), y = resolve(ys);
      if (cmap[x] != -1)
        throw ValidationError("duplicate complement entry for '" + xs + "'");
      Mask pair = unit_mask(x) | unit_mask(y);
      if (p.lower_cone(pair) != unit_mask(*p.bottom_) ||
          p.upper_cone(pair) != unit_mask(*p.top_))
        throw ValidationError("complement table contradicts the order: '" +
                              ys + "' is not a complement of '" + xs + "'");
      cmap[x] = y;
    }
    for (int i = 0; i < n; ++i)
      if (cmap[i] == -1)
        throw ValidationError("complement table incomplete: no entry for '" +
                              names[i] + "'");
    p.complement_ = std::move(cmap);
  } else if (p.bounded()) {
    ComplementSearch cs = find_complements(p);
    if (cs.total) p.complement_ = cs.map;
  }
  return p;
}

}  // namespace baaz
