#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baaz/errors.hpp"
#include "baaz/poset.hpp"
#include "baaz/ring.hpp"

namespace baaz {

// A Boolean algebra as a Boolean poset that happens to be a lattice, with
// join/meet tables read off the Min U / Max L singletons of the order.
class BooleanAlgebra {
 public:
  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& label() const { return poset_.label(); }
  const std::vector<std::string>& carrier() const { return poset_.carrier(); }
  const std::string& name_of(int i) const { return poset_.name_of(i); }
  std::optional<int> index_of(const std::string& name) const {
    return poset_.index_of(name);
  }

  int zero() const { return zero_; }
  int one() const { return one_; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int comp(int a) const { return comp_[a]; }

  friend BooleanAlgebra boolean_algebra_from_poset(const FinitePoset& p);

 private:
  BooleanAlgebra(FinitePoset p, std::vector<int> join, std::vector<int> meet,
                 std::vector<int> comp, int zero, int one)
      : poset_(std::move(p)),
        join_(std::move(join)),
        meet_(std::move(meet)),
        comp_(std::move(comp)),
        zero_(zero),
        one_(one) {}

  FinitePoset poset_;
  std::vector<int> join_;
  std::vector<int> meet_;
  std::vector<int> comp_;
  int zero_ = 0;
  int one_ = 0;
};

// Reads the algebra off a poset that classifies as a Boolean algebra.
// Complement and De Morgan laws are re-verified exhaustively; a failure
// there indicates a bug, not bad input.
inline BooleanAlgebra boolean_algebra_from_poset(const FinitePoset& p) {
  StructureClassification c = classify(p);
  if (!c.is_boolean_poset) {
    std::string why = !c.is_bounded        ? "it is not bounded"
                      : !c.is_complemented ? "it is not complemented"
                                           : "it is not distributive";
    throw ValidationError("'" + p.label() + "' is not a Boolean algebra: " +
                          why);
  }
  if (!c.is_lattice) {
    std::string msg = "'" + p.label() + "' is not a Boolean algebra: not a lattice";
    if (c.nonlattice_witness) {
      auto [x, y] = *c.nonlattice_witness;
      msg += " (Min U(" + p.name_of(x) + ", " + p.name_of(y) + ") = " +
             p.subset_to_string(p.min_upper(unit_mask(x) | unit_mask(y))) +
             ")";
    }
    throw ValidationError(msg);
  }

  const int n = p.size();
  std::vector<int> join(n * n);
  std::vector<int> meet(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Mask pair = unit_mask(x) | unit_mask(y);
      join[x * n + y] = singleton_element(p.min_upper(pair));
      meet[x * n + y] = singleton_element(p.max_lower(pair));
    }
  BooleanAlgebra a(p, std::move(join), std::move(meet), p.complements(),
                   *p.bottom(), *p.top());

  for (int x = 0; x < n; ++x) {
    if (a.meet(x, a.comp(x)) != a.zero_ || a.join(x, a.comp(x)) != a.one_)
      throw ValidationError("complement laws fail at '" + p.name_of(x) + "'");
    if (a.comp(a.comp(x)) != x)
      throw ValidationError("complementation is not an involution at '" +
                            p.name_of(x) + "'");
    for (int y = 0; y < n; ++y) {
      if (a.comp(a.join(x, y)) != a.meet(a.comp(x), a.comp(y)) ||
          a.comp(a.meet(x, y)) != a.join(a.comp(x), a.comp(y)))
        throw ValidationError("De Morgan laws fail at (" + p.name_of(x) +
                              ", " + p.name_of(y) + ")");
    }
  }
  return a;
}

// Symmetric difference (x' ∧ y) ∨ (x ∧ y').
inline int symmetric_difference(const BooleanAlgebra& a, int x, int y) {
  return a.join(a.meet(a.comp(x), y), a.meet(x, a.comp(y)));
}

// The Boolean ring of an algebra: addition is symmetric difference,
// multiplication is meet. The result passes the full ring axiom check and
// is idempotent with x + x = 0.
inline UnitaryRing boolean_ring_of(const BooleanAlgebra& a) {
  const int n = a.size();
  std::vector<std::vector<std::string>> add(n, std::vector<std::string>(n));
  std::vector<std::vector<std::string>> mul(n, std::vector<std::string>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add[x][y] = a.name_of(symmetric_difference(a, x, y));
      mul[x][y] = a.name_of(a.meet(x, y));
    }
  UnitaryRing r = build_ring(a.carrier(), add, mul, a.name_of(a.zero()),
                             a.name_of(a.one()), a.label() + "_ring");
  if (!r.is_boolean_ring())
    throw ValidationError("derived ring of '" + a.label() +
                          "' is not Boolean");
  return r;
}

}  // namespace baaz
