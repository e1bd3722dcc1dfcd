#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "baaz/errors.hpp"

namespace baaz {

// A finite ring with unit, given by full Cayley tables. Every axiom is
// verified exhaustively at construction; a violation throws with a witness
// tuple. Commutativity is not required.
class UnitaryRing {
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

  int zero() const { return zero_; }
  int one() const { return one_; }

  int add(int a, int b) const { return add_[a * size() + b]; }
  int mul(int a, int b) const { return mul_[a * size() + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  bool is_commutative() const { return is_commutative_; }
  bool is_field() const { return is_field_; }
  bool is_boolean_ring() const { return is_boolean_ring_; }
  // The one-element ring with 0 = 1; accepted but refused by interpolation.
  bool is_trivial() const { return zero_ == one_; }

  // Multiplicative inverse by exhaustive search.
  std::optional<int> mul_inverse(int a) const {
    for (int b = 0; b < size(); ++b)
      if (mul(a, b) == one_ && mul(b, a) == one_) return b;
    return std::nullopt;
  }

  friend UnitaryRing build_ring(const std::vector<std::string>& names,
                                const std::vector<std::vector<std::string>>& add_table,
                                const std::vector<std::vector<std::string>>& mul_table,
                                const std::string& zero_name,
                                const std::string& one_name,
                                const std::string& label);

 private:
  UnitaryRing() = default;

  std::string label_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  int zero_ = 0;
  int one_ = 0;
  bool is_commutative_ = false;
  bool is_field_ = false;
  bool is_boolean_ring_ = false;
};

inline UnitaryRing build_ring(
    const std::vector<std::string>& names,
    const std::vector<std::vector<std::string>>& add_table,
    const std::vector<std::vector<std::string>>& mul_table,
    const std::string& zero_name, const std::string& one_name,
    const std::string& label = "") {
  if (names.empty()) throw ValidationError("carrier must be nonempty");
  UnitaryRing r;
  r.label_ = label;
  r.names_ = names;
  const int n = r.size();
  for (int i = 0; i < n; ++i) {
    const std::string& s = names[i];
    if (s.empty() ||
        s.find_first_not_of("abcdefghijklmnopqrstuvwxyz"
                            "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_") !=
            std::string::npos)
      throw ValidationError("invalid element name '" + s + "'");
    if (!r.index_.emplace(s, i).second)
      throw ValidationError("duplicate element name '" + s + "'");
  }
  auto resolve = [&](const std::string& s) {
    auto it = r.index_.find(s);
    if (it == r.index_.end())
      throw ValidationError("unknown element name '" + s + "'");
    return it->second;
  };
  auto read_table = [&](const std::vector<std::vector<std::string>>& t,
                        const char* what) {
    if (static_cast<int>(t.size()) != n)
      throw ValidationError(std::string(what) + " table must have " +
                            std::to_string(n) + " rows");
    std::vector<int> out(n * n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(t[i].size()) != n)
        throw ValidationError(std::string(what) + " table row '" + names[i] +
                              "' must have " + std::to_string(n) +
                              " entries");
      for (int j = 0; j < n; ++j) out[i * n + j] = resolve(t[i][j]);
    }
    return out;
  };
  r.add_ = read_table(add_table, "add");
  r.mul_ = read_table(mul_table, "mul");
  r.zero_ = resolve(zero_name);
  r.one_ = resolve(one_name);

  auto nm = [&](int i) { return names[i]; };
  auto add = [&](int a, int b) { return r.add_[a * n + b]; };
  auto mul = [&](int a, int b) { return r.mul_[a * n + b]; };

  // (carrier, +, 0) must be an abelian group.
  for (int a = 0; a < n; ++a) {
    if (add(a, r.zero_) != a || add(r.zero_, a) != a)
      throw ValidationError("zero is not an additive identity at '" + nm(a) +
                            "'");
    for (int b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a))
        throw ValidationError("addition is not commutative at (" + nm(a) +
                              ", " + nm(b) + ")");
      for (int c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c)))
          throw ValidationError("addition is not associative at (" + nm(a) +
                                ", " + nm(b) + ", " + nm(c) + ")");
    }
  }
  r.neg_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (add(a, b) == r.zero_) {
        r.neg_[a] = b;
        break;
      }
    if (r.neg_[a] == -1)
      throw ValidationError("'" + nm(a) + "' has no additive inverse");
  }

  for (int a = 0; a < n; ++a) {
    if (mul(a, r.one_) != a || mul(r.one_, a) != a)
      throw ValidationError("one is not an identity at '" + nm(a) + "'");
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ValidationError("multiplication is not associative at (" +
                                nm(a) + ", " + nm(b) + ", " + nm(c) + ")");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw ValidationError("left distributivity fails at (" + nm(a) +
                                ", " + nm(b) + ", " + nm(c) + ")");
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
          throw ValidationError("right distributivity fails at (" + nm(a) +
                                ", " + nm(b) + ", " + nm(c) + ")");
      }
  }

  r.is_commutative_ = true;
  for (int a = 0; a < n && r.is_commutative_; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        r.is_commutative_ = false;
        break;
      }

  r.is_boolean_ring_ = true;
  for (int a = 0; a < n; ++a)
    if (mul(a, a) != a || add(a, a) != r.zero_) {
      r.is_boolean_ring_ = false;
      break;
    }

  r.is_field_ = r.is_commutative_ && r.zero_ != r.one_;
  for (int a = 0; a < n && r.is_field_; ++a) {
    if (a == r.zero_) continue;
    bool invertible = false;
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == r.one_) {
        invertible = true;
        break;
      }
    r.is_field_ = invertible;
  }
  return r;
}

}  // namespace baaz
