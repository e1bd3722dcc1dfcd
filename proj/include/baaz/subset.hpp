#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace baaz {

// Subsets of a carrier are bit-vectors keyed by carrier index.
// Carriers are capped at 64 elements so a subset fits in one word.
using Mask = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

constexpr Mask unit_mask(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int n) {
  return n >= kMaxCarrier ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool mask_contains(Mask m, int i) { return (m >> i) & 1; }

constexpr int mask_size(Mask m) { return std::popcount(m); }

constexpr bool is_singleton(Mask m) { return std::has_single_bit(m); }

// Index of the unique element of a singleton mask.
constexpr int singleton_element(Mask m) { return std::countr_zero(m); }

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

}  // namespace baaz
