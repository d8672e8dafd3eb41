#pragma once

// Internal packed representation of image words: one nibble per point,
// point 1 in the most significant used nibble, so the natural uint64_t
// order coincides with the canonical (lexicographic) ChainMap order.
// Supports n <= 15 (values 0..15 per nibble).

#include <cstdint>
#include <vector>

#include "chainsemi/chain_map.hpp"

namespace chainsemi::detail {

inline constexpr int kPackedMaxN = 15;

inline std::uint64_t pack(const ChainMap& m) {
  std::uint64_t key = 0;
  for (int y : m.word()) key = (key << 4) | static_cast<std::uint64_t>(y);
  return key;
}

inline ChainMap unpack(int n, std::uint64_t key) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int x = n; x >= 1; --x) {
    word[x - 1] = static_cast<int>(key & 0xF);
    key >>= 4;
  }
  return ChainMap(n, std::move(word));
}

inline std::uint64_t compose_packed(int n, std::uint64_t a, std::uint64_t b) {
  std::uint64_t c = 0;
  for (int x = 0; x < n; ++x) {
    const unsigned y = static_cast<unsigned>((a >> (4 * (n - 1 - x))) & 0xF);
    if (y != 0) {
      const std::uint64_t z = (b >> (4 * (n - static_cast<int>(y)))) & 0xF;
      c |= z << (4 * (n - 1 - x));
    }
  }
  return c;
}

}  // namespace chainsemi::detail
