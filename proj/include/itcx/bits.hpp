#pragma once

#include <array>
#include <cstdint>

namespace itcx::bits {

constexpr std::array<std::uint8_t, 256> make_byte_reverse() {
  std::array<std::uint8_t, 256> t{};
  for (int b = 0; b < 256; ++b) {
    int r = 0;
    for (int i = 0; i < 8; ++i)
      if (b & (1 << i)) r |= 1 << (7 - i);
    t[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(r);
  }
  return t;
}

inline constexpr std::array<std::uint8_t, 256> kByteReverse = make_byte_reverse();

inline std::uint32_t reverse32(std::uint32_t x) {
  return (static_cast<std::uint32_t>(kByteReverse[x & 0xff]) << 24) |
         (static_cast<std::uint32_t>(kByteReverse[(x >> 8) & 0xff]) << 16) |
         (static_cast<std::uint32_t>(kByteReverse[(x >> 16) & 0xff]) << 8) |
         static_cast<std::uint32_t>(kByteReverse[(x >> 24) & 0xff]);
}

inline std::uint64_t reverse64(std::uint64_t x) {
  return (static_cast<std::uint64_t>(reverse32(static_cast<std::uint32_t>(x))) << 32) |
         reverse32(static_cast<std::uint32_t>(x >> 32));
}

// Bits 0..n-1 set; n must be in [0, 63].
inline std::uint64_t low_mask(int n) { return n <= 0 ? 0 : (std::uint64_t{1} << n) - 1; }

}  // namespace itcx::bits
