#pragma once

#include <cstdint>
#include <utility>

namespace lclab {

/// Cantor pairing: a bijection N x N -> N used to fix the breadth-first
/// dovetailing order everywhere a "first found" search appears.
inline std::uint64_t pair_code(std::uint64_t a, std::uint64_t b) {
  return (a + b) * (a + b + 1) / 2 + b;
}

inline std::uint64_t isqrt64(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

inline std::pair<std::uint64_t, std::uint64_t> unpair_code(std::uint64_t n) {
  std::uint64_t w = (isqrt64(8 * n + 1) - 1) / 2;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  while (w * (w + 1) / 2 > n) --w;
  std::uint64_t b = n - w * (w + 1) / 2;
  return {w - b, b};
}

}  // namespace lclab
