#pragma once

#include <cstdint>
#include <string_view>

namespace morphsplit {

inline constexpr std::uint64_t kFnv1a64Basis = 14695981039346656037ULL;

/// FNV-1a 64-bit. Chainable: pass a previous digest as the basis.
constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = kFnv1a64Basis) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// One round of splitmix64, used to spread structured seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace morphsplit
