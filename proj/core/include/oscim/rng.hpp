#pragma once

#include <cstdint>
#include <random>

namespace oscim {

// Output at position `index` of the splitmix64 stream with initial state
// `seed`. Used to derive independent, reproducible substream seeds; the
// substreams are order-independent by construction.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits. mt19937_64 is fully specified
// by the standard, so every draw is reproducible across platforms; the
// standard distributions are not, and are deliberately avoided.
inline double unit_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace oscim
