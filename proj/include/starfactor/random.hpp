#pragma once

// Uniform random tournament model: every one of the n(n-1)/2 edge
// orientations is an independent fair coin flip.
//
// Generator contract (fixed so experiments reproduce across runs):
// an std::mt19937_64 is seeded directly with `seed`; its output words are
// consumed as a bit stream, least-significant bit first, 64 edge bits per
// word; pairs (i, j) with i < j are visited in row-major order and bit 1
// orients i -> j. Same (n, seed) always yields the identical tournament.
// Bit-compatibility with other implementations is not a goal.

#include <cstdint>
#include <random>

#include "starfactor/tournament.hpp"

namespace starfactor {

inline Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tournament: n must be positive");
  std::mt19937_64 gen(seed);
  std::uint64_t word = 0;
  int bits_left = 0;
  return Tournament::build(n, [&](int, int) {
    if (bits_left == 0) {
      word = gen();
      bits_left = 64;
    }
    bool b = word & 1;
    word >>= 1;
    --bits_left;
    return b;
  });
}

}  // namespace starfactor
