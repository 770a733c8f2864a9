#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

#include "apolar/fp.hpp"

namespace apolar {

// splitmix64 finalizer; used to stretch seeds and combine cell coordinates.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Deterministic random source.  Every consumer derives its own engine from a
// global seed plus its cell coordinates, so reports are reproducible and
// independent of evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform field element: 61 bits with rejection of the single value p.
  Fp fp() {
    for (;;) {
      std::uint64_t v = eng_() >> 3;
      if (v < Fp::prime) return Fp::from_u64(v);
    }
  }

  Fp nonzero() {
    for (;;) {
      Fp x = fp();
      if (!x.is_zero()) return x;
    }
  }

  std::uint64_t below(std::uint64_t n) {
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      std::uint64_t v = eng_();
      if (v < lim) return v % n;
    }
  }

  static std::uint64_t derive(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> coords) {
    std::uint64_t s = mix64(seed);
    for (std::uint64_t c : coords) s = mix64(s ^ c);
    return s;
  }

  static Rng for_cell(std::uint64_t seed,
                      std::initializer_list<std::uint64_t> coords) {
    return Rng(derive(seed, coords));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace apolar
