#ifndef FBC_RNG_HPP
#define FBC_RNG_HPP

#include <cstdint>

namespace fbc {

/// splitmix64; small, portable, deterministic across platforms, which keeps
/// seeded reports byte-identical everywhere.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

/// Engine for sample `index` of a seeded sweep.
inline SplitMix64 derive_rng(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix{seed};
  const std::uint64_t a = mix.next();
  SplitMix64 out{a ^ (index * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL)};
  out.next();
  return out;
}

/// Uniform draw from [0, n) by rejection; n >= 1.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t draw = rng.next();
  while (draw >= limit) draw = rng.next();
  return draw % n;
}

}  // namespace fbc

#endif
