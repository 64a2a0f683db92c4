#pragma once

#include <cstdint>
#include <random>

namespace lapspec {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seed for substream (index, salt) under a master seed. Search instances draw
// their network and sampling seeds from disjoint (index, salt) pairs, so each
// instance's stream is fixed by (master_seed, index) alone and never depends
// on scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                 std::uint64_t salt = 0) {
  std::uint64_t s = master;
  std::uint64_t acc = splitmix64(s);
  s ^= (index + 1) * 0x9e3779b97f4a7c15ull;
  acc ^= splitmix64(s);
  s ^= (salt + 1) * 0xbf58476d1ce4e5b9ull;
  acc ^= splitmix64(s);
  return acc;
}

// Deterministic generator with hand-rolled distributions. std:: distribution
// objects are implementation-defined in the exact values they produce; the
// conversions here pin the byte-for-byte output so identical seeds give
// identical runs everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // symmetric uniform on [-half_width, half_width)
  double uniform_symmetric(double half_width) {
    return (2.0 * uniform01() - 1.0) * half_width;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // unbiased integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t r;
    do {
      r = next_u64();
    } while (r >= limit);
    return r % n;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lapspec
