#pragma once

#include <cmath>
#include <cstdint>

namespace dudelab {

// SplitMix64: seeds the main generator and derives independent substreams.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// xoshiro256++ (Blackman & Vigna). Small, fast, and fully reproducible across
// platforms — the point here is bit-stable simulations, not cryptography.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64_next(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0,1): 53 random bits scaled by 2^-53. Never returns 1.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unit-mean exponential; -log1p(-u) keeps precision for small u and is
  // finite because uniform01() < 1.
  double exponential() { return -std::log1p(-uniform01()); }

  // Exact Poisson via Knuth's product method, chunked so the running product
  // never underflows for large means: split mean into <=12-sized pieces and
  // sum independent draws.
  std::uint64_t poisson(double mean) {
    std::uint64_t total = 0;
    while (mean > 12.0) {
      total += poisson_small(12.0);
      mean -= 12.0;
    }
    return total + poisson_small(mean);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t poisson_small(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    std::uint64_t count = 0;
    double prod = uniform01();
    while (prod > limit) {
      ++count;
      prod *= uniform01();
    }
    return count;
  }

  std::uint64_t s_[4];
};

// Deterministic per-drop seed: drop i of a run seeded with `base` always sees
// the same generator, independent of scheduling or worker count.
inline std::uint64_t drop_seed(std::uint64_t base, std::uint64_t drop_index) {
  std::uint64_t sm = base + (drop_index + 1) * 0x9E3779B97F4A7C15ULL;
  return splitmix64_next(sm);
}

}  // namespace dudelab
