#pragma once

#include <cstdint>
#include <vector>

namespace sgraph {

// Deterministic, seedable, splittable generator (xoshiro256** seeded through
// splitmix64). Identical (seed, stream) pairs produce identical sequences on
// every platform; replicate r of an experiment uses stream(seed, r).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { reseed(seed); }

  static Rng stream(std::uint64_t seed, std::uint64_t stream_index) {
    // Mix the stream index in before expansion so streams are independent.
    return Rng(seed ^ (0x9E3779B97F4A7C15ULL +
                       stream_index * 0xBF58476D1CE4E5B9ULL));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_u01() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Rejection on the top bits keeps it unbiased.
  std::uint64_t next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll((n - 1) | 1);
    for (;;) {
      std::uint64_t v = next_u64() & mask;
      if (v < n) return v;
    }
  }

  // Index into a cumulative-probability table (ascending, back() ~ 1).
  std::size_t next_from_cdf(const std::vector<double>& cdf) {
    double u = next_u01();
    std::size_t lo = 0, hi = cdf.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cdf[mid] <= u)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo < cdf.size() ? lo : cdf.size() - 1;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  void reseed(std::uint64_t seed) {
    // splitmix64 expansion; guarantees a nonzero xoshiro state.
    std::uint64_t z = seed;
    for (auto& s : s_) {
      z += 0x9E3779B97F4A7C15ULL;
      std::uint64_t x = z;
      x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
      x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
      s = x ^ (x >> 31);
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  std::uint64_t s_[4];
};

}  // namespace sgraph
