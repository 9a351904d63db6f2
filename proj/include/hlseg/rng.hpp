#pragma once

#include <cmath>
#include <cstdint>

namespace hlseg {

// Fixed-algorithm 64-bit generator (splitmix64). Every random draw in the
// project goes through this so that runs are reproducible across platforms;
// platform RNGs and std:: distributions are never used.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 significant bits
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  float next_float() { return static_cast<float>(next_double()); }

  // uniform in [lo, hi)
  float next_uniform(float lo, float hi) {
    return lo + (hi - lo) * next_float();
  }

  uint64_t next_below(uint64_t n) { return n ? next_u64() % n : 0; }

  bool next_bool() { return (next_u64() & 1ull) != 0; }

  // standard normal via Box-Muller; consumes two draws per pair
  float next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * 3.14159265358979323846 * u2;
    spare_ = static_cast<float>(r * std::sin(t));
    have_spare_ = true;
    return static_cast<float>(r * std::cos(t));
  }

 private:
  uint64_t state_;
  bool have_spare_ = false;
  float spare_ = 0.f;
};

// Deterministic seed derivation for substreams (per sample, per iteration...).
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

}  // namespace hlseg
