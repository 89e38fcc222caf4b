#pragma once
// Deterministic, stream-splittable PRNG (xoshiro256++ seeded via splitmix64).
//
// Every source of randomness in the simulator is an explicit substream derived
// from (episode seed, purpose tag). Hand-rolled samplers keep traces identical
// across standard libraries and platforms.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rccda {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Purpose tags for substream derivation. Keeping the data-evolution streams
// separate from batch/policy streams is what makes common-random-number
// comparisons across policies valid.
enum class StreamTag : std::uint64_t {
  kPoolInit = 1,
  kPoolAdvance = 2,
  kHoldoutAdvance = 3,
  kBatch = 4,
  kPolicy = 5,
  kLossEval = 6,
  kMisc = 7,
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
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

  // Uniform double in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::next_below: n must be positive");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Standard normal via Box-Muller (two uniforms per draw, no cached spare).
  double next_normal() {
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::array<std::uint64_t, 4> s_{};
};

// Independent substream for a (seed, tag) pair; extra salt distinguishes
// repeated uses of the same tag (e.g. per-domain placement).
inline Rng derive_stream(std::uint64_t seed, StreamTag tag, std::uint64_t salt = 0) {
  std::uint64_t sm = seed;
  std::uint64_t a = splitmix64(sm);
  sm = a ^ (static_cast<std::uint64_t>(tag) * 0xD1B54A32D192ED03ULL);
  std::uint64_t b = splitmix64(sm);
  sm = b ^ (salt * 0x8CB92BA72F3D8DD7ULL + 0x2545F4914F6CDD1DULL);
  return Rng(splitmix64(sm));
}

// FNV-1a over raw 64-bit words; used for data-stream digests.
class Fnv1a {
 public:
  void add(std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= (word >> (8 * i)) & 0xFFULL;
      h_ *= 0x100000001B3ULL;
    }
  }
  void add(double value) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(value));
    __builtin_memcpy(&bits, &value, sizeof(bits));
    add(bits);
  }
  std::uint64_t digest() const { return h_; }

 private:
  std::uint64_t h_ = 0xCBF29CE484222325ULL;
};

}  // namespace rccda
