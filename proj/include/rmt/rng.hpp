#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace rmt {

// SplitMix64 finalizer (Steele/Lea/Flood). Bijective 64-bit mixer.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;  // 2^64 / phi

// Derives an independent stream key from a root seed and a path of indices.
// Each component is folded through the finalizer, so the key depends on the
// order of the path: (seed, i, j) and (seed, j, i) are unrelated streams.
constexpr std::uint64_t derive_stream(std::uint64_t seed,
                                      std::initializer_list<std::uint64_t> path) {
  std::uint64_t k = splitmix64_mix(seed + kGolden);
  for (std::uint64_t p : path) {
    k = splitmix64_mix(k ^ (p + kGolden));
  }
  return k;
}

// Counter-based SplitMix64 generator: draw i of stream k is
// splitmix64_mix(k + i*kGolden). Every draw is a pure function of
// (key, counter), so streams can be replayed or split freely and results
// do not depend on which thread consumes them.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return splitmix64_mix(key_ + (++counter_) * kGolden); }

  // Uniform on [0,1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal deviate, Box-Muller; the second value of each pair is
  // cached so gaussian draws cost one pair of uniforms per two calls.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log1p(-u1));  // 1-u1 in (0,1], no log(0)
    double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace rmt
