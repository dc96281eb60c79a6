#pragma once

#include <cstdint>

namespace bev {

// Deterministic splitmix64 generator. All randomness in the project flows
// from a single root seed; independent streams are derived with derive(),
// so any component can be re-run in isolation and reproduce its draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Derived stream: mixes the tag through one splitmix round so streams
  // for different tags are decorrelated.
  static Rng derive(std::uint64_t seed, std::uint64_t tag) {
    Rng mixer(seed ^ (0xd1342543de82ef95ULL * (tag + 1)));
    return Rng(mixer.next_u64());
  }
  static Rng derive(std::uint64_t seed, std::uint64_t tag_a, std::uint64_t tag_b) {
    Rng first = derive(seed, tag_a);
    return derive(first.next_u64(), tag_b);
  }

 private:
  std::uint64_t state_;
};

}  // namespace bev
