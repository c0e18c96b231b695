#pragma once

// Deterministic splittable RNG (splitmix64).  Every sampled axiom check
// derives its stream from a run seed plus the axiom name, so adding or
// reordering checks never perturbs the samples drawn by other checks.

#include <cstdint>
#include <string_view>

namespace dblift {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(next() % n);
  }

  static std::uint64_t fold(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ull ^ seed;
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return h;
  }

  static Rng for_axiom(std::uint64_t seed, std::string_view axiom) {
    return Rng(fold(seed, axiom));
  }

 private:
  std::uint64_t state_;
};

}  // namespace dblift
