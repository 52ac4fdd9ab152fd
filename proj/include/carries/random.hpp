#pragma once

#include <cstdint>
#include <random>

namespace carries {

/// Seeded generator shared by the carries simulator and the shuffle sampler.
///
/// Stream semantics: the engine is std::mt19937_64 seeded with the 64-bit
/// seed, so the raw stream is fixed by the C++ standard. Bounded draws use
/// rejection on the top of the 64-bit range (no library distributions), so a
/// given seed yields the same digits on every platform. Each digit consumes
/// one raw output except for the rare rejected draws. split() consumes one
/// raw output of the parent and uses it to seed an independent child.
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 20150601;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return x % bound;
  }

  Rng split() { return Rng(engine_()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace carries
