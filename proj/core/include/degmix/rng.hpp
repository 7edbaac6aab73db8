#pragma once

#include <cstdint>
#include <random>

namespace degmix {

/// SplitMix64 finalizer. Used to expand one master seed into independent
/// per-chain seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of stream `index` derived from `master`. Stream 0 drives coordinate
/// selection in a product chain; stream i+1 drives coordinate i.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(master ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// mt19937_64 with portable bounded draws. std::uniform_int_distribution is
/// implementation-defined, so seeded runs would differ across standard
/// libraries; these helpers do not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 1) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t index(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  bool operator==(const Rng& other) const = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace degmix
