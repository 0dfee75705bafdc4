#pragma once

#include <cstdint>
#include <random>

namespace burnside {

// Seeded generator for the sampled checks. Raw engine output only, so runs
// are reproducible for a fixed seed and standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
  std::mt19937_64 eng_;
};

}  // namespace burnside
