#pragma once

#include <cstdint>
#include <random>

namespace admm_topo {

// Seeded random source with a fixed bits-to-double mapping.
//
// std::mt19937_64's output sequence is pinned by the standard, but the
// distributions (std::uniform_real_distribution etc.) are not; mapping the
// raw 64-bit words ourselves keeps every "identical seed => identical
// output" promise portable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1): top 53 bits scaled by 2^-53
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace admm_topo
