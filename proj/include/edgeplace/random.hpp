#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

namespace edgeplace {

// Seeded generator with a portable uniform draw. std::mt19937_64's output
// sequence is fixed by the standard, but the standard distributions are not,
// so uniform reals are built from the raw 64-bit output directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double Canonical() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi); returns lo when lo == hi.
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Canonical(); }

  // Uniform index in [0, n); n > 0.
  int Index(int n) { return std::min(static_cast<int>(Canonical() * n), n - 1); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace edgeplace
