#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>

namespace geoassess {

// Seeded generator with fully specified output streams. mt19937_64 is
// pinned by the standard; the uniform and normal transforms below are
// spelled out here instead of using std::*_distribution, whose algorithms
// are implementation-defined. Identical seeds therefore give identical
// draws on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on (0, 1]; never returns 0 so log(u) is always finite.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; the second member of each pair is
  // cached so draws come in a fixed order.
  double normal() {
    if (spare_) {
      const double z = *spare_;
      spare_.reset();
      return z;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    return r * std::cos(t);
  }

private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace geoassess
