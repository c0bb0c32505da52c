#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace chernkit {

/// Deterministic generator. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; the uniform and normal transforms are
/// implemented here so samples are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller).
  double normal();
  /// Circular complex normal with E|w|^2 = 1.
  std::complex<double> complex_normal();

  /// Seed for an independent sub-stream, so parallel work keyed by `stream`
  /// does not depend on scheduling order.
  static std::uint64_t split(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace chernkit
