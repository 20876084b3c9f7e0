#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qf {

/// Deterministic random stream. Every sampling routine in the library draws
/// from this class, so a (seed, stream) pair fully determines all output.
/// The engine is std::mt19937_64 (its output sequence is pinned by the
/// standard); the distributions are hand-rolled so that the stream does not
/// depend on the standard-library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for worker `index` of a run seeded with `seed`.
  static Rng derive(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53 random bits.
  double uniform01();

  /// Standard normal (Marsaglia polar method).
  double normal();

  /// Complex gaussian with E|z|^2 = 1.
  std::complex<double> complex_normal();

  /// Uniform on {0, ..., n-1}, unbiased.
  int uniform_int(int n);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qf
