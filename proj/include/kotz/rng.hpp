#pragma once

#include <cstdint>

namespace kotz {

/// Counter-based splittable random stream.
///
/// Output i of stream (seed, id) is splitmix64 evaluated at a key derived
/// from (seed, id) plus i increments, so any (seed, stream) pair addresses a
/// reproducible sequence regardless of scheduling. Parallel consumers take
/// one stream each; aggregation stays order-independent.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1)) ^ mix(stream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform on the open interval (0,1).
  double next_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double next_normal();

  double next_exponential(double rate = 1.0);

  /// Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape > 0.
  double next_gamma(double shape);

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace kotz
