#include "kotz/rng.hpp"

#include <cmath>
#include <numbers>

namespace kotz {

double RngStream::next_normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_normal_;
  }
  const double r = std::sqrt(-2.0 * std::log(next_double()));
  const double theta = 2.0 * std::numbers::pi * next_double();
  cached_normal_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

double RngStream::next_exponential(double rate) { return -std::log(next_double()) / rate; }

double RngStream::next_gamma(double shape) {
  if (shape < 1.0) {
    const double boost = std::pow(next_double(), 1.0 / shape);
    return next_gamma(shape + 1.0) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = next_normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace kotz
