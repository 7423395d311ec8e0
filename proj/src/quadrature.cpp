#include "quadrature.hpp"

#include <cmath>
#include <numbers>

namespace kotz::detail {

const GlRule& gauss_legendre(int n) {
  static std::map<int, GlRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GlRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - z);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + z);
    rule.weights[static_cast<std::size_t>(i)] = 0.5 * w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = 0.5 * w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace kotz::detail
