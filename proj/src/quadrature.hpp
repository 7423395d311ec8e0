#pragma once

#include <map>
#include <vector>

namespace kotz::detail {

struct GlRule {
  std::vector<double> nodes;    // on (0,1)
  std::vector<double> weights;  // sum to 1
};

/// Gauss-Legendre rule mapped to (0,1), cached per order.
const GlRule& gauss_legendre(int n);

}  // namespace kotz::detail
