#pragma once

#include <cstdint>
#include <vector>

#include "kotz/linalg.hpp"

namespace kotz {

/// Standard normal distribution function, complementary-error-function based.
double std_normal_cdf(double x);
/// Upper tail 1 - Phi(x), accurate in relative terms far into the tail.
double std_normal_sf(double x);
/// Inverse of the upper tail: std_normal_sf(quantile) = p.
double std_normal_upper_quantile(double p);

/// Law of Z_J given Z_I = 0 for centred Gaussian Z with covariance Sigma.
struct ConditionalGaussian {
  IndexSet J;
  Matrix cov;  ///< Schur complement, symmetric positive definite
};

ConditionalGaussian conditional_law(const CorrelationSpec& spec, const IndexSet& I);

struct ProbEstimate {
  double value = 1.0;
  double error = 0.0;  ///< estimated absolute integration error
};

struct MvnOptions {
  std::size_t points = std::size_t{1} << 13;  ///< QMC points per randomization
  int randomizations = 8;
  std::uint64_t seed = 20090617;  ///< fixed default keeps every caller deterministic
};

/// P(W > lower) for W centred Gaussian with the given covariance.
/// Coordinates with lower = -inf are marginalised out exactly. Dimensions
/// 0-2 use closed forms / deterministic quadrature; higher dimensions use a
/// separation-of-variables transform with randomized quasi-Monte Carlo.
ProbEstimate mvn_survivor(const Matrix& cov, const std::vector<double>& lower,
                          const MvnOptions& options = {});

ProbEstimate survivor_prob(const ConditionalGaussian& law, const std::vector<double>& lower,
                           const MvnOptions& options = {});

}  // namespace kotz
