#include "kotz/gaussian.hpp"

#include <algorithm>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "kotz/rng.hpp"
#include "quadrature.hpp"

namespace kotz {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double std_normal_sf(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double std_normal_upper_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    if (p == 0.0) return kInf;
    if (p == 1.0) return -kInf;
    throw OutOfRange("upper quantile needs p in [0,1]");
  }
  return kSqrt2 * boost::math::erfc_inv(2.0 * p);
}

ConditionalGaussian conditional_law(const CorrelationSpec& spec, const IndexSet& I) {
  if (I.empty()) throw Error("conditional_law: I must be non-empty");
  return ConditionalGaussian{I.complement(), schur_complement(spec, I)};
}

namespace {

using detail::gauss_legendre;
using detail::GlRule;

// Plackett identity: P(Z1>a, Z2>b; rho) = sf(a) sf(b) + int_0^rho phi2(a,b;r) dr,
// integrated in the angle variable r = sin(theta) where the density stays bounded.
double plackett_correction(double a, double b, double rho, int order) {
  const double asr = std::asin(rho);
  const GlRule& rule = gauss_legendre(order);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double theta = asr * rule.nodes[i];
    const double s = std::sin(theta);
    const double c2 = 1.0 - s * s;
    acc += rule.weights[i] * std::exp(-(a * a + b * b - 2.0 * a * b * s) / (2.0 * c2));
  }
  return acc * asr / kTwoPi;
}

ProbEstimate bivariate_survivor(double a, double b, double rho) {
  if (rho > 1.0 - 1e-12) {
    return {std_normal_sf(std::max(a, b)), 1e-15};
  }
  if (rho < -1.0 + 1e-12) {
    return {std::max(0.0, std_normal_cdf(-b) - std_normal_cdf(a)), 1e-15};
  }
  const double base = std_normal_sf(a) * std_normal_sf(b);
  const double coarse = plackett_correction(a, b, rho, 64);
  const double fine = plackett_correction(a, b, rho, 128);
  const double value = base + fine;
  const double err = std::abs(fine - coarse) + 4e-16 * (base + std::abs(fine));
  return {std::max(value, 0.0), err};
}

// Separation-of-variables RQMC in the upper-tail parameterisation; every
// conditional factor is an upper-tail probability, so relative accuracy
// survives extreme thresholds.
ProbEstimate genz_survivor(const Matrix& cov, const std::vector<double>& lower,
                           const MvnOptions& opt) {
  const int d = static_cast<int>(cov.rows());
  const Matrix L = cholesky_lower(cov);
  const int qdim = d - 1;

  static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                               41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  std::vector<double> alpha(static_cast<std::size_t>(qdim));
  for (int j = 0; j < qdim; ++j) {
    double r = std::sqrt(static_cast<double>(primes[j]));
    alpha[static_cast<std::size_t>(j)] = r - std::floor(r);
  }

  RngStream shift_rng(opt.seed, 0);
  std::vector<double> estimates;
  estimates.reserve(static_cast<std::size_t>(opt.randomizations));
  std::vector<double> shift(static_cast<std::size_t>(qdim));
  std::vector<double> y(static_cast<std::size_t>(qdim));

  for (int rep = 0; rep < opt.randomizations; ++rep) {
    for (auto& s : shift) s = shift_rng.next_double();
    double sum = 0.0;
    for (std::size_t i = 0; i < opt.points; ++i) {
      double prod = 1.0;
      for (int r = 0; r < d && prod > 0.0; ++r) {
        double shifted = lower[static_cast<std::size_t>(r)];
        for (int c = 0; c < r; ++c) shifted -= L(r, c) * y[static_cast<std::size_t>(c)];
        const double p = std_normal_sf(shifted / L(r, r));
        prod *= p;
        if (r < qdim && prod > 0.0) {
          double u = static_cast<double>(i) * alpha[static_cast<std::size_t>(r)] +
                     shift[static_cast<std::size_t>(r)];
          u -= std::floor(u);
          u = 1.0 - std::abs(2.0 * u - 1.0);  // tent/baker transform
          const double w = std::max(p * u, 1e-300);
          y[static_cast<std::size_t>(r)] = std_normal_upper_quantile(w);
        }
      }
      sum += prod;
    }
    estimates.push_back(sum / static_cast<double>(opt.points));
  }

  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= static_cast<double>(estimates.size());
  double var = 0.0;
  for (double e : estimates) var += (e - mean) * (e - mean);
  var /= static_cast<double>(estimates.size()) * (static_cast<double>(estimates.size()) - 1.0);
  return {mean, 3.0 * std::sqrt(var)};
}

}  // namespace

ProbEstimate mvn_survivor(const Matrix& cov, const std::vector<double>& lower,
                          const MvnOptions& options) {
  if (cov.rows() != cov.cols() || static_cast<std::size_t>(cov.rows()) != lower.size()) {
    throw DimensionMismatch("mvn_survivor: covariance/threshold sizes disagree");
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (std::isnan(lower[i]) || lower[i] == kInf) {
      throw Error("mvn_survivor: thresholds must be finite or -inf");
    }
    if (lower[i] > -kInf) keep.push_back(static_cast<int>(i));
  }

  const int d = static_cast<int>(keep.size());
  if (d == 0) return {1.0, 0.0};

  Matrix sub(d, d);
  std::vector<double> thr(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    thr[static_cast<std::size_t>(r)] = lower[static_cast<std::size_t>(keep[r])];
    for (int c = 0; c < d; ++c) sub(r, c) = cov(keep[r], keep[c]);
  }

  if (d == 1) {
    const double sd = std::sqrt(sub(0, 0));
    return {std_normal_sf(thr[0] / sd), 1e-16};
  }
  if (d == 2) {
    const double s1 = std::sqrt(sub(0, 0));
    const double s2 = std::sqrt(sub(1, 1));
    const double rho = sub(0, 1) / (s1 * s2);
    return bivariate_survivor(thr[0] / s1, thr[1] / s2, rho);
  }
  return genz_survivor(sub, thr, options);
}

ProbEstimate survivor_prob(const ConditionalGaussian& law, const std::vector<double>& lower,
                           const MvnOptions& options) {
  return mvn_survivor(law.cov, lower, options);
}

}  // namespace kotz
