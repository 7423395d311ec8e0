#include "kotz/kotz_model.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "quadrature.hpp"

namespace kotz {

namespace {

void check_params(const KotzParams& params) {
  if (!(params.p > 0.0) || !(params.q > 0.0) || !(params.delta > 0.0)) {
    throw NonPositiveArgument("Kotz parameters require p > 0, q > 0, delta > 0");
  }
}

}  // namespace

KotzParams gaussian_params(int k) {
  if (k < 2) throw OutOfRange("gaussian_params needs k >= 2");
  const double half_k = 0.5 * static_cast<double>(k);
  const double p = std::exp(-((half_k - 1.0) * std::numbers::ln2 + std::lgamma(half_k)));
  return KotzParams{p, 0.5, 2.0, static_cast<double>(k - 2)};
}

double scaling_w(const KotzParams& params, double u) {
  check_params(params);
  if (!(u > 0.0)) throw NonPositiveArgument("scaling_w needs u > 0");
  return params.q * params.delta * std::pow(u, params.delta - 1.0);
}

double induced_p(double q, double delta, double N) {
  if (!(q > 0.0) || !(delta > 0.0)) throw NonPositiveArgument("induced_p needs q, delta > 0");
  if (!(N + delta > 0.0)) throw InvalidShape("induced_p needs N + delta > 0");
  return std::exp((N / delta) * std::log(q) - std::lgamma((N + delta) / delta));
}

RadialLaw canonical_radial(const KotzParams& params) {
  check_params(params);
  if (!(params.N + params.delta > 0.0)) {
    throw InvalidShape("canonical radial law needs N + delta > 0");
  }
  const double implied = induced_p(params.q, params.delta, params.N);
  if (std::abs(params.p - implied) > 1e-9 * implied) {
    throw InconsistentP("p = " + std::to_string(params.p) + " but the canonical law realises p = " +
                        std::to_string(implied) + "; pass the induced value");
  }
  return RadialLaw{(params.N + params.delta) / params.delta, params.q, params.delta};
}

double radial_survivor(const RadialLaw& law, double u) {
  if (u <= 0.0) return 1.0;
  return boost::math::gamma_q(law.shape, law.rate * std::pow(u, law.delta));
}

std::vector<double> sample_radius(const RadialLaw& law, std::size_t n, std::uint64_t seed,
                                  std::uint64_t stream) {
  RngStream rng(seed, stream);
  std::vector<double> out(n);
  for (auto& r : out) {
    r = std::pow(rng.next_gamma(law.shape) / law.rate, 1.0 / law.delta);
  }
  return out;
}

Matrix sample_sphere(int k, std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  if (k < 2) throw OutOfRange("sample_sphere needs k >= 2");
  RngStream rng(seed, stream);
  Matrix out(static_cast<Eigen::Index>(n), k);
  Vector g(k);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    double norm = 0.0;
    do {
      for (int j = 0; j < k; ++j) g[j] = rng.next_normal();
      norm = g.norm();
    } while (norm == 0.0);
    out.row(i) = g.transpose() / norm;
  }
  return out;
}

KotzSampler::KotzSampler(const KotzModel& model, std::uint64_t seed, std::uint64_t stream)
    : chol_(model.spec.chol()),
      law_(canonical_radial(model.params)),
      k_(model.spec.dim()),
      rng_(seed, stream),
      direction_(static_cast<std::size_t>(model.spec.dim())) {}

double KotzSampler::next(double* out) {
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& d : direction_) {
      d = rng_.next_normal();
      norm += d * d;
    }
    norm = std::sqrt(norm);
  } while (norm == 0.0);
  const double radius = std::pow(rng_.next_gamma(law_.shape) / law_.rate, 1.0 / law_.delta);
  const double scale = radius / norm;
  for (int i = 0; i < k_; ++i) {
    double acc = 0.0;
    for (int j = 0; j <= i; ++j) acc += chol_(i, j) * direction_[static_cast<std::size_t>(j)];
    out[i] = acc * scale;
  }
  return radius;
}

Matrix sample_kotz(const KotzModel& model, std::size_t n, std::uint64_t seed) {
  KotzSampler sampler(model, seed, 0);
  Matrix out(static_cast<Eigen::Index>(n), model.spec.dim());
  std::vector<double> row(static_cast<std::size_t>(model.spec.dim()));
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    sampler.next(row.data());
    for (int j = 0; j < model.spec.dim(); ++j) out(i, j) = row[static_cast<std::size_t>(j)];
  }
  return out;
}

double margin_survivor(const KotzParams& params, int k, double t) {
  if (k < 2) throw OutOfRange("margin_survivor needs k >= 2");
  if (!(t > 0.0)) throw NonPositiveArgument("margin_survivor needs t > 0");
  const RadialLaw law = canonical_radial(params);
  // P{R U_1 > t} = int_0^{pi/2} P{R > t/sin(phi)} cos^{k-2}(phi) dphi / B(1/2,(k-1)/2)
  const double log_beta = std::lgamma(0.5) + std::lgamma(0.5 * (k - 1)) - std::lgamma(0.5 * k);
  const auto& rule = detail::gauss_legendre(256);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double phi = 0.5 * std::numbers::pi * rule.nodes[i];
    const double s = std::sin(phi);
    if (s <= 0.0) continue;
    double f = radial_survivor(law, t / s);
    if (k > 2) f *= std::pow(std::cos(phi), static_cast<double>(k - 2));
    acc += rule.weights[i] * f;
  }
  return acc * 0.5 * std::numbers::pi / std::exp(log_beta);
}

double margin_quantile(const KotzParams& params, int k, double tail_prob) {
  if (!(tail_prob > 0.0) || !(tail_prob < 0.5)) {
    throw OutOfRange("margin_quantile expects a tail probability in (0, 0.5)");
  }
  double lo = 1e-8;
  double hi = 1.0;
  while (margin_survivor(params, k, hi) > tail_prob) hi *= 2.0;
  while (margin_survivor(params, k, lo) < tail_prob) lo *= 0.5;
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-13 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (margin_survivor(params, k, mid) > tail_prob ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace kotz
