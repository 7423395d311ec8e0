#include "kotz/limit_laws.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace kotz {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ExcessLimitLaw excess_limit(const CorrelationSpec& spec, const Vector& a,
                            const MvnOptions& options) {
  const QpSolution sol = solve(spec, a);
  ExcessLimitLaw law;
  law.I = sol.I;
  law.J = sol.J;
  law.binding_J = sol.binding_J;
  law.rates = sol.lambda_I / std::sqrt(sol.value);
  if (!sol.J.empty()) {
    law.cond_law = conditional_law(spec, sol.I);
    std::vector<double> thresholds(static_cast<std::size_t>(sol.J.size()), -kInf);
    for (int p = 0; p < sol.J.size(); ++p) {
      if (sol.binding_J.contains(sol.J.at(p))) thresholds[static_cast<std::size_t>(p)] = 0.0;
    }
    law.denom = survivor_prob(*law.cond_law, thresholds, options).value;
  }
  return law;
}

double excess_survivor(const ExcessLimitLaw& law, const IndexSet& L, const Vector& x,
                       const MvnOptions& options) {
  if (x.size() != L.size()) throw DimensionMismatch("excess_survivor: |x| != |L|");

  double log_value = 0.0;
  bool touches_j = false;
  for (int p = 0; p < L.size(); ++p) {
    const int l = L.at(p);
    const int pos_i = law.I.position_of(l);
    if (pos_i >= 0) {
      // Exponential component; support is [0, inf).
      log_value -= law.rates[pos_i] * std::max(x[p], 0.0);
      continue;
    }
    if (law.J.position_of(l) < 0) {
      throw IndexOutOfRange("excess_survivor: index " + std::to_string(l) + " outside I and J");
    }
    if (x[p] < 0.0) throw NegativeThresholdOnJ("x must be >= 0 on J-coordinates");
    touches_j = true;
  }

  if (touches_j) {
    std::vector<double> thresholds(static_cast<std::size_t>(law.J.size()), -kInf);
    for (int p = 0; p < law.J.size(); ++p) {
      const int j = law.J.at(p);
      if (!law.binding_J.contains(j)) continue;  // W_j = +inf, drops out
      const int pos_l = L.position_of(j);
      thresholds[static_cast<std::size_t>(p)] = pos_l >= 0 ? x[pos_l] : 0.0;
    }
    const double numer = survivor_prob(*law.cond_law, thresholds, options).value;
    log_value += std::log(numer) - std::log(law.denom);
  }
  return std::exp(log_value);
}

ConditionalProfile conditional_profile(const CorrelationSpec& spec, const Vector& a,
                                       const IndexSet& I, const KotzParams& params, double t,
                                       ProfileMode mode) {
  if (!(t > 0.0)) throw NonPositiveArgument("conditional_profile needs t > 0");
  if (a.size() != spec.dim()) throw DimensionMismatch("conditional_profile: vector length");
  const Vector a_I = subvector(a, I);
  const double norm_sq = quad_form_inv(spec, I, a_I);
  if (mode == ProfileMode::kExceedance) {
    const Vector lambda = solve_principal(spec, I, a_I);
    if ((lambda.array() <= 0.0).any()) {
      throw ConditionViolated("Sigma_II^{-1} a_I must be positive on the exceedance path");
    }
  } else if (!(norm_sq > 0.0)) {
    throw ConditionViolated("||a_I|| must be positive");
  }
  ConditionalProfile profile{projection_vector(spec, I, a_I) * t,
                             std::sqrt(params.q * params.delta) *
                                 std::pow(t * std::sqrt(norm_sq), 0.5 * params.delta - 1.0),
                             conditional_law(spec, I)};
  return profile;
}

HrNorming hr_norming(const KotzParams& params, double n) {
  if (!(n >= 2.0)) throw OutOfRange("hr_norming needs n >= 2");
  const double u = std::log(n) / params.q;
  const double a_n = std::pow(u, 1.0 / params.delta - 1.0) / (params.q * params.delta);
  const double b_n =
      std::pow(u, 1.0 / params.delta) +
      a_n * (params.N * std::log(u) / params.delta + std::log(params.p));
  return {a_n, b_n};
}

double hr_cdf(double x, double y, double gamma) {
  if (!(gamma > 0.0)) throw OutOfRange("hr_cdf needs gamma > 0");
  const double first = std_normal_cdf(gamma + (x - y) / (2.0 * gamma)) * std::exp(-y);
  const double second = std_normal_cdf(gamma + (y - x) / (2.0 * gamma)) * std::exp(-x);
  return std::exp(-first - second);
}

double hr_cdf_complete_dependence(double x, double y) {
  return std::exp(-std::exp(-std::min(x, y)));
}

double hr_corr_for_gamma(const KotzParams& params, double gamma, double n) {
  if (!(gamma > 1e-8)) {
    throw DegenerateGamma("gamma <= 1e-8; the complete-dependence limit is a separate function");
  }
  const HrNorming norming = hr_norming(params, n);
  const double sigma = 1.0 - gamma * gamma * (2.0 * norming.a_n / norming.b_n);
  if (!(sigma > -1.0) || !(sigma < 1.0)) {
    throw OutOfRange("n too small: implied correlation " + std::to_string(sigma));
  }
  return sigma;
}

}  // namespace kotz
