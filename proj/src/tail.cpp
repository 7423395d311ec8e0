#include "kotz/tail.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace kotz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_det_principal(const CorrelationSpec& spec, const IndexSet& I) {
  if (I.size() == spec.dim()) return spec.log_det();
  return 2.0 * cholesky_lower(submatrix(spec, I, I)).diagonal().array().log().sum();
}

// Gamma(k/2) 2^{k/2-1} / ((2 pi)^{m/2} |Sigma_II|^{1/2} prod_i lambda_i), in logs.
double log_gaussian_prefactor(const CorrelationSpec& spec, const QpSolution& sol) {
  const double k = spec.dim();
  const double m = sol.I.size();
  return std::lgamma(0.5 * k) + (0.5 * k - 1.0) * std::numbers::ln2 -
         0.5 * m * std::log(2.0 * std::numbers::pi) - 0.5 * log_det_principal(spec, sol.I) -
         sol.lambda_I.array().log().sum();
}

}  // namespace

double TailExpansion::log_value_at(double t) const {
  if (!(t > 0.0)) throw NonPositiveArgument("tail expansion needs t > 0");
  return log_constant + poly_exponent * std::log(t) - exp_coefficient * std::pow(t, exp_power);
}

double TailExpansion::value_at(double t) const { return std::exp(log_value_at(t)); }

Vector v_n(const QpSolution& qp, const KotzParams& params, double t) {
  if (!(t > 0.0)) throw NonPositiveArgument("v_n needs t > 0");
  const double h = t * std::sqrt(qp.value);
  const double qd = params.q * params.delta;
  const double on_i = qd * std::pow(h, params.delta - 1.0);
  const double on_j = std::sqrt(qd) * std::pow(h, 0.5 * params.delta - 1.0);
  Vector out(qp.I.dim());
  for (int i = 1; i <= qp.I.dim(); ++i) out[i - 1] = qp.I.contains(i) ? on_i : on_j;
  return out;
}

TailExpansion tail_asymptotic(const TailRequest& request, const MvnOptions& options) {
  const CorrelationSpec& spec = request.model.spec;
  const KotzParams& params = request.model.params;
  const int k = spec.dim();
  if (request.a.size() != k) throw DimensionMismatch("tail_asymptotic: direction length");
  Vector x = request.x;
  if (x.size() == 0) x = Vector::Zero(k);
  if (x.size() != k) throw DimensionMismatch("tail_asymptotic: offset length");

  TailExpansion exp_out;
  exp_out.qp = solve(spec, request.a);
  const QpSolution& sol = exp_out.qp;
  const int m = sol.I.size();
  const double s = std::sqrt(sol.value);
  const double shape = 1.0 - 0.5 * (k + m);

  double log_k = std::log(params.p) + shape * std::log(params.q * params.delta) +
                 (m + params.N + params.delta * shape) * std::log(s) +
                 log_gaussian_prefactor(spec, sol) -
                 subvector(x, sol.I).dot(sol.lambda_I) / s;

  if (sol.J.empty()) {
    exp_out.gauss_factor = {1.0, 0.0};
  } else {
    // Binding coordinates keep the finite threshold x_j; strictly non-binding
    // ones carry -inf and drop out (the "infinity times zero is zero" rule).
    std::vector<double> thresholds(static_cast<std::size_t>(sol.J.size()), -kInf);
    for (int p = 0; p < sol.J.size(); ++p) {
      const int j = sol.J.at(p);
      if (sol.binding_J.contains(j)) thresholds[static_cast<std::size_t>(p)] = x[j - 1];
    }
    exp_out.gauss_factor = survivor_prob(conditional_law(spec, sol.I), thresholds, options);
  }
  log_k += std::log(exp_out.gauss_factor.value);

  exp_out.log_constant = log_k;
  exp_out.constant = std::exp(log_k);
  exp_out.poly_exponent = params.N + params.delta * shape;
  exp_out.exp_coefficient = params.q * std::pow(s, params.delta);
  exp_out.exp_power = params.delta;
  return exp_out;
}

double gumbel_tail_general(const CorrelationSpec& spec, const Vector& a, double tail_of_F_at_t,
                           double w_at_t, double t, const Vector& q_I,
                           const std::vector<double>& q_J, const MvnOptions& options) {
  if (!(tail_of_F_at_t > 0.0)) throw NonPositiveArgument("gumbel_tail_general: tail of F");
  if (!(w_at_t > 0.0) || !(t > 0.0)) throw NonPositiveArgument("gumbel_tail_general: t, w > 0");
  const QpSolution sol = solve(spec, a);
  const double s = std::sqrt(sol.value);
  if (std::abs(s - 1.0) > 1e-9) {
    throw NormalizationViolated("||a_I|| = " + std::to_string(s) + "; rescale a and t");
  }
  const int k = spec.dim();
  const int m = sol.I.size();
  if (q_I.size() != m) throw DimensionMismatch("gumbel_tail_general: q_I length");
  if (static_cast<int>(q_J.size()) != sol.J.size()) {
    throw DimensionMismatch("gumbel_tail_general: q_J length");
  }

  double log_v = -q_I.dot(sol.lambda_I) + log_gaussian_prefactor(spec, sol);
  if (!sol.J.empty()) {
    log_v += std::log(survivor_prob(conditional_law(spec, sol.I), q_J, options).value);
  }
  log_v += (1.0 - 0.5 * (k + m)) * std::log(t * w_at_t) + std::log(tail_of_F_at_t);
  return std::exp(log_v);
}

double marginal_tail(const KotzParams& params, int k, double t) {
  if (k < 2) throw OutOfRange("marginal_tail needs k >= 2");
  if (!(t > 0.0)) throw NonPositiveArgument("marginal_tail needs t > 0");
  const double half = 0.5 * (k - 1);
  const double log_value = -std::numbers::ln2 + std::lgamma(0.5 * k) - std::lgamma(0.5) +
                           half * std::numbers::ln2 - half * std::log(t * scaling_w(params, t)) +
                           std::log(params.p) + params.N * std::log(t) -
                           params.q * std::pow(t, params.delta);
  return std::exp(log_value);
}

KotzParams marginal_params(const KotzParams& params, int k) {
  if (k < 2) throw OutOfRange("marginal_params needs k >= 2");
  const double half = 0.5 * (k - 1);
  const double log_p = -std::numbers::ln2 + std::lgamma(0.5 * k) - std::lgamma(0.5) +
                       half * std::numbers::ln2 - half * std::log(params.q * params.delta) +
                       std::log(params.p);
  return KotzParams{std::exp(log_p), params.q, params.delta, params.N - params.delta * half};
}

}  // namespace kotz
