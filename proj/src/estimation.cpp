#include "kotz/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kotz/limit_laws.hpp"
#include "kotz/tail.hpp"

namespace kotz {

SampleMatrix::SampleMatrix(Matrix data) : data_(std::move(data)) {
  if (data_.cols() < 2 || data_.rows() <= data_.cols()) {
    throw DimensionMismatch("sample needs n > k >= 2");
  }
  if (!data_.allFinite()) throw Error("sample contains non-finite entries");
  sorted_.resize(static_cast<std::size_t>(data_.cols()));
  for (int c = 0; c < data_.cols(); ++c) {
    auto& col = sorted_[static_cast<std::size_t>(c)];
    col.resize(n());
    for (std::size_t r = 0; r < n(); ++r) {
      col[r] = data_(static_cast<Eigen::Index>(r), c);
    }
    std::sort(col.begin(), col.end());
  }
}

const std::vector<double>& SampleMatrix::sorted_column(int coord) const {
  if (coord < 1 || coord > k()) throw IndexOutOfRange("coordinate outside {1..k}");
  return sorted_[static_cast<std::size_t>(coord - 1)];
}

std::size_t default_kn(std::size_t n) {
  return static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 0.6)));
}

double default_Tn(std::size_t n, std::size_t k_n) {
  if (k_n < 2 || k_n >= n) throw KnTooLarge("need 2 <= k_n < n");
  const double nn = static_cast<double>(n);
  const double base = std::log(std::log(nn / static_cast<double>(k_n)));
  double acc = 0.0;
  for (std::size_t i = 1; i <= k_n; ++i) {
    acc += std::log(std::log(nn / static_cast<double>(i))) - base;
  }
  return acc / static_cast<double>(k_n);
}

namespace {

void check_order_stats(const std::vector<double>& sorted, std::size_t k_n) {
  if (k_n < 1 || k_n >= sorted.size()) throw KnTooLarge("need 1 <= k_n < n");
  if (sorted[sorted.size() - k_n] <= 0.0) {
    throw NonPositiveOrderStatistic("upper order statistics must be positive");
  }
}

double mean_log_spacing(const std::vector<double>& sorted, std::size_t k_n) {
  const double log_base = std::log(sorted[sorted.size() - k_n]);
  double acc = 0.0;
  for (std::size_t i = 1; i <= k_n; ++i) {
    acc += std::log(sorted[sorted.size() - i]) - log_base;
  }
  return acc / static_cast<double>(k_n);
}

}  // namespace

double gardes_girard_delta(const std::vector<double>& column, std::size_t k_n, double T_n) {
  if (k_n < 2) throw KnTooLarge("delta estimator needs k_n >= 2");
  check_order_stats(column, k_n);
  if (!(T_n > 0.0)) throw NonPositiveArgument("T_n must be positive");
  const double spacing = mean_log_spacing(column, k_n);
  if (!(spacing > 0.0)) {
    throw ZeroTailSpacings("upper order statistics carry no spread");
  }
  return 1.0 / (T_n * spacing);
}

double gardes_girard_delta(const SampleMatrix& sample, int coord, std::size_t k_n, double T_n) {
  return gardes_girard_delta(sample.sorted_column(coord), k_n, T_n);
}

double q_estimate(const std::vector<double>& column, std::size_t k_n, double delta_hat) {
  check_order_stats(column, k_n);
  if (!(delta_hat > 0.0)) throw NonPositiveArgument("delta_hat must be positive");
  const double n = static_cast<double>(column.size());
  double acc = 0.0;
  for (std::size_t i = 1; i <= k_n; ++i) {
    acc += std::log(n / static_cast<double>(i)) /
           std::pow(column[column.size() - i], delta_hat);
  }
  return acc / static_cast<double>(k_n);
}

double q_estimate(const SampleMatrix& sample, int coord, std::size_t k_n, double delta_hat) {
  return q_estimate(sample.sorted_column(coord), k_n, delta_hat);
}

TailFit fit_tail(const SampleMatrix& sample, int coord, std::optional<std::size_t> k_n,
                 std::optional<double> T_n) {
  TailFit fit;
  fit.coordinate = coord;
  fit.k_n = k_n.value_or(default_kn(sample.n()));
  fit.T_n = T_n.value_or(default_Tn(sample.n(), fit.k_n));
  fit.delta_hat = gardes_girard_delta(sample, coord, fit.k_n, fit.T_n);
  fit.q_hat = q_estimate(sample, coord, fit.k_n, fit.delta_hat);
  return fit;
}

CorrelationSpec corr_estimate(const SampleMatrix& sample) {
  if (sample.n() <= 10 * static_cast<std::size_t>(sample.k())) {
    throw OutOfRange("correlation estimate needs n > 10k");
  }
  const Matrix& x = sample.data();
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Matrix centered = x.rowwise() - mean;
  Matrix cov = centered.transpose() * centered / static_cast<double>(sample.n() - 1);
  Matrix corr(sample.k(), sample.k());
  for (int r = 0; r < sample.k(); ++r) {
    for (int c = 0; c < sample.k(); ++c) {
      corr(r, c) = r == c ? 1.0 : cov(r, c) / std::sqrt(cov(r, r) * cov(c, c));
    }
  }
  corr = ((corr + corr.transpose()) / 2.0).eval();
  return CorrelationSpec::factorize(corr);
}

double survivor_estimate(const KotzParams& params, const CorrelationSpec& spec, double t) {
  TailRequest request{KotzModel{params, spec}, Vector::Ones(spec.dim()), Vector()};
  return tail_asymptotic(request).value_at(t);
}

double survivor_estimate(const SampleMatrix& sample, int coord, double t, double p, double N) {
  const TailFit fit = fit_tail(sample, coord);
  const CorrelationSpec spec = corr_estimate(sample);
  return survivor_estimate(KotzParams{p, fit.q_hat, fit.delta_hat, N}, spec, t);
}

double excess_estimate(const KotzParams& params, const CorrelationSpec& spec, double t,
                       const Vector& x) {
  if (x.size() != spec.dim()) throw DimensionMismatch("excess_estimate: offset length");
  const Vector ones = Vector::Ones(spec.dim());
  const QpSolution sol = solve(spec, ones);
  const Vector scaled = v_n(sol, params, t).cwiseProduct(x);
  return excess_survivor(excess_limit(spec, ones), IndexSet::full(spec.dim()), scaled);
}

double excess_estimate(const SampleMatrix& sample, double t, const Vector& x, double p, double N) {
  const TailFit fit = fit_tail(sample);
  const CorrelationSpec spec = corr_estimate(sample);
  return excess_estimate(KotzParams{p, fit.q_hat, fit.delta_hat, N}, spec, t, x);
}

}  // namespace kotz
