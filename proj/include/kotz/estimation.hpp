#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kotz/kotz_model.hpp"
#include "kotz/linalg.hpp"

namespace kotz {

/// n x k sample with per-coordinate order statistics cached.
class SampleMatrix {
 public:
  explicit SampleMatrix(Matrix data);

  std::size_t n() const { return static_cast<std::size_t>(data_.rows()); }
  int k() const { return static_cast<int>(data_.cols()); }
  const Matrix& data() const { return data_; }
  /// Ascending order statistics of the 1-based coordinate.
  const std::vector<double>& sorted_column(int coord) const;

 private:
  Matrix data_;
  std::vector<std::vector<double>> sorted_;
};

struct TailFit {
  double delta_hat = 0.0;
  double q_hat = 0.0;
  std::size_t k_n = 0;
  double T_n = 0.0;
  int coordinate = 1;
};

std::size_t default_kn(std::size_t n);  ///< floor(n^0.6)

/// Normalizer turning the average upper-order log-spacing into an estimate
/// of 1/delta: the mean of log log(n/i) - log log(n/k_n) over i = 1..k_n.
double default_Tn(std::size_t n, std::size_t k_n);

/// Tail-exponent estimator delta_hat = 1 / (T_n * mean log-spacing), where
/// the mean runs over the top k_n order statistics against Y_{n-k_n+1:n}.
double gardes_girard_delta(const std::vector<double>& column, std::size_t k_n, double T_n);
double gardes_girard_delta(const SampleMatrix& sample, int coord, std::size_t k_n, double T_n);

/// Scale estimator q_hat = mean over i = 1..k_n of log(n/i) / Y_{n-i+1:n}^delta_hat.
double q_estimate(const std::vector<double>& column, std::size_t k_n, double delta_hat);
double q_estimate(const SampleMatrix& sample, int coord, std::size_t k_n, double delta_hat);

TailFit fit_tail(const SampleMatrix& sample, int coord = 1,
                 std::optional<std::size_t> k_n = std::nullopt,
                 std::optional<double> T_n = std::nullopt);

/// Plain plug-in Pearson correlation, validated through factorize.
CorrelationSpec corr_estimate(const SampleMatrix& sample);

/// Plug-in survivor estimate at t * 1 with fitted (q, delta, Sigma) and the
/// known constants p, N. The second overload is the plug-in core and is the
/// exact evaluation path shared with tail_asymptotic.
double survivor_estimate(const SampleMatrix& sample, int coord, double t, double p, double N);
double survivor_estimate(const KotzParams& params, const CorrelationSpec& spec, double t);

/// Plug-in conditional excess estimate of P{X - t 1 > x | X > t 1} through
/// the limit law evaluated at the v_n-scaled offset.
double excess_estimate(const SampleMatrix& sample, double t, const Vector& x, double p, double N);
double excess_estimate(const KotzParams& params, const CorrelationSpec& spec, double t,
                       const Vector& x);

}  // namespace kotz
