#pragma once

#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "kotz/kotz_model.hpp"
#include "kotz/linalg.hpp"

namespace kotz {

struct TailCount {
  std::size_t count = 0;
  double probability = 0.0;
  double std_error = 0.0;
};

/// Fraction of n samples with X > t a componentwise, with binomial standard
/// error. Sampling is chunked over counter-based streams so parallel and
/// serial runs count identically.
TailCount empirical_tail(const KotzModel& model, const Vector& a, double t, std::size_t n,
                         std::uint64_t seed);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// One-sample Kolmogorov-Smirnov statistic against the given distribution
/// function, with the asymptotic p-value.
KsResult ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

struct ValidationReport {
  std::string scenario;
  std::uint64_t seed = 0;
  bool pass = false;
  nlohmann::json details;

  nlohmann::json to_json() const;
};

/// Triangular-array experiment: blocks of bivariate Kotz vectors with the
/// correlation implied by gamma, componentwise maxima normalised by the exact
/// margin quantiles, empirical joint CDF compared to hr_cdf on a fixed grid.
ValidationReport hr_experiment(double gamma, std::size_t n_block, std::size_t m_blocks,
                               const KotzParams& params, std::uint64_t seed);

/// Control with a fixed correlation: the normalised maxima must approach the
/// independent Gumbel product.
ValidationReport hr_fixed_corr_experiment(double sigma12, std::size_t n_block,
                                          std::size_t m_blocks, const KotzParams& params,
                                          std::uint64_t seed);

/// Collects exceedances of X > t a, scales them by v_n, and tests every
/// I-coordinate against its exponential limit plus cross-coordinate
/// independence.
ValidationReport excess_experiment(const KotzModel& model, const Vector& a, double t,
                                   std::size_t n, std::uint64_t seed);

std::vector<std::string> scenario_names();

/// Runs a named validation scenario. scale < 1 shrinks the Monte Carlo sizes
/// proportionally (recorded in the emitted configuration).
ValidationReport run_scenario(const std::string& name, std::uint64_t seed, double scale = 1.0);

}  // namespace kotz
