#pragma once

#include "kotz/gaussian.hpp"
#include "kotz/kotz_model.hpp"
#include "kotz/qp.hpp"

namespace kotz {

struct TailRequest {
  KotzModel model;
  Vector a;  ///< direction, not contained in (-inf, 0]^k
  Vector x;  ///< second-order offset; empty means zero
};

/// The triple (K, beta, c) with P{X > t a + x / v_n(t)} ~ K t^beta exp(-c t^delta).
/// K folds in the Gaussian conditional factor and the x-offset factor.
struct TailExpansion {
  double constant = 0.0;       ///< K
  double log_constant = 0.0;   ///< ln K
  double poly_exponent = 0.0;  ///< beta = N + delta (1 - (k+m)/2)
  double exp_coefficient = 0.0;  ///< c = q ||a_I||^delta
  double exp_power = 0.0;        ///< delta
  QpSolution qp;
  ProbEstimate gauss_factor;  ///< survivor on the binding part of J

  double log_value_at(double t) const;  ///< natural log of the expansion
  double value_at(double t) const;
};

/// Normalisation v_n of the excess: q delta (t ||a_I||)^{delta-1} on I and
/// sqrt(q delta) (t ||a_I||)^{delta/2 - 1} on J.
Vector v_n(const QpSolution& qp, const KotzParams& params, double t);

TailExpansion tail_asymptotic(const TailRequest& request, const MvnOptions& options = {});

/// The general Gumbel-MDA expansion with abstract domain-of-attraction data,
/// evaluated verbatim; requires ||a_I|| = 1. q_J entries may be -inf.
double gumbel_tail_general(const CorrelationSpec& spec, const Vector& a, double tail_of_F_at_t,
                           double w_at_t, double t, const Vector& q_I,
                           const std::vector<double>& q_J, const MvnOptions& options = {});

/// Marginal tail 1 - G_1(t) of any coordinate.
double marginal_tail(const KotzParams& params, int k, double t);

/// Effective Kotz parameters of the marginal tail: the margin again satisfies
/// the radial tail form with N' = N - delta (k-1)/2 and the constant below.
KotzParams marginal_params(const KotzParams& params, int k);

}  // namespace kotz
