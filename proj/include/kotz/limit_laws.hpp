#pragma once

#include <optional>

#include "kotz/gaussian.hpp"
#include "kotz/kotz_model.hpp"
#include "kotz/qp.hpp"

namespace kotz {

/// Limit of v_n (X - t a) given X > t a: independent exponentials on I with
/// the stated rates, an independent conditional-Gaussian ratio law on the
/// binding part of J, and +infinity on the non-binding part of J.
struct ExcessLimitLaw {
  IndexSet I;
  IndexSet J;
  IndexSet binding_J;
  Vector rates;  ///< lambda_i = a_I^T Sigma_II^{-1} e_i / ||a_I||, i in I
  std::optional<ConditionalGaussian> cond_law;  ///< present iff J non-empty
  double denom = 1.0;  ///< survivor of cond_law at the 0 / -inf thresholds
};

ExcessLimitLaw excess_limit(const CorrelationSpec& spec, const Vector& a,
                            const MvnOptions& options = {});

/// P{W_L > x} for the limit law; x is aligned with L and must be
/// non-negative on the J-coordinates of L.
double excess_survivor(const ExcessLimitLaw& law, const IndexSet& L, const Vector& x,
                       const MvnOptions& options = {});

/// Thm 4.2 conditions on X_I > t a_I and needs Sigma_II^{-1} a_I > 0;
/// Thm 4.3 conditions on X_I = t a_I and needs only a_I != 0. Both share the
/// same limit, so one operation carries a mode flag for the precondition.
enum class ProfileMode { kExceedance, kFixed };

struct ConditionalProfile {
  Vector center;  ///< t Sigma_JI Sigma_II^{-1} a_I
  double scale;   ///< h_n = sqrt(q delta) (t ||a_I||)^{delta/2 - 1}
  ConditionalGaussian law;
};

ConditionalProfile conditional_profile(const CorrelationSpec& spec, const Vector& a,
                                       const IndexSet& I, const KotzParams& params, double t,
                                       ProfileMode mode);

struct HrNorming {
  double a_n;
  double b_n;
};

/// Norming constants a_n = (q^{-1} ln n)^{1/delta - 1}/(q delta) and
/// b_n = (q^{-1} ln n)^{1/delta} + a_n [N ln(q^{-1} ln n)/delta + ln p].
HrNorming hr_norming(const KotzParams& params, double n);

/// Bivariate Huesler-Reiss distribution with unit Gumbel margins.
double hr_cdf(double x, double y, double gamma);

/// The gamma -> 0 limit (complete dependence).
double hr_cdf_complete_dependence(double x, double y);

/// Finite-n correlation for which the triangular-array condition holds with
/// the given gamma: sigma = 1 - gamma^2 / (b_n / (2 a_n)).
double hr_corr_for_gamma(const KotzParams& params, double gamma, double n);

}  // namespace kotz
