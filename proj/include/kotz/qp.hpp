#pragma once

#include <vector>

#include "kotz/linalg.hpp"

namespace kotz {

/// Solution of P(Sigma, a): minimise x^T Sigma^{-1} x subject to x >= a.
/// I is the minimal index set of active constraints, J its complement.
struct QpSolution {
  IndexSet I;
  IndexSet J;
  IndexSet binding_J;  ///< coordinates of J where the solution meets a_j
  Vector a_tilde;      ///< full k-vector solution
  Vector lambda_I;     ///< Sigma_II^{-1} a_I, strictly positive
  double value = 0.0;  ///< a_I^T Sigma_II^{-1} a_I
};

/// Tolerance deciding when a J-coordinate of the solution is binding:
/// a_tilde_j - a_j <= kBindingTol * max(1, |a_j|).
inline constexpr double kBindingTol = 1e-9;

/// Active-set solver. Requires a to have a strictly positive component.
QpSolution solve(const CorrelationSpec& spec, const Vector& a);

/// Test oracle: enumerates all non-empty index sets (k <= 12) and keeps the
/// unique one that is dual and primal feasible. Throws OracleAmbiguous when
/// the count differs from one.
QpSolution brute_force_solve(const CorrelationSpec& spec, const Vector& a);

struct KktReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks the optimality identities of the solution within 1e-9 relative,
/// including x^T Sigma^{-1} a_tilde = x_I^T Sigma_II^{-1} a_I on random x.
KktReport verify_kkt(const CorrelationSpec& spec, const Vector& a, const QpSolution& sol,
                     std::uint64_t seed = 1952);

}  // namespace kotz
