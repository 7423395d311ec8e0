#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kotz/errors.hpp"

namespace kotz {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// 1-based index set over {1..k}, kept strictly increasing.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::vector<int> members, int dim);

  static IndexSet full(int dim);
  static IndexSet empty_set(int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }
  int at(int pos) const { return members_[static_cast<std::size_t>(pos)]; }
  bool contains(int index) const;
  /// Position of `index` within the set, or -1.
  int position_of(int index) const;
  IndexSet complement() const;

  /// 0-based positions for Eigen slicing.
  Eigen::VectorXi zero_based() const;

  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<int> members_;
  int dim_ = 0;
};

/// Positive definite correlation matrix with cached Cholesky factor,
/// inverse and log-determinant. Immutable after construction.
class CorrelationSpec {
 public:
  /// Validates symmetry, unit diagonal and positive definiteness.
  static CorrelationSpec factorize(const Matrix& sigma);

  int dim() const { return static_cast<int>(sigma_.rows()); }
  const Matrix& sigma() const { return sigma_; }
  /// Lower-triangular L with L L^T = sigma.
  const Matrix& chol() const { return chol_; }
  const Matrix& sigma_inv() const { return sigma_inv_; }
  double log_det() const { return log_det_; }

 private:
  CorrelationSpec() = default;
  Matrix sigma_;
  Matrix chol_;
  Matrix sigma_inv_;
  double log_det_ = 0.0;
};

/// Scale-free positive definiteness gate: pivots must exceed
/// rel_pivot_tol times the largest diagonal entry.
Matrix cholesky_lower(const Matrix& sym, double rel_pivot_tol = 1e-12);

Matrix submatrix(const Matrix& m, const IndexSet& rows, const IndexSet& cols);
Matrix submatrix(const CorrelationSpec& spec, const IndexSet& rows, const IndexSet& cols);
Vector subvector(const Vector& v, const IndexSet& idx);

/// x^T Sigma^{-1} x through triangular solves against the Cholesky factor.
double quad_form_inv(const CorrelationSpec& spec, const Vector& x);

/// x_I^T Sigma_II^{-1} x_I on the principal submatrix indexed by I.
double quad_form_inv(const CorrelationSpec& spec, const IndexSet& I, const Vector& x_I);

/// Sigma_II^{-1} b for the principal submatrix indexed by I.
Vector solve_principal(const CorrelationSpec& spec, const IndexSet& I, const Vector& b);

/// Conditional covariance Sigma_JJ - Sigma_JI Sigma_II^{-1} Sigma_IJ.
Matrix schur_complement(const CorrelationSpec& spec, const IndexSet& I);

/// Sigma_JI Sigma_II^{-1} a_I.
Vector projection_vector(const CorrelationSpec& spec, const IndexSet& I, const Vector& a_I);

}  // namespace kotz
