#include "kotz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kotz {

IndexSet::IndexSet(std::vector<int> members, int dim) : members_(std::move(members)), dim_(dim) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > dim_) {
      throw IndexOutOfRange("index " + std::to_string(members_[i]) + " outside {1.." +
                            std::to_string(dim_) + "}");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw IndexOutOfRange("duplicate index " + std::to_string(members_[i]));
    }
  }
}

IndexSet IndexSet::full(int dim) {
  std::vector<int> m(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i)] = i + 1;
  return IndexSet(std::move(m), dim);
}

IndexSet IndexSet::empty_set(int dim) { return IndexSet({}, dim); }

bool IndexSet::contains(int index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

int IndexSet::position_of(int index) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), index);
  if (it == members_.end() || *it != index) return -1;
  return static_cast<int>(it - members_.begin());
}

IndexSet IndexSet::complement() const {
  std::vector<int> m;
  m.reserve(static_cast<std::size_t>(dim_ - size()));
  for (int i = 1; i <= dim_; ++i) {
    if (!contains(i)) m.push_back(i);
  }
  return IndexSet(std::move(m), dim_);
}

Eigen::VectorXi IndexSet::zero_based() const {
  Eigen::VectorXi z(size());
  for (int i = 0; i < size(); ++i) z[i] = members_[static_cast<std::size_t>(i)] - 1;
  return z;
}

Matrix cholesky_lower(const Matrix& sym, double rel_pivot_tol) {
  const auto n = sym.rows();
  const double scale = sym.diagonal().maxCoeff();
  Matrix L = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double pivot = sym(j, j) - L.row(j).head(j).squaredNorm();
    if (!(pivot > rel_pivot_tol * scale)) {
      throw NotPositiveDefinite("Cholesky pivot " + std::to_string(pivot) + " at column " +
                                std::to_string(j + 1));
    }
    L(j, j) = std::sqrt(pivot);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      L(i, j) = (sym(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / L(j, j);
    }
  }
  return L;
}

CorrelationSpec CorrelationSpec::factorize(const Matrix& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() < 2) {
    throw DimensionMismatch("correlation matrix must be square with k >= 2");
  }
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw NotSymmetric("matrix is not symmetric to 1e-12");
  }
  for (Eigen::Index i = 0; i < sigma.rows(); ++i) {
    if (std::abs(sigma(i, i) - 1.0) > 1e-12) {
      throw NotCorrelation("diagonal entry " + std::to_string(i + 1) + " is " +
                           std::to_string(sigma(i, i)));
    }
  }
  CorrelationSpec spec;
  spec.sigma_ = sigma;
  spec.chol_ = cholesky_lower(sigma);
  spec.log_det_ = 2.0 * spec.chol_.diagonal().array().log().sum();
  // Inverse cached for reporting; all solves below go through the factor.
  const Matrix inv_l = spec.chol_.triangularView<Eigen::Lower>().solve(
      Matrix::Identity(sigma.rows(), sigma.cols()));
  spec.sigma_inv_ = inv_l.transpose() * inv_l;
  return spec;
}

Matrix submatrix(const Matrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.dim() != m.rows() || cols.dim() != m.cols()) {
    throw DimensionMismatch("index set dimension does not match matrix");
  }
  return m(rows.zero_based(), cols.zero_based());
}

Matrix submatrix(const CorrelationSpec& spec, const IndexSet& rows, const IndexSet& cols) {
  return submatrix(spec.sigma(), rows, cols);
}

Vector subvector(const Vector& v, const IndexSet& idx) {
  if (idx.dim() != v.size()) throw DimensionMismatch("index set dimension does not match vector");
  return v(idx.zero_based());
}

double quad_form_inv(const CorrelationSpec& spec, const Vector& x) {
  if (x.size() != spec.dim()) throw DimensionMismatch("quad_form_inv: vector length");
  return spec.chol().triangularView<Eigen::Lower>().solve(x).squaredNorm();
}

double quad_form_inv(const CorrelationSpec& spec, const IndexSet& I, const Vector& x_I) {
  if (x_I.size() != I.size()) throw DimensionMismatch("quad_form_inv: subvector length");
  if (I.size() == spec.dim()) return quad_form_inv(spec, x_I);
  const Matrix sub = submatrix(spec, I, I);
  return cholesky_lower(sub).triangularView<Eigen::Lower>().solve(x_I).squaredNorm();
}

Vector solve_principal(const CorrelationSpec& spec, const IndexSet& I, const Vector& b) {
  if (b.size() != I.size()) throw DimensionMismatch("solve_principal: vector length");
  const Matrix L = I.size() == spec.dim() ? spec.chol() : cholesky_lower(submatrix(spec, I, I));
  return L.transpose().triangularView<Eigen::Upper>().solve(
      L.triangularView<Eigen::Lower>().solve(b));
}

Matrix schur_complement(const CorrelationSpec& spec, const IndexSet& I) {
  const IndexSet J = I.complement();
  if (J.empty()) throw EmptyComplement("Schur complement needs |I| < k");
  const Matrix sigma_jj = submatrix(spec, J, J);
  const Matrix sigma_ij = submatrix(spec, I, J);
  const Matrix L = cholesky_lower(submatrix(spec, I, I));
  const Matrix half = L.triangularView<Eigen::Lower>().solve(sigma_ij);
  return sigma_jj - half.transpose() * half;
}

Vector projection_vector(const CorrelationSpec& spec, const IndexSet& I, const Vector& a_I) {
  const IndexSet J = I.complement();
  if (J.empty()) throw EmptyComplement("projection needs |I| < k");
  const Matrix sigma_ji = submatrix(spec, J, I);
  return sigma_ji * solve_principal(spec, I, a_I);
}

}  // namespace kotz
