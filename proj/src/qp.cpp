#include "kotz/qp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "kotz/rng.hpp"

namespace kotz {

namespace {

QpSolution assemble(const CorrelationSpec& spec, const Vector& a, const IndexSet& I) {
  QpSolution sol;
  sol.I = I;
  sol.J = I.complement();
  const Vector a_I = subvector(a, I);
  sol.lambda_I = solve_principal(spec, I, a_I);
  sol.value = a_I.dot(sol.lambda_I);
  sol.a_tilde = a;
  std::vector<int> binding;
  if (!sol.J.empty()) {
    const Vector proj = projection_vector(spec, I, a_I);
    for (int p = 0; p < sol.J.size(); ++p) {
      const int j = sol.J.at(p);
      sol.a_tilde[j - 1] = proj[p];
      if (proj[p] - a[j - 1] <= kBindingTol * std::max(1.0, std::abs(a[j - 1]))) {
        binding.push_back(j);
      }
    }
  }
  sol.binding_J = IndexSet(std::move(binding), spec.dim());
  return sol;
}

bool admissible(const CorrelationSpec& spec, const Vector& a, const IndexSet& I, double* value) {
  const Vector a_I = subvector(a, I);
  if ((a_I.array() <= 0.0).any()) return false;
  const Vector lambda = solve_principal(spec, I, a_I);
  if ((lambda.array() <= 0.0).any()) return false;
  if (I.size() < spec.dim()) {
    const Vector proj = projection_vector(spec, I, a_I);
    const Vector a_J = subvector(a, I.complement());
    for (int p = 0; p < proj.size(); ++p) {
      if (proj[p] < a_J[p] - 1e-12 * std::max(1.0, std::abs(a_J[p]))) return false;
    }
  }
  if (value != nullptr) *value = a_I.dot(lambda);
  return true;
}

std::uint64_t mask_of(const IndexSet& I) {
  std::uint64_t m = 0;
  for (int idx : I.members()) m |= (1ULL << (idx - 1));
  return m;
}

}  // namespace

QpSolution solve(const CorrelationSpec& spec, const Vector& a) {
  const int k = spec.dim();
  if (a.size() != k) throw DimensionMismatch("solve: vector length");
  if (a.maxCoeff() <= 0.0) {
    throw NoPositiveComponent("a must have a strictly positive component");
  }

  IndexSet I = IndexSet::full(k);
  std::unordered_set<std::uint64_t> visited;
  const double cap = std::min(std::pow(4.0, k), 1.0e6);
  bool cycled = false;

  for (double iter = 0; iter < cap; ++iter) {
    if (k <= 62 && !visited.insert(mask_of(I)).second) {
      cycled = true;
      break;
    }
    const Vector a_I = subvector(a, I);
    const Vector lambda = solve_principal(spec, I, a_I);

    // Dual feasibility: drop the most negative multiplier.
    int drop = -1;
    double worst = 0.0;
    for (int p = 0; p < I.size(); ++p) {
      if (lambda[p] <= 0.0 && lambda[p] <= worst) {
        worst = lambda[p];
        drop = p;
      }
    }
    if (drop >= 0) {
      if (I.size() == 1) {
        cycled = true;  // would empty the active set; fall back
        break;
      }
      std::vector<int> next = I.members();
      next.erase(next.begin() + drop);
      I = IndexSet(std::move(next), k);
      continue;
    }

    // Primal feasibility: add the most violated constraint.
    if (I.size() < k) {
      const IndexSet J = I.complement();
      const Vector proj = projection_vector(spec, I, a_I);
      const Vector a_J = subvector(a, J);
      int add = -1;
      double gap = 0.0;
      for (int p = 0; p < J.size(); ++p) {
        const double g = proj[p] - a_J[p];
        if (g < -1e-12 * std::max(1.0, std::abs(a_J[p])) && g < gap) {
          gap = g;
          add = J.at(p);
        }
      }
      if (add >= 0) {
        std::vector<int> next = I.members();
        next.push_back(add);
        I = IndexSet(std::move(next), k);
        continue;
      }
    }
    return assemble(spec, a, I);
  }

  if (cycled && k <= 12) return brute_force_solve(spec, a);
  throw Error("active set did not converge for k=" + std::to_string(k));
}

QpSolution brute_force_solve(const CorrelationSpec& spec, const Vector& a) {
  const int k = spec.dim();
  if (k > 12) throw Error("brute_force_solve limited to k <= 12");
  if (a.size() != k) throw DimensionMismatch("brute_force_solve: vector length");
  if (a.maxCoeff() <= 0.0) {
    throw NoPositiveComponent("a must have a strictly positive component");
  }

  int found = 0;
  IndexSet winner;
  for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < k; ++i) {
      if (mask & (1ULL << i)) members.push_back(i + 1);
    }
    IndexSet I(std::move(members), k);
    if (admissible(spec, a, I, nullptr)) {
      ++found;
      winner = I;
    }
  }
  if (found != 1) {
    throw OracleAmbiguous("expected exactly one admissible index set, found " +
                          std::to_string(found));
  }
  return assemble(spec, a, winner);
}

KktReport verify_kkt(const CorrelationSpec& spec, const Vector& a, const QpSolution& sol,
                     std::uint64_t seed) {
  KktReport report;
  auto fail = [&report](const std::string& msg) {
    report.ok = false;
    report.failures.push_back(msg);
  };
  const double rel = 1e-9;
  const Vector a_I = subvector(a, sol.I);

  if ((a_I.array() <= 0.0).any()) fail("a_I not positive");
  if ((sol.lambda_I.array() <= 0.0).any()) fail("lambda_I not positive");
  for (int p = 0; p < sol.I.size(); ++p) {
    if (sol.a_tilde[sol.I.at(p) - 1] != a[sol.I.at(p) - 1]) fail("a_tilde differs from a on I");
  }

  const Vector lambda_ref = solve_principal(spec, sol.I, a_I);
  if ((sol.lambda_I - lambda_ref).cwiseAbs().maxCoeff() >
      rel * std::max(1.0, lambda_ref.cwiseAbs().maxCoeff())) {
    fail("lambda_I is not Sigma_II^{-1} a_I");
  }

  const double value_ref = a_I.dot(lambda_ref);
  if (!(sol.value > 0.0) || std::abs(sol.value - value_ref) > rel * std::max(1.0, value_ref)) {
    fail("value is not a_I^T Sigma_II^{-1} a_I > 0");
  }

  if (!sol.J.empty()) {
    const Vector proj = projection_vector(spec, sol.I, a_I);
    const Vector a_J = subvector(a, sol.J);
    for (int p = 0; p < sol.J.size(); ++p) {
      const double tol = rel * std::max(1.0, std::abs(proj[p]));
      if (std::abs(sol.a_tilde[sol.J.at(p) - 1] - proj[p]) > tol) {
        fail("a_tilde on J is not the projection");
        break;
      }
    }
    for (int p = 0; p < sol.J.size(); ++p) {
      if (proj[p] < a_J[p] - kBindingTol * std::max(1.0, std::abs(a_J[p]))) {
        fail("projection violates a_J");
        break;
      }
    }
  }

  // x^T Sigma^{-1} a_tilde = x_I^T Sigma_II^{-1} a_I on random probes.
  RngStream rng(seed, 0);
  for (int trial = 0; trial < 8; ++trial) {
    Vector x(spec.dim());
    for (int i = 0; i < spec.dim(); ++i) x[i] = rng.next_normal();
    const double lhs =
        spec.chol().triangularView<Eigen::Lower>().solve(x).dot(
            spec.chol().triangularView<Eigen::Lower>().solve(sol.a_tilde));
    const double rhs = subvector(x, sol.I).dot(lambda_ref);
    if (std::abs(lhs - rhs) > rel * std::max(1.0, std::abs(rhs))) {
      fail("x^T Sigma^{-1} a_tilde != x_I^T Sigma_II^{-1} a_I");
      break;
    }
  }
  return report;
}

}  // namespace kotz
