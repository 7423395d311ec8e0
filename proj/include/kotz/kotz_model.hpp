#pragma once

#include <cstdint>
#include <vector>

#include "kotz/linalg.hpp"
#include "kotz/rng.hpp"

namespace kotz {

/// Radial tail parameters of P{R > u} = (1+o(1)) p u^N exp(-q u^delta).
struct KotzParams {
  double p;
  double q;
  double delta;
  double N;
};

/// Parameters under which the vector is standard Gaussian:
/// p = 1/(2^{k/2-1} Gamma(k/2)), q = 1/2, delta = 2, N = k-2.
KotzParams gaussian_params(int k);

/// Scaling function w(u) = q delta u^{delta-1} of the Gumbel domain.
double scaling_w(const KotzParams& params, double u);

/// Tail constant realised by the canonical radial law: q^{N/delta} / Gamma((N+delta)/delta).
double induced_p(double q, double delta, double N);

/// Canonical radial law with density proportional to r^{N+delta-1} exp(-q r^delta),
/// i.e. R = S^{1/delta} with S ~ Gamma(shape (N+delta)/delta, rate q).
struct RadialLaw {
  double shape;
  double rate;
  double delta;
};

RadialLaw canonical_radial(const KotzParams& params);

/// P{R > u} exactly (regularised upper incomplete gamma).
double radial_survivor(const RadialLaw& law, double u);

struct KotzModel {
  KotzParams params;
  CorrelationSpec spec;
};

std::vector<double> sample_radius(const RadialLaw& law, std::size_t n, std::uint64_t seed,
                                  std::uint64_t stream = 0);

/// n uniform directions on the unit k-sphere, one per row.
Matrix sample_sphere(int k, std::size_t n, std::uint64_t seed, std::uint64_t stream = 0);

/// n draws of X = A^T R U with A = L^T, one per row.
Matrix sample_kotz(const KotzModel& model, std::size_t n, std::uint64_t seed);

/// Streaming sampler with a dedicated (seed, stream) pair; used for
/// block-parallel Monte Carlo with order-independent aggregation.
class KotzSampler {
 public:
  KotzSampler(const KotzModel& model, std::uint64_t seed, std::uint64_t stream);

  /// Writes the k components of the next draw and returns its radius.
  double next(double* out);

  int dim() const { return k_; }

 private:
  Matrix chol_;
  RadialLaw law_;
  int k_;
  RngStream rng_;
  std::vector<double> direction_;
};

/// Exact margin survivor P{R U_1 > t}, t > 0, of the canonical model.
double margin_survivor(const KotzParams& params, int k, double t);

/// Upper quantile: margin_survivor(params, k, result) = tail_prob.
double margin_quantile(const KotzParams& params, int k, double tail_prob);

}  // namespace kotz
