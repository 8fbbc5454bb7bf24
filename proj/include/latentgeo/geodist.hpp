#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "latentgeo/genmodel.hpp"
#include "latentgeo/rng.hpp"

namespace latentgeo {

/// How the walk-weight recursion extends a walk by one edge.
enum class RecursionForm {
  /// h_{r+1} = tau * h_r * alpha_r^-d (2 pi phi)^(d/2) f_d(z_i; 0, (omega_r + gamma) / alpha_r^2).
  /// Every extra edge contributes a factor tau, so xi_k equals the exact
  /// Gaussian integral over the k - 1 intermediate positions.
  EdgeWeighted,
  /// The same recursion without the per-step tau factor, as it is usually
  /// quoted. Overstates xi_k (k >= 2) by tau^-(k-1); kept for comparison.
  Published,
};

/// Walk-weight coefficients for steps r = 1..K, evaluated with the anchor
/// node at the origin so that every walk probability depends on the latent
/// distance alone. Vectors are indexed by r - 1.
struct RecursionCoefficients {
  std::vector<double> h;
  std::vector<double> alpha;
  std::vector<double> omega;
  GlpmParams params;
  RecursionForm form = RecursionForm::EdgeWeighted;

  std::size_t max_k() const noexcept { return h.size(); }
};

RecursionCoefficients recursion_coefficients(const GlpmParams& params, std::size_t max_k,
                                             RecursionForm form = RecursionForm::EdgeWeighted);

/// xi_k(d) = h_k (2 pi omega_k)^-1 exp(-d^2 / (2 omega_k)): probability of a
/// particular walk of length k between two nodes at latent distance d.
double walk_probability(const RecursionCoefficients& coeffs, std::size_t k, double d);

/// Approximate P(geodesic = k | latent distance d) for a network of n nodes:
/// xi_1 for k = 1, otherwise exp(-n^(k-2) xi_{k-1}) - exp(-n^(k-1) xi_k)
/// floored at zero. Throws KOutOfRange for k = 0 or k > coeffs.max_k().
double geodesic_pmf(const RecursionCoefficients& coeffs, std::size_t n, std::size_t k, double d);

/// Density of the latent distance between two GLPM nodes in the plane:
/// d / (2 gamma) exp(-d^2 / (4 gamma)), i.e. d / sqrt(2 gamma) ~ Chi(2).
double distance_prior(double d, double gamma);

struct GridSpec {
  double max = 0.0;        // 0 selects 6 sqrt(gamma)
  std::size_t cells = 600;
};

/// P(latent distance | geodesic = k) on a uniform grid of cell midpoints
/// over (0, max], for k = 1..K.
class ConditionalDistanceTable {
public:
  ConditionalDistanceTable(std::size_t n, GlpmParams params, double step, std::vector<std::vector<double>> pmf);

  std::size_t network_size() const noexcept { return n_; }
  const GlpmParams& params() const noexcept { return params_; }
  std::size_t max_k() const noexcept { return pmf_.size(); }
  std::size_t cells() const noexcept { return grid_.size(); }
  double step() const noexcept { return step_; }
  std::span<const double> grid() const noexcept { return grid_; }

  /// Normalised weights for geodesic value k (1-based).
  std::span<const double> row(std::size_t k) const;
  double row_mean(std::size_t k) const;

  /// Inverse-CDF draw over the row for k with uniform jitter inside the cell.
  double sample(std::size_t k, Rng& rng) const;

private:
  std::size_t n_;
  GlpmParams params_;
  double step_;
  std::vector<double> grid_;
  std::vector<std::vector<double>> pmf_;
  std::vector<std::vector<double>> cdf_;
};

/// Weight(d) = geodesic_pmf(k, d) * distance_prior(d), normalised per row.
/// Throws DegenerateRow when a row's raw probability mass is below 1e-12.
ConditionalDistanceTable build_conditional_table(std::size_t n, const GlpmParams& params, std::size_t max_k,
                                                 const GridSpec& grid = {},
                                                 RecursionForm form = RecursionForm::EdgeWeighted);

double sample_conditional_distance(const ConditionalDistanceTable& table, std::size_t k, Rng& rng);

/// Long-format CSV: k,d,probability.
void write_table_csv(std::ostream& out, const ConditionalDistanceTable& table);

}  // namespace latentgeo
