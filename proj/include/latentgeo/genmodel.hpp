#pragma once

#include <cstddef>
#include <vector>

#include "latentgeo/embedding.hpp"
#include "latentgeo/graph.hpp"
#include "latentgeo/rng.hpp"

namespace latentgeo {

/// Gaussian latent position model: z_i ~ N(0, gamma I_2) and
/// P(edge) = tau * exp(-|z_i - z_j|^2 / (2 phi)).
struct GlpmParams {
  double gamma = 1.0;
  double phi = 1.0;
  double tau = 1.0;
  int dim = 2;

  /// Throws InvalidArgument unless gamma > 0, phi > 0, 0 <= tau <= 1, dim = 2.
  void validate() const;
};

enum class RadialLaw {
  /// Uniform with respect to hyperbolic area: density sinh(r) / (cosh R - 1).
  AreaUniform,
  /// r ~ Uniform(0, R).
  Uniform,
};

/// Hyperbolic disk model: polar positions inside a disk of intrinsic radius
/// R, logit P(edge) = R - d_H.
struct HyperbolicParams {
  double radius = 1.0;
  int dim = 2;
  RadialLaw radial = RadialLaw::AreaUniform;

  void validate() const;
};

/// A sampled network with its latent positions. GLPM positions are
/// Cartesian; hyperbolic positions are polar (x = r, y = theta).
struct LatentSample {
  Network network;
  std::vector<Point2> positions;
};

LatentSample sample_glpm(std::size_t n, const GlpmParams& params, Rng& rng);
LatentSample sample_hyperbolic(std::size_t n, const HyperbolicParams& params, Rng& rng);

/// Hyperbolic law of cosines for polar points (r, theta).
double hyperbolic_polar_distance(double r1, double theta1, double r2, double theta2);

/// R = 2 ln(8 n / (pi kbar)). Throws InfeasibleTarget when R <= 0.
double radius_for_degree(std::size_t n, double target_kbar);

struct GlpmMeasures {
  double kbar = 0.0;
  double clustering = 0.0;
};

/// kbar = (n-1) tau (phi / (2 gamma + phi))^(d/2),
/// C = tau ((gamma + phi) / (3 gamma + phi))^(d/2).
GlpmMeasures glpm_theoretical_measures(std::size_t n, const GlpmParams& params);

/// Ad-hoc moment matching with gamma = 1: tau is eliminated through the
/// clustering equation and the degree equation is solved for phi by
/// bisection on [1e-8, 1e8]. Throws CalibrationInfeasible when no root
/// exists or the solved tau falls outside [0, 1].
GlpmParams calibrate_glpm(std::size_t n, double observed_kbar, double observed_clustering);

}  // namespace latentgeo
