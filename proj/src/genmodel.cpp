#include "latentgeo/genmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "latentgeo/error.hpp"

namespace latentgeo {

void GlpmParams::validate() const {
  if (!(gamma > 0.0) || !(phi > 0.0) || !(tau >= 0.0 && tau <= 1.0) || dim != 2) {
    throw Error(ErrorCode::InvalidArgument, "GLPM parameters need gamma > 0, phi > 0, tau in [0, 1], dim = 2");
  }
}

void HyperbolicParams::validate() const {
  if (!(radius > 0.0) || dim != 2) {
    throw Error(ErrorCode::InvalidArgument, "hyperbolic model needs R > 0 and dim = 2");
  }
}

LatentSample sample_glpm(std::size_t n, const GlpmParams& params, Rng& rng) {
  params.validate();
  if (n < 2) throw Error(ErrorCode::TooSmall, "need at least two nodes");

  LatentSample out{Network(n), std::vector<Point2>(n)};
  const double sd = std::sqrt(params.gamma);
  for (auto& z : out.positions) {
    z.x = sd * standard_normal(rng);
    z.y = sd * standard_normal(rng);
  }
  const double inv_two_phi = 1.0 / (2.0 * params.phi);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double dx = out.positions[i].x - out.positions[j].x;
      const double dy = out.positions[i].y - out.positions[j].y;
      const double p = params.tau * std::exp(-(dx * dx + dy * dy) * inv_two_phi);
      if (uniform01(rng) < p) out.network.add_edge(i, j);
    }
  }
  return out;
}

double hyperbolic_polar_distance(double r1, double theta1, double r2, double theta2) {
  // cosh(r1 - r2) + (1 - cos dtheta) sinh r1 sinh r2 avoids the cancellation
  // in the textbook form for large radii.
  const double c = std::cosh(r1 - r2) + (1.0 - std::cos(theta1 - theta2)) * std::sinh(r1) * std::sinh(r2);
  return std::acosh(std::max(c, 1.0));
}

LatentSample sample_hyperbolic(std::size_t n, const HyperbolicParams& params, Rng& rng) {
  params.validate();
  if (n < 2) throw Error(ErrorCode::TooSmall, "need at least two nodes");

  const double big_r = params.radius;
  LatentSample out{Network(n), std::vector<Point2>(n)};
  const double area_scale = std::cosh(big_r) - 1.0;
  for (auto& z : out.positions) {
    const double u = uniform01(rng);
    z.x = params.radial == RadialLaw::Uniform ? u * big_r : std::acosh(1.0 + u * area_scale);
    z.y = 2.0 * std::numbers::pi * uniform01(rng);
  }
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double d = hyperbolic_polar_distance(out.positions[i].x, out.positions[i].y, out.positions[j].x,
                                                 out.positions[j].y);
      const double p = 1.0 / (1.0 + std::exp(d - big_r));
      if (uniform01(rng) < p) out.network.add_edge(i, j);
    }
  }
  return out;
}

double radius_for_degree(std::size_t n, double target_kbar) {
  if (!(target_kbar > 0.0)) throw Error(ErrorCode::InfeasibleTarget, "target degree must be positive");
  const double ratio = 8.0 * static_cast<double>(n) / (std::numbers::pi * target_kbar);
  if (!(ratio > 1.0)) throw Error(ErrorCode::InfeasibleTarget, "target degree too large for n (R <= 0)");
  return 2.0 * std::log(ratio);
}

GlpmMeasures glpm_theoretical_measures(std::size_t n, const GlpmParams& params) {
  params.validate();
  const double half_d = params.dim / 2.0;
  GlpmMeasures m;
  m.kbar = static_cast<double>(n - 1) * params.tau * std::pow(params.phi / (2.0 * params.gamma + params.phi), half_d);
  m.clustering = params.tau * std::pow((params.gamma + params.phi) / (3.0 * params.gamma + params.phi), half_d);
  return m;
}

GlpmParams calibrate_glpm(std::size_t n, double observed_kbar, double observed_clustering) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "need at least two nodes");
  if (!(observed_kbar > 0.0) || !(observed_clustering > 0.0)) {
    throw Error(ErrorCode::CalibrationInfeasible, "average degree and clustering must be positive");
  }
  const double n1 = static_cast<double>(n - 1);
  const double c = observed_clustering;
  auto tau_of = [c](double phi) { return c * (3.0 + phi) / (1.0 + phi); };
  // Increasing in phi: (phi^2 + 3 phi) / (phi^2 + 3 phi + 2).
  auto excess = [&](double phi) { return n1 * tau_of(phi) * phi / (2.0 + phi) - observed_kbar; };

  double lo = 1e-8;
  double hi = 1e8;
  if (excess(lo) > 0.0 || excess(hi) < 0.0) {
    throw Error(ErrorCode::CalibrationInfeasible, "no phi in [1e-8, 1e8] matches the observed average degree");
  }
  // Geometric bisection; the bracket spans sixteen decades.
  while (hi - lo > 1e-10 * lo) {
    const double mid = std::sqrt(lo * hi);
    if (excess(mid) < 0.0) lo = mid; else hi = mid;
  }
  GlpmParams p;
  p.gamma = 1.0;
  p.phi = 0.5 * (lo + hi);
  p.tau = tau_of(p.phi);
  // Roots on the boundary tau = 1 come back a few ulps above it.
  if (p.tau > 1.0 && p.tau <= 1.0 + 1e-9) p.tau = 1.0;
  if (!(p.tau >= 0.0 && p.tau <= 1.0)) {
    throw Error(ErrorCode::CalibrationInfeasible,
                "solved tau = " + std::to_string(p.tau) + " lies outside [0, 1]");
  }
  return p;
}

}  // namespace latentgeo
