#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "latentgeo/graph.hpp"

namespace latentgeo {

enum class Manifold { EuclideanPlane, PoincareDisk };

std::string_view to_string(Manifold m) noexcept;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Per-node coordinates on a manifold. Poincare coordinates are Cartesian
/// inside the open unit disk; `curvature` (kappa > 0) scales hyperbolic
/// distances by 1/sqrt(kappa) and is ignored for the plane.
struct Embedding {
  Manifold manifold = Manifold::EuclideanPlane;
  double curvature = 1.0;
  std::vector<Point2> coords;

  std::size_t size() const noexcept { return coords.size(); }
};

// The embedding functions accept either a geodesic matrix or any real,
// symmetric dissimilarity matrix with zero diagonal.
Eigen::MatrixXd to_matrix(const GeodesicMatrix& delta);

/// B = -1/2 J D^2 J with J = I - 11'/n.
Eigen::MatrixXd double_centered_squared(const Eigen::MatrixXd& delta);

/// Principal coordinates: the `dim` leading eigenvectors of the
/// double-centred matrix scaled by sqrt(max(lambda, 0)). Only dim = 2 is
/// supported. Coordinates are defined up to rotation and translation.
Embedding classical_mds(const Eigen::MatrixXd& delta, int dim = 2);
Embedding classical_mds(const GeodesicMatrix& delta, int dim = 2);

/// Strain-based hyperbolic embedding into the Poincare disk.
///
/// A = cosh(sqrt(kappa) * delta) is eigendecomposed. The time-like
/// coordinate x0 = sqrt(lambda_max) * v_max (sign fixed non-negative) gives
/// the radius r = sqrt((alpha*x0 - m) / (alpha*x0 + m)), where m = min(x0)
/// when `min_normalized_radius` is set and m = 1 (with x0 clamped at 1)
/// otherwise. Directions come from the rows of the eigenvectors belonging to
/// the two most negative eigenvalues. With `equi_adjust` = e > 0 each polar
/// angle is replaced by (1 - e) * theta + e * theta_rank, where theta_rank
/// spreads the nodes' angular order evenly around the circle.
///
/// When `isotropic` is set the direction rows are taken from the unscaled
/// eigenvectors; otherwise each eigenvector is first scaled by
/// sqrt(|lambda|), which recovers exact hyperbolic inputs up to isometry.
///
/// The defaults reproduce the behaviour of the `hydra` R package
/// (alpha = 1.1, equi.adj = 0.5, isotropic adjustment on).
struct HydraOptions {
  double curvature = 1.0;
  double alpha = 1.1;
  double equi_adjust = 0.5;
  bool min_normalized_radius = true;
  bool isotropic = true;

  /// Bare spectral construction: alpha = 1, no angular adjustment,
  /// radius from x0 directly.
  static HydraOptions spectral();
  /// Spectral construction without the isotropic adjustment: the Lorentz
  /// coordinates of a configuration whose cosh-distance matrix has rank 3.
  static HydraOptions exact();
};

Embedding hyperbolic_mds(const Eigen::MatrixXd& delta, int dim = 2, const HydraOptions& options = {});
Embedding hyperbolic_mds(const GeodesicMatrix& delta, int dim = 2, const HydraOptions& options = {});

double manifold_distance(const Embedding& emb, std::size_t i, std::size_t j);

/// Which index pairs the stress sum runs over. Ordered pairs (i != j) count
/// every discrepancy twice, scaling stress by sqrt(2) relative to i < j.
enum class PairConvention { Ordered, Unordered };

std::string_view to_string(PairConvention c) noexcept;

/// Convention used by stress_difference and all reports. Ordered pairs
/// reproduce the published Karate club stresses (24.65 Euclidean).
inline constexpr PairConvention kStressConvention = PairConvention::Ordered;

/// sqrt(sum (delta_ij - dist_ij)^2). Throws SizeMismatch.
double stress(const Eigen::MatrixXd& delta, const Embedding& emb,
              PairConvention convention = kStressConvention);
double stress(const GeodesicMatrix& delta, const Embedding& emb,
              PairConvention convention = kStressConvention);

struct StressReport {
  double stress_euclidean = 0.0;
  double stress_hyperbolic = 0.0;
  double difference = 0.0;  // stress_hyperbolic - stress_euclidean
};

StressReport stress_difference(const Eigen::MatrixXd& delta);
StressReport stress_difference(const GeodesicMatrix& delta);

/// Throws Disconnected when the network is not connected.
StressReport stress_difference(const Network& net);

/// CSV with header node_label,x,y,manifold,curvature.
void write_embedding_csv(std::ostream& out, const Embedding& emb, const std::vector<std::string>& labels);

}  // namespace latentgeo
