#include "latentgeo/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "latentgeo/error.hpp"

namespace latentgeo {

std::string_view to_string(Manifold m) noexcept {
  return m == Manifold::EuclideanPlane ? "euclidean" : "poincare";
}

std::string_view to_string(PairConvention c) noexcept {
  return c == PairConvention::Ordered ? "ordered" : "unordered";
}

namespace {

void check_dim(int dim) {
  if (dim != 2) throw Error(ErrorCode::DimensionUnsupported, "only two-dimensional embeddings are supported");
}

// Flips an eigenvector so its first non-negligible entry is positive.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

}  // namespace

Eigen::MatrixXd to_matrix(const GeodesicMatrix& delta) {
  const auto n = static_cast<Eigen::Index>(delta.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = delta(i, j);
  }
  return m;
}

Eigen::MatrixXd double_centered_squared(const Eigen::MatrixXd& delta) {
  const auto n = delta.rows();
  Eigen::MatrixXd sq(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = delta(i, j);
      sq(i, j) = d * d;
    }
  }
  const Eigen::VectorXd row_mean = sq.rowwise().mean();
  const double grand = row_mean.mean();
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = -0.5 * (sq(i, j) - row_mean[i] - row_mean[j] + grand);
    }
  }
  return b;
}

Embedding classical_mds(const Eigen::MatrixXd& delta, int dim) {
  check_dim(dim);
  const auto n = delta.rows();
  if (n < dim + 1) throw Error(ErrorCode::TooSmall, "classical MDS needs at least dim + 1 points");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(double_centered_squared(delta));
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  Eigen::MatrixXd vectors = solver.eigenvectors();

  Embedding emb;
  emb.manifold = Manifold::EuclideanPlane;
  emb.coords.resize(static_cast<std::size_t>(n));
  for (int c = 0; c < dim; ++c) {
    const Eigen::Index col = n - 1 - c;
    // Negative eigenvalues contribute a zero column.
    const double scale = std::sqrt(std::max(values[col], 0.0));
    fix_sign(vectors.col(col));
    for (Eigen::Index i = 0; i < n; ++i) {
      double& slot = c == 0 ? emb.coords[i].x : emb.coords[i].y;
      slot = scale * vectors(i, col);
    }
  }
  return emb;
}

HydraOptions HydraOptions::spectral() {
  HydraOptions o;
  o.alpha = 1.0;
  o.equi_adjust = 0.0;
  o.min_normalized_radius = false;
  return o;
}

HydraOptions HydraOptions::exact() {
  HydraOptions o = spectral();
  o.isotropic = false;
  return o;
}

Embedding hyperbolic_mds(const Eigen::MatrixXd& delta, int dim, const HydraOptions& options) {
  check_dim(dim);
  if (!(options.curvature > 0.0)) throw Error(ErrorCode::NonPositiveCurvature, "curvature must be positive");
  if (!(options.alpha > 0.0) || options.equi_adjust < 0.0 || options.equi_adjust > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be positive and equi_adjust in [0, 1]");
  }
  const auto n = delta.rows();
  if (n < dim + 1) throw Error(ErrorCode::TooSmall, "hyperbolic MDS needs at least dim + 1 points");

  const double sk = std::sqrt(options.curvature);
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = std::cosh(sk * delta(i, j));
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  // A is entrywise positive, so its Perron vector has one sign.
  Eigen::VectorXd x0 = std::sqrt(std::max(values[n - 1], 0.0)) * vectors.col(n - 1);
  if (x0.sum() < 0) x0 = -x0;

  std::vector<double> radius(static_cast<std::size_t>(n));
  if (options.min_normalized_radius) {
    const double m = std::max(x0.minCoeff(), std::numeric_limits<double>::min());
    for (Eigen::Index i = 0; i < n; ++i) {
      const double t = options.alpha * std::max(x0[i], m);
      radius[i] = std::sqrt(std::max(t - m, 0.0) / (t + m));
    }
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double t = std::max(options.alpha * x0[i], 1.0);
      radius[i] = std::sqrt((t - 1.0) / (t + 1.0));
    }
  }

  // Directions from the eigenvectors of the two most negative eigenvalues.
  std::vector<double> theta(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    double u = vectors(i, 0);
    double v = vectors(i, 1);
    if (!options.isotropic) {
      u *= std::sqrt(std::abs(values[0]));
      v *= std::sqrt(std::abs(values[1]));
    }
    theta[i] = (u == 0.0 && v == 0.0) ? 0.0 : std::atan2(v, u);
  }
  if (options.equi_adjust > 0.0) {
    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return theta[l] < theta[r]; });
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    const double e = options.equi_adjust;
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      double& t = theta[order[rank]];
      t = (1.0 - e) * t + e * step * static_cast<double>(rank);
    }
  }

  Embedding emb;
  emb.manifold = Manifold::PoincareDisk;
  emb.curvature = options.curvature;
  emb.coords.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < emb.coords.size(); ++i) {
    emb.coords[i] = {radius[i] * std::cos(theta[i]), radius[i] * std::sin(theta[i])};
  }
  return emb;
}

double manifold_distance(const Embedding& emb, std::size_t i, std::size_t j) {
  const Point2& p = emb.coords[i];
  const Point2& q = emb.coords[j];
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double sq = dx * dx + dy * dy;
  if (emb.manifold == Manifold::EuclideanPlane) return std::sqrt(sq);
  if (sq == 0.0) return 0.0;
  const double np = 1.0 - (p.x * p.x + p.y * p.y);
  const double nq = 1.0 - (q.x * q.x + q.y * q.y);
  const double arg = 1.0 + 2.0 * sq / (np * nq);
  return std::acosh(std::max(arg, 1.0)) / std::sqrt(emb.curvature);
}

double stress(const Eigen::MatrixXd& delta, const Embedding& emb, PairConvention convention) {
  if (static_cast<std::size_t>(delta.rows()) != emb.size() || delta.rows() != delta.cols()) {
    throw Error(ErrorCode::SizeMismatch, "embedding and dissimilarity matrix differ in size");
  }
  const std::size_t n = emb.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = delta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - manifold_distance(emb, i, j);
      sum += r * r;
    }
  }
  if (convention == PairConvention::Ordered) sum *= 2.0;
  return std::sqrt(sum);
}

Embedding classical_mds(const GeodesicMatrix& delta, int dim) { return classical_mds(to_matrix(delta), dim); }

Embedding hyperbolic_mds(const GeodesicMatrix& delta, int dim, const HydraOptions& options) {
  return hyperbolic_mds(to_matrix(delta), dim, options);
}

double stress(const GeodesicMatrix& delta, const Embedding& emb, PairConvention convention) {
  return stress(to_matrix(delta), emb, convention);
}

StressReport stress_difference(const Eigen::MatrixXd& delta) {
  StressReport r;
  r.stress_euclidean = stress(delta, classical_mds(delta));
  r.stress_hyperbolic = stress(delta, hyperbolic_mds(delta));
  r.difference = r.stress_hyperbolic - r.stress_euclidean;
  return r;
}

StressReport stress_difference(const GeodesicMatrix& delta) { return stress_difference(to_matrix(delta)); }

StressReport stress_difference(const Network& net) { return stress_difference(geodesic_distances(net)); }

void write_embedding_csv(std::ostream& out, const Embedding& emb, const std::vector<std::string>& labels) {
  if (labels.size() != emb.size()) throw Error(ErrorCode::SizeMismatch, "label count differs from embedding size");
  const auto old_precision = out.precision(17);
  out << "node_label,x,y,manifold,curvature\n";
  for (std::size_t i = 0; i < emb.size(); ++i) {
    out << labels[i] << ',' << emb.coords[i].x << ',' << emb.coords[i].y << ',' << to_string(emb.manifold) << ','
        << (emb.manifold == Manifold::PoincareDisk ? emb.curvature : 0.0) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace latentgeo
