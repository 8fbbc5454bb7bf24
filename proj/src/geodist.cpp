#include "latentgeo/geodist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "latentgeo/error.hpp"

namespace latentgeo {

RecursionCoefficients recursion_coefficients(const GlpmParams& params, std::size_t max_k, RecursionForm form) {
  params.validate();
  if (max_k == 0) throw Error(ErrorCode::KOutOfRange, "need at least one walk length");

  const double two_pi = 2.0 * std::numbers::pi;
  const double half_d = params.dim / 2.0;
  const double gamma = params.gamma;
  const double phi = params.phi;
  const double step_weight = form == RecursionForm::EdgeWeighted ? params.tau : 1.0;

  RecursionCoefficients c;
  c.params = params;
  c.form = form;
  c.h.reserve(max_k);
  c.alpha.reserve(max_k);
  c.omega.reserve(max_k);
  c.h.push_back(params.tau * std::pow(two_pi * phi, half_d));
  c.alpha.push_back(1.0);
  c.omega.push_back(phi);

  for (std::size_t r = 1; r < max_k; ++r) {
    const double h = c.h.back();
    const double a = c.alpha.back();
    const double w = c.omega.back();
    // Normal density at the origin anchor: f_d(0; 0, s I) = (2 pi s)^(-d/2).
    const double s = (w + gamma) / (a * a);
    const double density_at_anchor = std::pow(two_pi * s, -half_d);
    c.h.push_back(step_weight * h * std::pow(a, -params.dim) * std::pow(two_pi * phi, half_d) * density_at_anchor);
    c.alpha.push_back(a * gamma / (w + gamma));
    c.omega.push_back((w * phi + w * gamma + gamma * phi) / (w + gamma));
  }
  return c;
}

namespace {

void check_k(const RecursionCoefficients& coeffs, std::size_t k) {
  if (k == 0 || k > coeffs.max_k()) {
    throw Error(ErrorCode::KOutOfRange,
                "walk length " + std::to_string(k) + " outside 1.." + std::to_string(coeffs.max_k()));
  }
}

}  // namespace

double walk_probability(const RecursionCoefficients& coeffs, std::size_t k, double d) {
  check_k(coeffs, k);
  const double w = coeffs.omega[k - 1];
  const double half_d = coeffs.params.dim / 2.0;
  return coeffs.h[k - 1] * std::pow(2.0 * std::numbers::pi * w, -half_d) * std::exp(-d * d / (2.0 * w));
}

double geodesic_pmf(const RecursionCoefficients& coeffs, std::size_t n, std::size_t k, double d) {
  check_k(coeffs, k);
  // A single candidate walk for k = 1: the edge itself.
  if (k == 1) return walk_probability(coeffs, 1, d);
  const double nn = static_cast<double>(n);
  const double shorter = std::pow(nn, static_cast<double>(k - 2)) * walk_probability(coeffs, k - 1, d);
  const double current = std::pow(nn, static_cast<double>(k - 1)) * walk_probability(coeffs, k, d);
  return std::max(0.0, std::exp(-shorter) - std::exp(-current));
}

double distance_prior(double d, double gamma) {
  if (d <= 0.0) return 0.0;
  return d / (2.0 * gamma) * std::exp(-d * d / (4.0 * gamma));
}

ConditionalDistanceTable::ConditionalDistanceTable(std::size_t n, GlpmParams params, double step,
                                                   std::vector<std::vector<double>> pmf)
    : n_(n), params_(params), step_(step), pmf_(std::move(pmf)) {
  if (pmf_.empty() || pmf_.front().empty()) throw Error(ErrorCode::InvalidArgument, "empty conditional table");
  const std::size_t cells = pmf_.front().size();
  grid_.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) grid_[i] = (static_cast<double>(i) + 0.5) * step_;
  cdf_.reserve(pmf_.size());
  for (const auto& row : pmf_) {
    if (row.size() != cells) throw Error(ErrorCode::SizeMismatch, "ragged conditional table");
    std::vector<double> cdf(cells);
    double acc = 0.0;
    for (std::size_t i = 0; i < cells; ++i) cdf[i] = acc += row[i];
    // Pin the tail from the last populated cell to exactly one, so every
    // u in [0, 1) lands on a cell with positive weight.
    std::size_t last = cells;
    while (last > 0 && row[last - 1] == 0.0) --last;
    for (std::size_t i = last == 0 ? 0 : last - 1; i < cells; ++i) cdf[i] = 1.0;
    cdf_.push_back(std::move(cdf));
  }
}

std::span<const double> ConditionalDistanceTable::row(std::size_t k) const {
  if (k == 0 || k > pmf_.size()) throw Error(ErrorCode::KOutOfRange, "geodesic value outside the table");
  return pmf_[k - 1];
}

double ConditionalDistanceTable::row_mean(std::size_t k) const {
  auto r = row(k);
  double mean = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) mean += r[i] * grid_[i];
  return mean;
}

double ConditionalDistanceTable::sample(std::size_t k, Rng& rng) const {
  if (k == 0 || k > pmf_.size()) throw Error(ErrorCode::KOutOfRange, "geodesic value outside the table");
  const auto& cdf = cdf_[k - 1];
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  const auto cell = static_cast<double>(std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1));
  return (cell + uniform01(rng)) * step_;
}

ConditionalDistanceTable build_conditional_table(std::size_t n, const GlpmParams& params, std::size_t max_k,
                                                 const GridSpec& grid, RecursionForm form) {
  params.validate();
  const double min_max = 6.0 * std::sqrt(params.gamma);
  const double grid_max = grid.max > 0.0 ? grid.max : min_max;
  if (grid_max < min_max * (1.0 - 1e-12) || grid.cells < 100) {
    throw Error(ErrorCode::InvalidArgument, "grid must reach 6 sqrt(gamma) with at least 100 cells");
  }
  const double step = grid_max / static_cast<double>(grid.cells);
  const auto coeffs = recursion_coefficients(params, max_k, form);

  std::vector<double> prior(grid.cells);
  std::vector<double> points(grid.cells);
  for (std::size_t i = 0; i < grid.cells; ++i) {
    points[i] = (static_cast<double>(i) + 0.5) * step;
    prior[i] = distance_prior(points[i], params.gamma);
  }

  std::vector<std::vector<double>> pmf(max_k, std::vector<double>(grid.cells));
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto& row = pmf[k - 1];
    double mass = 0.0;
    for (std::size_t i = 0; i < grid.cells; ++i) {
      row[i] = geodesic_pmf(coeffs, n, k, points[i]) * prior[i];
      mass += row[i];
    }
    if (!(mass * step >= 1e-12)) {
      throw Error(ErrorCode::DegenerateRow,
                  "model assigns no mass to geodesic value " + std::to_string(k));
    }
    for (auto& w : row) w /= mass;
  }
  return ConditionalDistanceTable(n, params, step, std::move(pmf));
}

double sample_conditional_distance(const ConditionalDistanceTable& table, std::size_t k, Rng& rng) {
  return table.sample(k, rng);
}

void write_table_csv(std::ostream& out, const ConditionalDistanceTable& table) {
  const auto old_precision = out.precision(17);
  out << "k,d,probability\n";
  for (std::size_t k = 1; k <= table.max_k(); ++k) {
    auto row = table.row(k);
    for (std::size_t i = 0; i < row.size(); ++i) out << k << ',' << table.grid()[i] << ',' << row[i] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace latentgeo
