#pragma once

// Reference computations used only by tests. None of them call into the
// library's numerical code paths they are checking.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

// xi_k(d) for the GLPM by brute-force quadrature. The Gaussian kernel and
// the latent prior both factorise over the two coordinates, so the
// (k-1)-fold planar integral is the product of two 1-D transfer-operator
// chains: anchor at 0, target at (d, 0).
inline double xi_quadrature(int k, double d, double tau, double phi, double gamma, int points = 1601) {
  const double half_width = 12.0 * std::sqrt(gamma);
  const double h = 2.0 * half_width / (points - 1);
  std::vector<double> z(points), prior(points);
  for (int i = 0; i < points; ++i) {
    z[i] = -half_width + h * i;
    prior[i] = std::exp(-z[i] * z[i] / (2.0 * gamma)) / std::sqrt(2.0 * std::numbers::pi * gamma);
  }
  auto kern = [phi](double a, double b) { return std::exp(-(a - b) * (a - b) / (2.0 * phi)); };
  auto chain = [&](double target) {
    if (k == 1) return kern(0.0, target);
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) v[i] = kern(0.0, z[i]) * prior[i];
    for (int step = 2; step < k; ++step) {
      std::vector<double> next(points, 0.0);
      for (int j = 0; j < points; ++j) {
        double acc = 0.0;
        for (int i = 0; i < points; ++i) acc += v[i] * kern(z[i], z[j]);
        next[j] = acc * h * prior[j];
      }
      v.swap(next);
    }
    double acc = 0.0;
    for (int i = 0; i < points; ++i) acc += v[i] * kern(z[i], target);
    return acc * h;
  };
  return std::pow(tau, k) * chain(d) * chain(0.0);
}

struct Proportion {
  double mean;
  double se;
};

// Fraction of simulated GLPM graphs in which the planted pair (origin and
// (d, 0)) is at geodesic distance exactly 2; the other n - 2 nodes are
// drawn from N(0, gamma I).
inline Proportion planted_pair_geodesic2(int n, double tau, double phi, double gamma, double d, int reps,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(gamma));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto p = [&](double dx, double dy) { return tau * std::exp(-(dx * dx + dy * dy) / (2.0 * phi)); };
  int hits = 0;
  for (int r = 0; r < reps; ++r) {
    const bool direct = unit(rng) < p(d, 0.0);
    bool common = false;
    for (int m = 0; m < n - 2; ++m) {
      const double x = normal(rng), y = normal(rng);
      const bool to_a = unit(rng) < p(x, y);
      const bool to_b = unit(rng) < p(x - d, y);
      common = common || (to_a && to_b);
    }
    hits += (!direct && common) ? 1 : 0;
  }
  const double m = static_cast<double>(hits) / reps;
  return {m, std::sqrt(m * (1.0 - m) / reps)};
}

// Upper 1% point of the chi-square distribution (Wilson-Hilferty).
inline double chi2_upper_1pct(int dof) {
  const double z = 2.3263478740408408;
  const double v = dof;
  const double c = 1.0 - 2.0 / (9.0 * v) + z * std::sqrt(2.0 / (9.0 * v));
  return v * c * c * c;
}

// Expected mean degree of the hyperbolic disk model with area-uniform radii,
// by midpoint quadrature over (r1, r2, angle difference).
inline double hyperbolic_expected_degree(int n, double radius, int cells = 300) {
  const double dr = radius / cells;
  const double dt = std::numbers::pi / cells;
  const double norm = std::cosh(radius) - 1.0;
  double acc = 0.0;
  for (int a = 0; a < cells; ++a) {
    const double r1 = (a + 0.5) * dr;
    const double w1 = std::sinh(r1) / norm * dr;
    for (int b = 0; b < cells; ++b) {
      const double r2 = (b + 0.5) * dr;
      const double w2 = std::sinh(r2) / norm * dr;
      double inner = 0.0;
      for (int c = 0; c < cells; ++c) {
        const double t = (c + 0.5) * dt;
        const double ch = std::cosh(r1) * std::cosh(r2) - std::sinh(r1) * std::sinh(r2) * std::cos(t);
        const double dist = std::acosh(std::max(ch, 1.0));
        inner += 1.0 / (1.0 + std::exp(dist - radius));
      }
      acc += w1 * w2 * inner * dt / std::numbers::pi;
    }
  }
  return (n - 1) * acc;
}

}  // namespace oracle
