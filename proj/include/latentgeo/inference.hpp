#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "latentgeo/embedding.hpp"
#include "latentgeo/genmodel.hpp"
#include "latentgeo/geodist.hpp"
#include "latentgeo/graph.hpp"
#include "latentgeo/rng.hpp"

namespace latentgeo {

enum class Geometry { Euclidean, Hyperbolic };

enum class Method {
  Stress,       // observed stress difference
  Permutation,  // upper-triangle adjacency permutation test
  Bootstrap,    // GLPM parametric bootstrap conditioned on geodesics
};

std::string_view to_string(Geometry g) noexcept;
std::string_view to_string(Method m) noexcept;

struct GeometryDecision {
  Geometry tag = Geometry::Euclidean;
  Method basis = Method::Stress;
};

/// Outcome of a resampling test. The statistic is S_H - S_E; small values
/// favour the hyperbolic plane, so p counts null draws at or below it.
struct TestResult {
  Method method = Method::Permutation;
  StressReport observed;
  std::vector<double> null_samples;
  double p_value = 1.0;
  double alpha = 0.05;
  std::size_t replicates_requested = 0;
  std::size_t replicates_used = 0;
  std::size_t replicates_discarded = 0;
  GeometryDecision decision;
  std::optional<GlpmParams> calibrated;  // bootstrap only

  double observed_diff() const noexcept { return observed.difference; }
};

struct StressDecision {
  StressReport report;
  GeometryDecision decision;
};

/// Hyperbolic iff S_H - S_E < 0 (a tie stays Euclidean).
StressDecision method1_stress_decision(const Network& net);

/// Uniform permutation of the upper-triangle entries, mirrored to keep the
/// matrix symmetric. The edge count is preserved exactly.
Network permute_adjacency(const Network& net, Rng& rng);

/// Draws replicate networks from per-attempt streams (seed, tag, attempt)
/// until `requested` connected ones are found or 10 x requested attempts
/// have been made, embedding each survivor in both geometries. Throws
/// TooFewReplicates when fewer than min(requested, max(20, requested / 10))
/// survive. Attempts run in parallel; which attempts are used depends only
/// on the seed.
struct ReplicateDraws {
  std::vector<double> differences;
  std::size_t attempts = 0;
};
ReplicateDraws draw_null_differences(std::size_t requested, std::uint64_t seed, std::uint64_t tag,
                                     const std::function<Network(Rng&)>& generate);

TestResult method2_permutation_test(const Network& net, std::size_t replicates, double alpha, std::uint64_t seed);

/// One bootstrap network: for every pair, a latent distance is drawn from
/// the table row of the pair's observed geodesic value, then an edge with
/// probability tau exp(-d^2 / (2 phi)). Throws KOutOfRange when a geodesic
/// value exceeds the table.
Network bootstrap_replicate(const GeodesicMatrix& geodesics, const GlpmParams& params,
                            const ConditionalDistanceTable& table, Rng& rng);

/// Calibrates the GLPM (gamma = 1) to the network's average degree and
/// transitivity, tabulates the conditional distance law up to the observed
/// diameter and resamples. Throws CalibrationInfeasible when no GLPM
/// matches the network.
TestResult method3_bootstrap_test(const Network& net, std::size_t replicates, double alpha, std::uint64_t seed);

/// #{s <= observed} / #samples. Throws EmptySamples.
double empirical_p_value(std::span<const double> null_samples, double observed);

/// Hyperbolic iff p < alpha.
GeometryDecision decide_from_p_value(double p_value, double alpha, Method basis) noexcept;

}  // namespace latentgeo
