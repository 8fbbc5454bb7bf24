#include "latentgeo/inference.hpp"

#include <algorithm>
#include <cmath>

#include "latentgeo/error.hpp"
#include "latentgeo/parallel.hpp"

namespace latentgeo {

std::string_view to_string(Geometry g) noexcept { return g == Geometry::Hyperbolic ? "hyperbolic" : "euclidean"; }

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Stress: return "stress";
    case Method::Permutation: return "permutation";
    case Method::Bootstrap: return "bootstrap";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kPermutationTag = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kBootstrapTag = 0xc2b2ae3d27d4eb4fULL;

void check_test_args(std::size_t replicates, double alpha) {
  if (replicates == 0) throw Error(ErrorCode::InvalidArgument, "replicate count must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
}

TestResult finish(Method method, const StressReport& observed, ReplicateDraws draws, std::size_t requested,
                  double alpha) {
  TestResult r;
  r.method = method;
  r.observed = observed;
  r.alpha = alpha;
  r.replicates_requested = requested;
  r.replicates_used = draws.differences.size();
  r.replicates_discarded = draws.attempts - draws.differences.size();
  r.null_samples = std::move(draws.differences);
  r.p_value = empirical_p_value(r.null_samples, observed.difference);
  r.decision = decide_from_p_value(r.p_value, alpha, method);
  return r;
}

}  // namespace

StressDecision method1_stress_decision(const Network& net) {
  StressDecision out;
  out.report = stress_difference(net);
  out.decision = {out.report.difference < 0.0 ? Geometry::Hyperbolic : Geometry::Euclidean, Method::Stress};
  return out;
}

Network permute_adjacency(const Network& net, Rng& rng) {
  if (net.size() < 2) throw Error(ErrorCode::TooSmall, "need at least two nodes");
  auto upper = net.upper_triangle();
  std::shuffle(upper.begin(), upper.end(), rng);
  Network out(net.size(), net.labels());
  std::size_t k = 0;
  for (NodeId i = 0; i < net.size(); ++i) {
    for (NodeId j = i + 1; j < net.size(); ++j, ++k) {
      if (upper[k]) out.add_edge(i, j);
    }
  }
  return out;
}

ReplicateDraws draw_null_differences(std::size_t requested, std::uint64_t seed, std::uint64_t tag,
                                     const std::function<Network(Rng&)>& generate) {
  const std::size_t max_attempts = 10 * requested;
  ReplicateDraws out;
  out.differences.reserve(requested);

  while (out.differences.size() < requested && out.attempts < max_attempts) {
    const std::size_t batch = std::min(requested - out.differences.size(), max_attempts - out.attempts);
    const std::size_t first = out.attempts;
    std::vector<std::optional<double>> slots(batch);
    parallel_for(batch, [&](std::size_t b) {
      Rng rng = make_stream(seed, {tag, first + b});
      const Network replicate = generate(rng);
      if (auto geo = try_geodesic_distances(replicate)) slots[b] = stress_difference(*geo).difference;
    });
    for (const auto& s : slots) {
      if (s) out.differences.push_back(*s);
    }
    out.attempts += batch;
  }

  const std::size_t floor_needed =
      std::min(requested, std::max<std::size_t>(20, (requested + 9) / 10));
  if (out.differences.size() < floor_needed) {
    throw Error(ErrorCode::TooFewReplicates,
                std::to_string(out.differences.size()) + " connected replicates out of " +
                    std::to_string(out.attempts) + " attempts (need " + std::to_string(floor_needed) + ")");
  }
  return out;
}

TestResult method2_permutation_test(const Network& net, std::size_t replicates, double alpha, std::uint64_t seed) {
  check_test_args(replicates, alpha);
  const StressReport observed = stress_difference(net);
  auto draws = draw_null_differences(replicates, seed, kPermutationTag,
                                     [&](Rng& rng) { return permute_adjacency(net, rng); });
  return finish(Method::Permutation, observed, std::move(draws), replicates, alpha);
}

Network bootstrap_replicate(const GeodesicMatrix& geodesics, const GlpmParams& params,
                            const ConditionalDistanceTable& table, Rng& rng) {
  const std::size_t n = geodesics.size();
  if (geodesics.max_value() > table.max_k()) {
    throw Error(ErrorCode::KOutOfRange, "geodesic value " + std::to_string(geodesics.max_value()) +
                                            " exceeds table range " + std::to_string(table.max_k()));
  }
  Network out(n);
  const double inv_two_phi = 1.0 / (2.0 * params.phi);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double d = table.sample(geodesics(i, j), rng);
      if (uniform01(rng) < params.tau * std::exp(-d * d * inv_two_phi)) out.add_edge(i, j);
    }
  }
  return out;
}

TestResult method3_bootstrap_test(const Network& net, std::size_t replicates, double alpha, std::uint64_t seed) {
  check_test_args(replicates, alpha);
  const GeodesicMatrix geo = geodesic_distances(net);
  const StressReport observed = stress_difference(geo);

  const NetworkMeasures measures = network_measures(net);
  const GlpmParams params = calibrate_glpm(net.size(), measures.avg_degree, measures.transitivity);
  const ConditionalDistanceTable table = build_conditional_table(net.size(), params, geo.max_value());

  auto draws = draw_null_differences(replicates, seed, kBootstrapTag,
                                     [&](Rng& rng) { return bootstrap_replicate(geo, params, table, rng); });
  TestResult r = finish(Method::Bootstrap, observed, std::move(draws), replicates, alpha);
  r.calibrated = params;
  return r;
}

double empirical_p_value(std::span<const double> null_samples, double observed) {
  if (null_samples.empty()) throw Error(ErrorCode::EmptySamples, "no null samples");
  const auto at_or_below = std::count_if(null_samples.begin(), null_samples.end(),
                                         [observed](double s) { return s <= observed; });
  return static_cast<double>(at_or_below) / static_cast<double>(null_samples.size());
}

GeometryDecision decide_from_p_value(double p_value, double alpha, Method basis) noexcept {
  return {p_value < alpha ? Geometry::Hyperbolic : Geometry::Euclidean, basis};
}

}  // namespace latentgeo
