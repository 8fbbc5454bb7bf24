#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "latentgeo/inference.hpp"

namespace latentgeo {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

struct DetectRequest {
  std::string input;
  std::vector<Method> methods{Method::Stress, Method::Permutation, Method::Bootstrap};
  std::size_t replicates = 1000;
  double alpha = 0.05;
  std::uint64_t seed = 1;
};

/// One method's outcome inside a detect report. `status` is "ok" or "N/A";
/// the bootstrap is N/A when no GLPM can be calibrated to the network.
Json to_json(const StressDecision& result);
Json to_json(const TestResult& result);

/// Runs the requested methods on a connected network and assembles the
/// versioned report: {kind, version, input, n, edges, seed,
/// stress_pair_convention, results[], runtime_ms}. Each result carries
/// method, status, observed_difference, stresses, p_value, alpha,
/// replicates {requested, used, discarded}, decision, null_samples,
/// runtime_ms. Throws Disconnected for a disconnected network.
Json run_detect(const Network& net, const DetectRequest& request);

/// One-line human-readable verdict for a result object of run_detect.
std::string verdict_line(const Json& result);

/// Null samples with the observed statistic as a marker row:
/// method,kind,value with kind in {null, observed}.
void write_null_distribution_csv(std::ostream& out, const TestResult& result);
void write_null_distribution_csv(std::ostream& out, const Json& detect_report);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace latentgeo
