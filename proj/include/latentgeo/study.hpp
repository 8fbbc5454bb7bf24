#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "latentgeo/genmodel.hpp"
#include "latentgeo/inference.hpp"
#include "latentgeo/report.hpp"

namespace latentgeo {

/// Half-open density interval (low, high].
struct DensityBand {
  double low = 0.0;
  double high = 1.0;
  bool contains(double density) const noexcept { return density > low && density <= high; }
};

struct StudyConfig {
  std::vector<std::size_t> sizes{15, 30, 45};
  std::vector<DensityBand> bands{{0.0, 0.2}, {0.2, 0.4}, {0.4, 1.0}};
  std::size_t networks_per_arm = 30;
  std::vector<Method> methods{Method::Stress, Method::Permutation, Method::Bootstrap};
  std::size_t permutations = 200;
  std::size_t bootstraps = 200;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  double gamma = 1.0;
  double phi = 2.0;
  // Empty grids mean: draw the target density uniformly inside the band.
  std::vector<double> tau_grid;
  std::vector<double> kbar_grid;
  RadialLaw radial = RadialLaw::AreaUniform;
  // Sampling budget per (size, band, arm), as a multiple of networks_per_arm.
  std::size_t draw_budget = 200;

  /// Throws InvalidArgument: bands must be disjoint and inside (0, 1],
  /// counts positive, alpha in (0, 1), sizes at least 3.
  void validate() const;
};

/// Flat `key = value` text; lists are comma separated and bands are
/// written low:high. Unknown keys are an error. The result is validated.
StudyConfig parse_study_config(std::istream& in);
StudyConfig read_study_config_file(const std::string& path);

struct StudyRow {
  std::size_t n = 0;
  DensityBand band;
  Method method = Method::Stress;
  // Numerators and denominators; unavailable tests (no calibration, too
  // few connected replicates) are counted apart and excluded.
  std::size_t hyperbolic_correct = 0;
  std::size_t hyperbolic_total = 0;
  std::size_t hyperbolic_unavailable = 0;
  std::size_t euclidean_correct = 0;
  std::size_t euclidean_total = 0;
  std::size_t euclidean_unavailable = 0;
  // False when either arm could not be filled with connected networks in
  // the band.
  bool available = true;

  double sensitivity() const noexcept;
  double specificity() const noexcept;
};

struct StudyReport {
  StudyConfig config;
  std::vector<StudyRow> rows;
  Json networks = Json::array();  // per-network record: arm, density, per-method outcome
};

using StudyProgress = std::function<void(const std::string&)>;

/// Cells (size, band) are filled with equal numbers of hyperbolic and GLPM
/// networks, binned by achieved density; only connected networks count.
/// Every random choice derives from the master seed and the cell/network
/// indices.
StudyReport run_simulation_study(const StudyConfig& config, const StudyProgress& progress = {});

Json to_json(const StudyReport& report);
StudyReport study_from_json(const Json& j);

/// n,band_low,band_high,method,sensitivity,hyperbolic_correct,
/// hyperbolic_total,specificity,euclidean_correct,euclidean_total,available
void write_study_csv(std::ostream& out, const StudyReport& report);
void write_study_table(std::ostream& out, const StudyReport& report);

Method parse_method(const std::string& name);
std::vector<Method> parse_methods(const std::string& list);

}  // namespace latentgeo
