#include "latentgeo/study.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latentgeo/error.hpp"

namespace latentgeo {
namespace {

constexpr std::uint64_t kStudyTag = 0x5a17d0e5c0ffee11ULL;

enum class Arm : std::uint64_t { Hyperbolic = 0, Glpm = 1 };

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size()) throw Error(ErrorCode::InvalidArgument, key + ": not a number: " + v);
  return x;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, key + ": not a non-negative integer: " + v);
  }
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, key + ": out of range: " + v);
  }
}

std::vector<double> to_doubles(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split(v, ',')) out.push_back(to_double(key, item));
  return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  return make_stream(master, path)();
}

struct Outcome {
  bool available = false;
  bool hyperbolic = false;
};

Json band_json(const DensityBand& b) { return Json::array({b.low, b.high}); }

}  // namespace

void StudyConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); };
  if (sizes.empty()) fail("study needs at least one size");
  for (auto n : sizes) {
    if (n < 3) fail("study sizes must be at least 3");
  }
  if (bands.empty()) fail("study needs at least one density band");
  auto sorted = bands;
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.low < b.low; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& b = sorted[i];
    if (!(b.low >= 0.0 && b.low < b.high && b.high <= 1.0)) fail("density bands must satisfy 0 <= low < high <= 1");
    if (i > 0 && b.low < sorted[i - 1].high) fail("density bands overlap");
  }
  if (networks_per_arm == 0) fail("networks_per_arm must be at least 1");
  if (methods.empty()) fail("study needs at least one method");
  const auto uses = [&](Method m) { return std::find(methods.begin(), methods.end(), m) != methods.end(); };
  if (uses(Method::Permutation) && permutations == 0) fail("permutations must be at least 1");
  if (uses(Method::Bootstrap) && bootstraps == 0) fail("bootstraps must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0, 1)");
  if (!(gamma > 0.0) || !(phi > 0.0)) fail("gamma and phi must be positive");
  for (double t : tau_grid) {
    if (!(t > 0.0 && t <= 1.0)) fail("tau_grid values must lie in (0, 1]");
  }
  for (double k : kbar_grid) {
    if (!(k > 0.0)) fail("kbar_grid values must be positive");
  }
  if (draw_budget == 0) fail("draw_budget must be at least 1");
}

Method parse_method(const std::string& name) {
  if (name == "stress") return Method::Stress;
  if (name == "permutation") return Method::Permutation;
  if (name == "bootstrap") return Method::Bootstrap;
  throw Error(ErrorCode::InvalidArgument, "unknown method: " + name);
}

std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> out;
  for (const auto& item : split(list, ',')) {
    if (item == "all") {
      out = {Method::Stress, Method::Permutation, Method::Bootstrap};
      continue;
    }
    const Method m = parse_method(item);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no methods given");
  return out;
}

StudyConfig parse_study_config(std::istream& in) {
  StudyConfig c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::MalformedLine, "config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    if (key == "sizes") {
      c.sizes.clear();
      for (const auto& s : split(value, ',')) c.sizes.push_back(to_unsigned(key, s));
    } else if (key == "bands" || key == "density_bands") {
      c.bands.clear();
      for (const auto& s : split(value, ',')) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, key + ": expected low:high, got " + s);
        c.bands.push_back({to_double(key, trim(s.substr(0, colon))), to_double(key, trim(s.substr(colon + 1)))});
      }
    } else if (key == "networks_per_arm" || key == "replicates") {
      c.networks_per_arm = to_unsigned(key, value);
    } else if (key == "methods") {
      c.methods = parse_methods(value);
    } else if (key == "permutations") {
      c.permutations = to_unsigned(key, value);
    } else if (key == "bootstraps") {
      c.bootstraps = to_unsigned(key, value);
    } else if (key == "alpha") {
      c.alpha = to_double(key, value);
    } else if (key == "seed") {
      c.seed = to_unsigned(key, value);
    } else if (key == "gamma") {
      c.gamma = to_double(key, value);
    } else if (key == "phi") {
      c.phi = to_double(key, value);
    } else if (key == "tau_grid") {
      c.tau_grid = to_doubles(key, value);
    } else if (key == "kbar_grid") {
      c.kbar_grid = to_doubles(key, value);
    } else if (key == "radial") {
      if (value == "area") c.radial = RadialLaw::AreaUniform;
      else if (value == "uniform") c.radial = RadialLaw::Uniform;
      else throw Error(ErrorCode::InvalidArgument, "radial must be area or uniform");
    } else if (key == "draw_budget") {
      c.draw_budget = to_unsigned(key, value);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown config key: " + key);
    }
  }
  c.validate();
  return c;
}

StudyConfig read_study_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return parse_study_config(in);
}

double StudyRow::sensitivity() const noexcept {
  return hyperbolic_total == 0 ? 0.0 : static_cast<double>(hyperbolic_correct) / static_cast<double>(hyperbolic_total);
}

double StudyRow::specificity() const noexcept {
  return euclidean_total == 0 ? 0.0 : static_cast<double>(euclidean_correct) / static_cast<double>(euclidean_total);
}

StudyReport run_simulation_study(const StudyConfig& config, const StudyProgress& progress) {
  config.validate();
  StudyReport report;
  report.config = config;

  for (std::size_t n : config.sizes) {
    for (std::size_t b = 0; b < config.bands.size(); ++b) {
      const DensityBand band = config.bands[b];
      std::vector<StudyRow> rows;
      for (Method m : config.methods) rows.push_back(StudyRow{n, band, m});

      for (Arm arm : {Arm::Hyperbolic, Arm::Glpm}) {
        const std::size_t budget = config.draw_budget * config.networks_per_arm;
        const auto arm_id = static_cast<std::uint64_t>(arm);
        const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
        const double glpm_density_per_tau = config.phi / (2.0 * config.gamma + config.phi);

        std::vector<double> grid_in_band;
        for (double t : config.tau_grid) {
          if (arm == Arm::Glpm && band.contains(t * glpm_density_per_tau)) grid_in_band.push_back(t);
        }
        for (double k : config.kbar_grid) {
          if (arm == Arm::Hyperbolic && band.contains(k / static_cast<double>(n - 1))) grid_in_band.push_back(k);
        }
        const auto& grid = arm == Arm::Glpm ? config.tau_grid : config.kbar_grid;
        const auto& choices = grid_in_band.empty() ? grid : grid_in_band;

        std::size_t accepted = 0;
        std::size_t draw = 0;
        for (; draw < budget && accepted < config.networks_per_arm; ++draw) {
          Rng rng = make_stream(config.seed, {kStudyTag, n, b, arm_id, draw});
          double param = 0.0;
          if (!choices.empty()) {
            param = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
          } else {
            const double rho = band.low + (band.high - band.low) * (1.0 - uniform01(rng));
            param = arm == Arm::Glpm ? std::min(1.0, rho / glpm_density_per_tau) : rho * static_cast<double>(n - 1);
          }

          Network net;
          if (arm == Arm::Glpm) {
            net = sample_glpm(n, GlpmParams{config.gamma, config.phi, param, 2}, rng).network;
          } else {
            double radius = 0.0;
            try {
              radius = radius_for_degree(n, param);
            } catch (const Error&) {
              continue;
            }
            net = sample_hyperbolic(n, HyperbolicParams{radius, 2, config.radial}, rng).network;
          }
          const double density = static_cast<double>(net.edge_count()) / pairs;
          if (!band.contains(density) || !is_connected(net)) continue;

          Json record{{"n", n},
                      {"band", band_json(band)},
                      {"arm", arm == Arm::Glpm ? "glpm" : "hyperbolic"},
                      {"draw", draw},
                      {arm == Arm::Glpm ? "tau" : "kbar", param},
                      {"edges", net.edge_count()},
                      {"density", density},
                      {"results", Json::object()}};

          for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
            const Method m = config.methods[mi];
            const auto test_seed =
                derive_seed(config.seed, {kStudyTag, n, b, arm_id, draw, static_cast<std::uint64_t>(m) + 1});
            Outcome outcome;
            Json r;
            try {
              switch (m) {
                case Method::Stress: {
                  const auto s = method1_stress_decision(net);
                  outcome = {true, s.decision.tag == Geometry::Hyperbolic};
                  r = Json{{"difference", s.report.difference}};
                  break;
                }
                case Method::Permutation:
                case Method::Bootstrap: {
                  const auto t = m == Method::Permutation
                                     ? method2_permutation_test(net, config.permutations, config.alpha, test_seed)
                                     : method3_bootstrap_test(net, config.bootstraps, config.alpha, test_seed);
                  outcome = {true, t.decision.tag == Geometry::Hyperbolic};
                  r = Json{{"difference", t.observed.difference}, {"p_value", t.p_value}};
                  break;
                }
              }
              r["decision"] = outcome.hyperbolic ? "hyperbolic" : "euclidean";
            } catch (const Error& e) {
              if (e.code() != ErrorCode::CalibrationInfeasible && e.code() != ErrorCode::TooFewReplicates) throw;
              r = Json{{"decision", "N/A"}, {"reason", std::string(to_string(e.code()))}};
            }
            record["results"][std::string(to_string(m))] = std::move(r);

            StudyRow& row = rows[mi];
            if (arm == Arm::Hyperbolic) {
              if (!outcome.available) ++row.hyperbolic_unavailable;
              else { ++row.hyperbolic_total; row.hyperbolic_correct += outcome.hyperbolic ? 1 : 0; }
            } else {
              if (!outcome.available) ++row.euclidean_unavailable;
              else { ++row.euclidean_total; row.euclidean_correct += outcome.hyperbolic ? 0 : 1; }
            }
          }
          report.networks.push_back(std::move(record));
          ++accepted;
        }

        if (accepted < config.networks_per_arm) {
          for (auto& row : rows) row.available = false;
        }
        if (progress) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "n=%zu band=(%g,%g] %s: %zu/%zu networks from %zu draws", n, band.low,
                        band.high, arm == Arm::Glpm ? "glpm" : "hyperbolic", accepted, config.networks_per_arm, draw);
          progress(buf);
        }
      }
      for (auto& row : rows) report.rows.push_back(row);
    }
  }
  return report;
}

namespace {

Json config_json(const StudyConfig& c) {
  Json bands = Json::array();
  for (const auto& b : c.bands) bands.push_back(band_json(b));
  Json methods = Json::array();
  for (Method m : c.methods) methods.push_back(to_string(m));
  return Json{{"sizes", c.sizes},
              {"bands", bands},
              {"networks_per_arm", c.networks_per_arm},
              {"methods", methods},
              {"permutations", c.permutations},
              {"bootstraps", c.bootstraps},
              {"alpha", c.alpha},
              {"seed", c.seed},
              {"gamma", c.gamma},
              {"phi", c.phi},
              {"tau_grid", c.tau_grid},
              {"kbar_grid", c.kbar_grid},
              {"radial", c.radial == RadialLaw::AreaUniform ? "area" : "uniform"},
              {"draw_budget", c.draw_budget}};
}

StudyConfig config_from_json(const Json& j) {
  StudyConfig c;
  c.sizes = j.at("sizes").get<std::vector<std::size_t>>();
  c.bands.clear();
  for (const auto& b : j.at("bands")) c.bands.push_back({b.at(0).get<double>(), b.at(1).get<double>()});
  c.networks_per_arm = j.at("networks_per_arm").get<std::size_t>();
  c.methods.clear();
  for (const auto& m : j.at("methods")) c.methods.push_back(parse_method(m.get<std::string>()));
  c.permutations = j.at("permutations").get<std::size_t>();
  c.bootstraps = j.at("bootstraps").get<std::size_t>();
  c.alpha = j.at("alpha").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.gamma = j.at("gamma").get<double>();
  c.phi = j.at("phi").get<double>();
  c.tau_grid = j.at("tau_grid").get<std::vector<double>>();
  c.kbar_grid = j.at("kbar_grid").get<std::vector<double>>();
  c.radial = j.at("radial") == "uniform" ? RadialLaw::Uniform : RadialLaw::AreaUniform;
  c.draw_budget = j.at("draw_budget").get<std::size_t>();
  return c;
}

}  // namespace

Json to_json(const StudyReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"n", r.n},
                        {"band", band_json(r.band)},
                        {"method", to_string(r.method)},
                        {"available", r.available},
                        {"sensitivity", r.sensitivity()},
                        {"hyperbolic_correct", r.hyperbolic_correct},
                        {"hyperbolic_total", r.hyperbolic_total},
                        {"hyperbolic_unavailable", r.hyperbolic_unavailable},
                        {"specificity", r.specificity()},
                        {"euclidean_correct", r.euclidean_correct},
                        {"euclidean_total", r.euclidean_total},
                        {"euclidean_unavailable", r.euclidean_unavailable}});
  }
  return Json{{"kind", "study"},
              {"version", kReportVersion},
              {"seed", report.config.seed},
              {"stress_pair_convention", to_string(kStressConvention)},
              {"config", config_json(report.config)},
              {"rows", rows},
              {"networks", report.networks}};
}

StudyReport study_from_json(const Json& j) {
  if (j.value("kind", std::string()) != "study") throw Error(ErrorCode::InvalidArgument, "not a study report");
  StudyReport report;
  report.config = config_from_json(j.at("config"));
  for (const auto& r : j.at("rows")) {
    StudyRow row;
    row.n = r.at("n").get<std::size_t>();
    row.band = {r.at("band").at(0).get<double>(), r.at("band").at(1).get<double>()};
    row.method = parse_method(r.at("method").get<std::string>());
    row.available = r.at("available").get<bool>();
    row.hyperbolic_correct = r.at("hyperbolic_correct").get<std::size_t>();
    row.hyperbolic_total = r.at("hyperbolic_total").get<std::size_t>();
    row.hyperbolic_unavailable = r.at("hyperbolic_unavailable").get<std::size_t>();
    row.euclidean_correct = r.at("euclidean_correct").get<std::size_t>();
    row.euclidean_total = r.at("euclidean_total").get<std::size_t>();
    row.euclidean_unavailable = r.at("euclidean_unavailable").get<std::size_t>();
    report.rows.push_back(row);
  }
  report.networks = j.value("networks", Json::array());
  return report;
}

void write_study_csv(std::ostream& out, const StudyReport& report) {
  const auto old_precision = out.precision(17);
  out << "n,band_low,band_high,method,sensitivity,hyperbolic_correct,hyperbolic_total,"
         "specificity,euclidean_correct,euclidean_total,available\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.band.low << ',' << r.band.high << ',' << to_string(r.method) << ',' << r.sensitivity()
        << ',' << r.hyperbolic_correct << ',' << r.hyperbolic_total << ',' << r.specificity() << ','
        << r.euclidean_correct << ',' << r.euclidean_total << ',' << (r.available ? "true" : "false") << '\n';
  }
  out.precision(old_precision);
}

void write_study_table(std::ostream& out, const StudyReport& report) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "%6s  %-12s  %-12s  %-20s  %-20s\n", "n", "density", "method", "sensitivity",
                "specificity");
  out << buf;
  for (const auto& r : report.rows) {
    char band[32], sens[32], spec[32];
    std::snprintf(band, sizeof band, "(%g,%g]", r.band.low, r.band.high);
    std::snprintf(sens, sizeof sens, "%.4f (%zu/%zu)", r.sensitivity(), r.hyperbolic_correct, r.hyperbolic_total);
    std::snprintf(spec, sizeof spec, "%.4f (%zu/%zu)", r.specificity(), r.euclidean_correct, r.euclidean_total);
    std::snprintf(buf, sizeof buf, "%6zu  %-12s  %-12s  %-20s  %-20s%s\n", r.n, band,
                  std::string(to_string(r.method)).c_str(), sens, spec, r.available ? "" : "  unavailable");
    out << buf;
  }
}

}  // namespace latentgeo
