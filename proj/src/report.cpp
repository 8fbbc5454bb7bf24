#include "latentgeo/report.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "latentgeo/error.hpp"

namespace latentgeo {
namespace {

Json stresses_json(const StressReport& r) {
  return Json{{"euclidean", r.stress_euclidean}, {"hyperbolic", r.stress_hyperbolic}};
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Json to_json(const StressDecision& result) {
  Json j;
  j["method"] = to_string(Method::Stress);
  j["status"] = "ok";
  j["observed_difference"] = result.report.difference;
  j["stresses"] = stresses_json(result.report);
  j["p_value"] = nullptr;
  j["alpha"] = nullptr;
  j["replicates"] = nullptr;
  j["decision"] = to_string(result.decision.tag);
  return j;
}

Json to_json(const TestResult& result) {
  Json j;
  j["method"] = to_string(result.method);
  j["status"] = "ok";
  j["observed_difference"] = result.observed.difference;
  j["stresses"] = stresses_json(result.observed);
  j["p_value"] = result.p_value;
  j["alpha"] = result.alpha;
  j["replicates"] = Json{{"requested", result.replicates_requested},
                         {"used", result.replicates_used},
                         {"discarded", result.replicates_discarded}};
  j["decision"] = to_string(result.decision.tag);
  if (result.calibrated) {
    j["calibration"] = Json{{"gamma", result.calibrated->gamma}, {"phi", result.calibrated->phi},
                            {"tau", result.calibrated->tau}};
  }
  j["null_samples"] = result.null_samples;
  return j;
}

Json run_detect(const Network& net, const DetectRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_connected(net)) throw Error(ErrorCode::Disconnected, "input network is not connected");

  Json report;
  report["kind"] = "detect";
  report["version"] = kReportVersion;
  report["input"] = request.input;
  report["n"] = net.size();
  report["edges"] = net.edge_count();
  report["seed"] = request.seed;
  report["stress_pair_convention"] = to_string(kStressConvention);
  report["results"] = Json::array();

  for (Method m : request.methods) {
    const auto method_start = std::chrono::steady_clock::now();
    Json r;
    try {
      switch (m) {
        case Method::Stress: r = to_json(method1_stress_decision(net)); break;
        case Method::Permutation:
          r = to_json(method2_permutation_test(net, request.replicates, request.alpha, request.seed));
          break;
        case Method::Bootstrap:
          r = to_json(method3_bootstrap_test(net, request.replicates, request.alpha, request.seed));
          break;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CalibrationInfeasible && e.code() != ErrorCode::TooFewReplicates) throw;
      r = Json{{"method", to_string(m)},
               {"status", "N/A"},
               {"reason", e.code() == ErrorCode::CalibrationInfeasible ? "calibration infeasible"
                                                                         : "too few connected replicates"},
               {"detail", e.what()}};
    }
    r["runtime_ms"] = elapsed_ms(method_start);
    report["results"].push_back(std::move(r));
  }
  report["runtime_ms"] = elapsed_ms(start);
  return report;
}

std::string verdict_line(const Json& result) {
  std::ostringstream line;
  const auto method = result.at("method").get<std::string>();
  line << method << ": ";
  if (result.at("status") != "ok") {
    line << "N/A (" << result.value("reason", std::string("unavailable")) << ")";
    return line.str();
  }
  char buf[128];
  if (result.at("p_value").is_null()) {
    std::snprintf(buf, sizeof buf, "difference=%.4f", result.at("observed_difference").get<double>());
  } else {
    const auto& reps = result.at("replicates");
    std::snprintf(buf, sizeof buf, "difference=%.4f p=%.4f (used %zu, discarded %zu)",
                  result.at("observed_difference").get<double>(), result.at("p_value").get<double>(),
                  reps.at("used").get<std::size_t>(), reps.at("discarded").get<std::size_t>());
  }
  line << buf << " -> " << result.at("decision").get<std::string>();
  return line.str();
}

void write_null_distribution_csv(std::ostream& out, const TestResult& result) {
  const auto old_precision = out.precision(17);
  out << "method,kind,value\n";
  for (double s : result.null_samples) out << to_string(result.method) << ",null," << s << '\n';
  out << to_string(result.method) << ",observed," << result.observed.difference << '\n';
  out.precision(old_precision);
}

void write_null_distribution_csv(std::ostream& out, const Json& detect_report) {
  const auto old_precision = out.precision(17);
  out << "method,kind,value\n";
  for (const auto& r : detect_report.at("results")) {
    if (r.at("status") != "ok" || !r.contains("null_samples")) continue;
    const auto method = r.at("method").get<std::string>();
    for (const auto& s : r.at("null_samples")) out << method << ",null," << s.get<double>() << '\n';
    out << method << ",observed," << r.at("observed_difference").get<double>() << '\n';
  }
  out.precision(old_precision);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename " + tmp.string() + ": " + ec.message());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace latentgeo
