#include <doctest.h>

#include <cmath>
#include <sstream>

#include "latentgeo/error.hpp"
#include "latentgeo/study.hpp"

using namespace latentgeo;

namespace {

StudyConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_study_config(in);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse(
      "# sparse large networks\n"
      "sizes = 100, 200\n"
      "bands = 0:0.2\n"
      "networks_per_arm = 12   # per arm\n"
      "methods = stress, permutation\n"
      "permutations = 50\n"
      "seed = 99\n"
      "tau_grid = 0.1, 0.2\n"
      "radial = uniform\n");
  CHECK(c.sizes == std::vector<std::size_t>{100, 200});
  REQUIRE(c.bands.size() == 1);
  CHECK(c.bands[0].high == 0.2);
  CHECK(c.networks_per_arm == 12);
  CHECK(c.methods == std::vector<Method>{Method::Stress, Method::Permutation});
  CHECK(c.permutations == 50);
  CHECK(c.seed == 99);
  CHECK(c.tau_grid == std::vector<double>{0.1, 0.2});
  CHECK(c.radial == RadialLaw::Uniform);
  CHECK(c.gamma == 1.0);
  CHECK(c.phi == 2.0);

  const auto defaults = parse("");
  CHECK(defaults.bands.size() == 3);
  CHECK(defaults.networks_per_arm == 30);
  CHECK(defaults.permutations == 200);
  CHECK(defaults.bootstraps == 200);
}

TEST_CASE("config validation happens before any work") {
  CHECK(code_of([] { parse("networks_per_arm = 0\n"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse("bands = 0:0.3, 0.2:0.5\n"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse("bands = 0.5:1.2\n"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse("bands = 0.4:0.2\n"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse("permutations = 0\n"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse("methods = stress\npermutations = 0\n"); }) == ErrorCode::Io);
  CHECK(code_of([] { parse("colour = blue\n"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse("sizes 10\n"); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { parse("alpha = 0.05x\n"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse("sizes = 2\n"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("a small full study is complete, consistent and reproducible") {
  const auto config = parse(
      "sizes = 15, 30, 45\n"
      "networks_per_arm = 2\n"
      "permutations = 20\n"
      "bootstraps = 20\n"
      "seed = 5\n");
  const auto report = run_simulation_study(config);
  CHECK(report.rows.size() == 27);
  for (const auto& r : report.rows) {
    CHECK(r.sensitivity() >= 0.0);
    CHECK(r.sensitivity() <= 1.0);
    CHECK(r.specificity() >= 0.0);
    CHECK(r.specificity() <= 1.0);
    CHECK(r.hyperbolic_correct <= r.hyperbolic_total);
    CHECK(r.euclidean_correct <= r.euclidean_total);
    if (r.available) {
      CHECK(r.hyperbolic_total + r.hyperbolic_unavailable == 2);
      CHECK(r.euclidean_total + r.euclidean_unavailable == 2);
    }
  }

  std::ostringstream csv;
  write_study_csv(csv, report);
  CHECK(count_lines(csv.str()) == 28);

  const auto again = run_simulation_study(config);
  CHECK(to_json(again).dump() == to_json(report).dump());

  const auto back = study_from_json(to_json(report));
  std::ostringstream csv_back;
  write_study_csv(csv_back, back);
  CHECK(csv_back.str() == csv.str());

  std::ostringstream table;
  write_study_table(table, report);
  CHECK(count_lines(table.str()) == 28);
}

TEST_CASE("starved cells are marked unavailable") {
  // A GLPM with phi = 2 and gamma = 1 never exceeds density 1/2.
  const auto config = parse(
      "sizes = 20\n"
      "bands = 0.9:1\n"
      "networks_per_arm = 2\n"
      "methods = stress\n"
      "draw_budget = 5\n");
  const auto report = run_simulation_study(config);
  REQUIRE(report.rows.size() == 1);
  CHECK_FALSE(report.rows[0].available);
  CHECK(report.rows[0].euclidean_total < 2);
}

TEST_CASE("small sparse networks: stress rule rates") {
  const auto config = parse(
      "sizes = 15\n"
      "bands = 0:0.2\n"
      "methods = stress\n"
      "seed = 1\n");
  const auto report = run_simulation_study(config);
  REQUIRE(report.rows.size() == 1);
  const auto& r = report.rows[0];
  MESSAGE("n=15 sparse: sensitivity ", r.sensitivity(), ", specificity ", r.specificity());
  CHECK(r.available);
  CHECK(std::abs(r.sensitivity() - 0.4516) <= 0.15);
  CHECK(std::abs(r.specificity() - 0.7593) <= 0.15);
}
