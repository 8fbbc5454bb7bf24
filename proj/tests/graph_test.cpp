#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "latentgeo/error.hpp"
#include "latentgeo/graph.hpp"

using namespace latentgeo;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Network net = parse_edge_list("# comment\n1 2\n\n2 3\n3 1\n2 1\n");
  CHECK(net.size() == 3);
  CHECK(net.edge_count() == 3);  // duplicate collapses
  CHECK(net.label(0) == "1");
  CHECK(net.has_edge(0, 2));
  CHECK(net.has_edge(2, 0));

  CHECK(code_of([] { parse_edge_list("1 2 3\n"); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { parse_edge_list("1\n"); }) == ErrorCode::MalformedLine);
  CHECK(code_of([] { parse_edge_list("4 4\n"); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { parse_edge_list("# nothing\n\n"); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { parse_edge_list("007 7\n", ParseOptions{true}); }) == ErrorCode::SelfLoop);
}

TEST_CASE("integer ids index from the smallest id") {
  const Network net = parse_edge_list("5 3\n3 4\n", ParseOptions{true});
  CHECK(net.size() == 3);
  CHECK(net.label(0) == "3");
  CHECK(net.has_edge(0, 2));
  CHECK(net.has_edge(0, 1));
  CHECK_FALSE(net.has_edge(1, 2));
}

TEST_CASE("karate fixture") {
  const Network net = testing::karate();
  CHECK(net.size() == 34);
  CHECK(net.edge_count() == 78);
  CHECK(is_connected(net));
}

TEST_CASE("write and re-parse is idempotent, isolated nodes included") {
  Rng rng = make_stream(3, {});
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = testing::erdos_renyi(25, 0.08, rng);
    std::ostringstream out;
    write_edge_list(out, net);
    const Network back = parse_edge_list(out.str());
    REQUIRE(back.size() == net.size());
    CHECK(back.labels() == net.labels());
    CHECK(back.upper_triangle() == net.upper_triangle());
    std::ostringstream again;
    write_edge_list(again, back);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("geodesic distances on small graphs") {
  const auto p3 = geodesic_distances(testing::path(3));
  CHECK(p3(0, 2) == 2);
  const auto k3 = geodesic_distances(testing::complete(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(k3(i, j) == (i == j ? 0u : 1u));
  const auto c4 = geodesic_distances(testing::cycle(4));
  CHECK(c4(0, 0) == 0);
  CHECK(c4(0, 1) == 1);
  CHECK(c4(0, 2) == 2);
  CHECK(c4(0, 3) == 1);
  CHECK(c4.max_value() == 2);

  CHECK(code_of([] { geodesic_distances(testing::from_edges(4, {{0, 1}, {2, 3}})); }) == ErrorCode::Disconnected);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(testing::complete(3)));
  CHECK_FALSE(is_connected(testing::from_edges(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_connected(Network(2)));
  CHECK(is_connected(Network(1)));
}

TEST_CASE("network measures") {
  auto k3 = network_measures(testing::complete(3));
  CHECK(k3.density == doctest::Approx(1.0));
  CHECK(k3.avg_degree == doctest::Approx(2.0));
  CHECK(k3.transitivity == doctest::Approx(1.0));

  auto p3 = network_measures(testing::path(3));
  CHECK(p3.density == doctest::Approx(2.0 / 3.0));
  CHECK(p3.avg_degree == doctest::Approx(4.0 / 3.0));
  CHECK(p3.transitivity == 0.0);

  CHECK(network_measures(Network(2)).transitivity == 0.0);
  CHECK(code_of([] { network_measures(Network(1)); }) == ErrorCode::TooSmall);

  // Karate club: 45 triangles over 528 connected two-paths.
  auto kc = network_measures(testing::karate());
  CHECK(kc.avg_degree == doctest::Approx(156.0 / 34.0));
  CHECK(kc.transitivity == doctest::Approx(3.0 * 45.0 / 528.0));
}

TEST_CASE("geodesic matrix invariants on random graphs") {
  Rng rng = make_stream(11, {});
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 5 + trial % 20;
    const Network net = testing::erdos_renyi(n, 0.3, rng);
    auto geo = try_geodesic_distances(net);
    CHECK(geo.has_value() == is_connected(net));
    if (!geo) continue;
    ++checked;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK((*geo)(i, i) == 0);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK((*geo)(i, j) == (*geo)(j, i));
        if (i != j) CHECK(((*geo)(i, j) == 1) == net.has_edge(static_cast<NodeId>(i), static_cast<NodeId>(j)));
        if (i < j && (*geo)(i, j) == 1) ++ones;
        for (std::size_t k = 0; k < n; ++k) CHECK((*geo)(i, j) <= (*geo)(i, k) + (*geo)(k, j));
      }
    }
    const double pairs = n * (n - 1) / 2.0;
    CHECK(network_measures(net).density == doctest::Approx(ones / pairs));
  }
  CHECK(checked > 20);
}
