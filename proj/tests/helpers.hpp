#pragma once

#include <string>
#include <vector>

#include "latentgeo/graph.hpp"
#include "latentgeo/rng.hpp"

namespace testing {

inline latentgeo::Network from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  latentgeo::Network net(n);
  for (auto [a, b] : edges) net.add_edge(static_cast<latentgeo::NodeId>(a), static_cast<latentgeo::NodeId>(b));
  return net;
}

inline latentgeo::Network path(std::size_t n) {
  latentgeo::Network net(n);
  for (std::size_t i = 0; i + 1 < n; ++i) net.add_edge(static_cast<latentgeo::NodeId>(i), static_cast<latentgeo::NodeId>(i + 1));
  return net;
}

inline latentgeo::Network cycle(std::size_t n) {
  auto net = path(n);
  net.add_edge(0, static_cast<latentgeo::NodeId>(n - 1));
  return net;
}

inline latentgeo::Network complete(std::size_t n) {
  latentgeo::Network net(n);
  for (latentgeo::NodeId i = 0; i < n; ++i)
    for (latentgeo::NodeId j = i + 1; j < n; ++j) net.add_edge(i, j);
  return net;
}

inline latentgeo::Network erdos_renyi(std::size_t n, double p, latentgeo::Rng& rng) {
  latentgeo::Network net(n);
  for (latentgeo::NodeId i = 0; i < n; ++i)
    for (latentgeo::NodeId j = i + 1; j < n; ++j)
      if (latentgeo::uniform01(rng) < p) net.add_edge(i, j);
  return net;
}

inline latentgeo::Network karate() { return latentgeo::read_edge_list_file(LATENTGEO_DATA_DIR "/karate.txt"); }

}  // namespace testing
