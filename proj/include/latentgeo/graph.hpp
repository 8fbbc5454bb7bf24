#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latentgeo {

using NodeId = std::uint32_t;

/// Undirected simple graph. The adjacency structure is kept both as a dense
/// symmetric byte matrix (constant-time lookups, cheap permutation of the
/// upper triangle) and as neighbour lists for BFS.
class Network {
public:
  explicit Network(std::size_t n = 0);
  Network(std::size_t n, std::vector<std::string> labels);

  /// Builds a network from the row-major upper triangle (i < j) of its
  /// adjacency matrix; `upper` holds n(n-1)/2 entries, each 0 or 1.
  static Network from_upper_triangle(std::size_t n, std::span<const std::uint8_t> upper);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  bool has_edge(NodeId i, NodeId j) const noexcept { return adj_[i * n_ + j] != 0; }

  /// Returns false when the edge already exists. Throws SelfLoop for i == j.
  bool add_edge(NodeId i, NodeId j);

  std::span<const NodeId> neighbors(NodeId i) const noexcept { return nbrs_[i]; }
  std::size_t degree(NodeId i) const noexcept { return nbrs_[i].size(); }

  /// Upper-triangle entries in row-major order (see from_upper_triangle).
  std::vector<std::uint8_t> upper_triangle() const;

  /// Edges as (i, j) with i < j, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeId i) const { return labels_[i]; }

private:
  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<NodeId>> nbrs_;
  std::vector<std::string> labels_;
};

struct ParseOptions {
  /// Index nodes by integer value (value - smallest id) instead of by first
  /// appearance. Every token must then be a non-negative integer.
  bool integer_ids = false;
};

/// Edge-list text: one edge per line as two whitespace-separated tokens.
/// Blank lines and lines starting with '#' are ignored, except the
/// directive `#@nodes <label>...`, which declares nodes (in order) so that
/// isolated nodes and the original node order survive a round trip.
Network parse_edge_list(std::istream& in, const ParseOptions& options = {});
Network parse_edge_list(std::string_view text, const ParseOptions& options = {});
Network read_edge_list_file(const std::string& path, const ParseOptions& options = {});

/// Writes the `#@nodes` directive followed by one "label label" line per edge.
void write_edge_list(std::ostream& out, const Network& net);

/// All-pairs shortest-path lengths of a connected network.
class GeodesicMatrix {
public:
  GeodesicMatrix() = default;
  GeodesicMatrix(std::size_t n, std::vector<std::uint32_t> values);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * n_ + j]; }
  std::uint32_t max_value() const noexcept;
  std::span<const std::uint32_t> values() const noexcept { return values_; }

private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> values_;
};

/// BFS from every node. Throws Disconnected when some pair is unreachable.
GeodesicMatrix geodesic_distances(const Network& net);

/// Same as geodesic_distances but returns nullopt for disconnected input.
std::optional<GeodesicMatrix> try_geodesic_distances(const Network& net);

bool is_connected(const Network& net);

struct NetworkMeasures {
  double density = 0.0;
  double avg_degree = 0.0;
  double transitivity = 0.0;
};

/// Density, mean degree and global transitivity (3 x triangles / two-paths,
/// zero when there are no two-paths). Throws TooSmall for n < 2.
NetworkMeasures network_measures(const Network& net);

}  // namespace latentgeo
