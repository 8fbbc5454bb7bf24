#include "latentgeo/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "latentgeo/error.hpp"

namespace latentgeo {

Network::Network(std::size_t n) : Network(n, {}) {}

Network::Network(std::size_t n, std::vector<std::string> labels)
    : n_(n), adj_(n * n, 0), nbrs_(n), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n) {
    throw Error(ErrorCode::SizeMismatch, "label count differs from node count");
  }
}

Network Network::from_upper_triangle(std::size_t n, std::span<const std::uint8_t> upper) {
  if (upper.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
    throw Error(ErrorCode::SizeMismatch, "upper triangle has wrong length");
  }
  Network net(n);
  std::size_t k = 0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j, ++k) {
      if (upper[k]) net.add_edge(i, j);
    }
  }
  return net;
}

bool Network::add_edge(NodeId i, NodeId j) {
  if (i >= n_ || j >= n_) throw Error(ErrorCode::InvalidArgument, "node index out of range");
  if (i == j) throw Error(ErrorCode::SelfLoop, "self-loop on node " + labels_[i]);
  if (adj_[i * n_ + j]) return false;
  adj_[i * n_ + j] = adj_[j * n_ + i] = 1;
  nbrs_[i].push_back(j);
  nbrs_[j].push_back(i);
  ++edges_;
  return true;
}

std::vector<std::uint8_t> Network::upper_triangle() const {
  std::vector<std::uint8_t> upper;
  upper.reserve(n_ * (n_ > 0 ? n_ - 1 : 0) / 2);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) upper.push_back(adj_[i * n_ + j]);
  }
  return upper;
}

std::vector<std::pair<NodeId, NodeId>> Network::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edges_);
  for (NodeId i = 0; i < n_; ++i) {
    for (NodeId j = i + 1; j < n_; ++j) {
      if (adj_[i * n_ + j]) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

constexpr std::string_view kNodesDirective = "#@nodes";

}  // namespace

Network parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::vector<std::string> declared;
  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::vector<std::size_t> edge_lines;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.front() == kNodesDirective) {
      for (std::size_t t = 1; t < tokens.size(); ++t) declared.emplace_back(tokens[t]);
      continue;
    }
    if (tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw Error(ErrorCode::MalformedLine,
                  "line " + std::to_string(line_no) + " has " + std::to_string(tokens.size()) +
                      " tokens, expected 2");
    }
    if (tokens[0] == tokens[1]) {
      throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": " + std::string(tokens[0]));
    }
    raw_edges.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
    edge_lines.push_back(line_no);
  }
  if (raw_edges.empty() && declared.empty()) throw Error(ErrorCode::EmptyInput, "no edges or nodes in input");

  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;

  if (options.integer_ids) {
    std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t hi = 0;
    auto visit = [&](const std::string& token) {
      auto v = parse_uint(token);
      if (!v) throw Error(ErrorCode::MalformedLine, "non-integer node id '" + token + "'");
      lo = std::min(lo, *v);
      hi = std::max(hi, *v);
    };
    for (const auto& d : declared) visit(d);
    for (const auto& [a, b] : raw_edges) {
      visit(a);
      visit(b);
    }
    if (hi - lo > 10'000'000) throw Error(ErrorCode::InvalidArgument, "integer id range too large");
    for (std::uint64_t v = lo; v <= hi; ++v) {
      index.emplace(std::to_string(v), static_cast<NodeId>(v - lo));
      labels.push_back(std::to_string(v));
    }
    // Tokens such as "007" parse as integers but are not canonical keys.
    auto canonical = [&](const std::string& token) { return std::to_string(*parse_uint(token)); };
    for (auto& d : declared) d = canonical(d);
    for (auto& [a, b] : raw_edges) {
      a = canonical(a);
      b = canonical(b);
    }
  } else {
    auto intern = [&](const std::string& token) {
      if (index.emplace(token, static_cast<NodeId>(labels.size())).second) labels.push_back(token);
    };
    for (const auto& d : declared) intern(d);
    for (const auto& [a, b] : raw_edges) {
      intern(a);
      intern(b);
    }
  }

  const std::size_t n = labels.size();
  Network net(n, std::move(labels));
  for (std::size_t e = 0; e < raw_edges.size(); ++e) {
    const auto& [a, b] = raw_edges[e];
    NodeId i = index.at(a);
    NodeId j = index.at(b);
    if (i == j) throw Error(ErrorCode::SelfLoop, "line " + std::to_string(edge_lines[e]) + ": " + a);
    net.add_edge(i, j);
  }
  return net;
}

Network parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

Network read_edge_list_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Network& net) {
  out << kNodesDirective;
  for (const auto& l : net.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& [i, j] : net.edges()) out << net.label(i) << ' ' << net.label(j) << '\n';
}

GeodesicMatrix::GeodesicMatrix(std::size_t n, std::vector<std::uint32_t> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) throw Error(ErrorCode::SizeMismatch, "geodesic matrix must be n x n");
}

std::uint32_t GeodesicMatrix::max_value() const noexcept {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Fills row `source` of dist; returns the number of reached nodes.
std::size_t bfs_row(const Network& net, NodeId source, std::span<std::uint32_t> dist,
                    std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (NodeId v : net.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return queue.size();
}

}  // namespace

std::optional<GeodesicMatrix> try_geodesic_distances(const Network& net) {
  const std::size_t n = net.size();
  std::vector<std::uint32_t> values(n * n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    std::span<std::uint32_t> row(values.data() + s * n, n);
    if (bfs_row(net, s, row, queue) != n) return std::nullopt;
  }
  return GeodesicMatrix(n, std::move(values));
}

GeodesicMatrix geodesic_distances(const Network& net) {
  auto result = try_geodesic_distances(net);
  if (!result) throw Error(ErrorCode::Disconnected, "network is not connected");
  return std::move(*result);
}

bool is_connected(const Network& net) {
  if (net.size() <= 1) return true;
  std::vector<std::uint32_t> dist(net.size());
  std::vector<NodeId> queue;
  queue.reserve(net.size());
  return bfs_row(net, 0, dist, queue) == net.size();
}

NetworkMeasures network_measures(const Network& net) {
  const std::size_t n = net.size();
  if (n < 2) throw Error(ErrorCode::TooSmall, "network measures need at least two nodes");

  NetworkMeasures m;
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  m.density = static_cast<double>(net.edge_count()) / pairs;
  m.avg_degree = static_cast<double>(n - 1) * m.density;

  // Each triangle closes three two-paths, one centred on each corner.
  double closed = 0.0;
  double two_paths = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    auto nb = net.neighbors(u);
    const double k = static_cast<double>(nb.size());
    two_paths += k * (k - 1.0) / 2.0;
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (net.has_edge(nb[a], nb[b])) closed += 1.0;
      }
    }
  }
  m.transitivity = two_paths > 0.0 ? closed / two_paths : 0.0;
  return m;
}

}  // namespace latentgeo
