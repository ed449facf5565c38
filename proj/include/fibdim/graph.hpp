#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibdim {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted and symmetric; there are no loops or parallel
/// edges. Labels are optional and purely cosmetic: when present there is one
/// per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse; a self-loop or an endpoint >= n throws
  /// ValidationError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// The label of v, or its decimal id when the graph carries no labels.
  std::string name(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// All-pairs hop distances, stored densely.
class DistMatrix {
 public:
  static constexpr std::uint32_t kUnreachable =
      std::numeric_limits<std::uint32_t>::max();

  DistMatrix() = default;
  explicit DistMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t order() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t u, std::size_t v) const {
    return d_[u * n_ + v];
  }
  std::uint32_t& at(std::size_t u, std::size_t v) { return d_[u * n_ + v]; }
  std::span<const std::uint32_t> row(std::size_t u) const {
    return {d_.data() + u * n_, n_};
  }

  /// Largest finite distance, or kUnreachable if some pair is disconnected.
  std::uint32_t diameter() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

/// Parses "u v" lines. Blank lines and lines starting with '#' are skipped.
/// The vertex set is 0..max id. Throws ParseError carrying the line number.
Graph parse_edge_list(std::string_view text);

/// One "u v" line per edge, u < v, in lexicographic order.
std::string emit_edge_list(const Graph& g);

/// Decodes a single graph6 record (optional ">>graph6<<" header, optional
/// trailing newline). Throws ParseError carrying the byte offset.
Graph parse_graph6(std::string_view bytes);

/// Canonical graph6 encoding, without header or trailing newline.
std::string emit_graph6(const Graph& g);

DistMatrix distance_matrix(const Graph& g);

/// BFS distances from one source.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Proper 2-coloring when one exists (per component, lowest id gets 0).
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);

}  // namespace fibdim
