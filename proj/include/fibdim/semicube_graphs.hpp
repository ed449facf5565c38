#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fibdim/bitstring.hpp"
#include "fibdim/graph.hpp"
#include "fibdim/partial_cube.hpp"

namespace fibdim {

/// Names the semicube W(i, chi) = { v : coordinate i of v equals chi }.
/// Node id in the 2k-node semicube graphs is 2i + chi.
struct SemicubeRef {
  std::uint32_t i = 0;
  std::uint8_t chi = 0;

  std::size_t node() const noexcept { return 2 * std::size_t{i} + chi; }
  SemicubeRef complement() const noexcept {
    return {i, static_cast<std::uint8_t>(chi ^ 1)};
  }
  static SemicubeRef from_node(std::size_t node) noexcept {
    return {static_cast<std::uint32_t>(node / 2),
            static_cast<std::uint8_t>(node % 2)};
  }
  friend auto operator<=>(const SemicubeRef&, const SemicubeRef&) = default;
};

/// "W(i,chi)".
std::string to_string(SemicubeRef s);

/// Undirected graph with bit-row adjacency; meant for the <= 2k node
/// semicube graphs.
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(std::size_t n) : rows_(n, BitString(n)) {}

  std::size_t order() const noexcept { return rows_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return rows_[a][b]; }
  const BitString& row(std::size_t a) const { return rows_[a]; }
  std::size_t degree(std::size_t a) const { return rows_[a].count(); }
  std::size_t edge_count() const;

  void add_edge(std::size_t a, std::size_t b) {
    rows_[a].set(b);
    rows_[b].set(a);
  }
  void remove_edge(std::size_t a, std::size_t b) {
    rows_[a].reset(b);
    rows_[b].reset(a);
  }

  /// (a, b) with a < b, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  Graph to_graph() const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  std::vector<BitString> rows_;
};

/// X(G): semicubes from different pairs are adjacent iff they are disjoint.
struct XGraph {
  std::size_t k = 0;
  DenseGraph graph;

  /// Validates that no edge joins the two members of a pair.
  static XGraph from_edges(
      std::size_t k, std::span<const std::pair<SemicubeRef, SemicubeRef>> edges);

  bool adjacent(SemicubeRef a, SemicubeRef b) const {
    return graph.adjacent(a.node(), b.node());
  }
};

/// Sc(G): semicubes adjacent iff their union is V(G) and they intersect.
struct ScGraph {
  std::size_t k = 0;
  DenseGraph graph;
};

/// Y(G): X(G) with each complementary pair contracted to one node.
struct YGraph {
  DenseGraph graph;
};

/// Membership bitsets over V(G) for all 2k semicubes, indexed by node id.
class SemicubeFamily {
 public:
  explicit SemicubeFamily(const HypercubeEmbedding& emb);

  std::size_t k() const noexcept { return members_.size() / 2; }
  std::size_t vertex_count() const noexcept { return n_; }
  const BitString& members(SemicubeRef s) const { return members_[s.node()]; }
  const BitString& members(std::size_t node) const { return members_[node]; }

 private:
  std::size_t n_ = 0;
  std::vector<BitString> members_;
};

/// Starts from the complete graph on 2k nodes minus intra-pair edges and, for
/// each vertex v, removes the edges between the semicubes containing v.
XGraph build_X(const HypercubeEmbedding& emb);
XGraph build_X(const Graph& g, const HypercubeEmbedding& emb);

ScGraph build_Sc(const HypercubeEmbedding& emb);
ScGraph build_Sc(const Graph& g, const HypercubeEmbedding& emb);

YGraph build_Y(const XGraph& x);

/// G^# on the k Θ-classes: i ~ j iff all four W(i,a) ∩ W(j,b) are nonempty.
Graph crossing_graph(const HypercubeEmbedding& emb);
Graph crossing_graph(const Graph& g, const HypercubeEmbedding& emb);

}  // namespace fibdim
