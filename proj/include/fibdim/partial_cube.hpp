#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fibdim/bitstring.hpp"
#include "fibdim/graph.hpp"

namespace fibdim {

/// Partition of E(G) into Θ*-classes.
///
/// Edge ids index Graph::edges(). Classes are numbered by the first edge
/// (in that order) that belongs to them.
struct ThetaPartition {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;

  std::size_t k() const noexcept { return classes.size(); }
};

/// Isometric embedding into Q_k; label[v] has k bits.
struct HypercubeEmbedding {
  std::size_t k = 0;
  std::vector<BitString> label;
};

/// Djoković–Winkler relation closed under transitivity. Rejects graphs that
/// are disconnected or not bipartite with NotPartialCubeError.
ThetaPartition theta_classes(const Graph& g, const DistMatrix& d);

/// Coordinate i of v is 1 iff v lies on the side of the i-th Θ-class cut
/// that does not contain vertex 0. Every pair is verified; a graph that is
/// not a partial cube raises NotPartialCubeError with a witness pair.
HypercubeEmbedding canonical_embedding(const Graph& g, const DistMatrix& d);
HypercubeEmbedding canonical_embedding(const Graph& g);

bool is_partial_cube(const Graph& g);

/// Isometric dimension. Throws NotPartialCubeError if it is infinite.
std::size_t idim(const Graph& g);

struct IsometryCheck {
  bool ok = true;
  /// Set when !ok.
  std::optional<std::pair<Vertex, Vertex>> witness;

  explicit operator bool() const noexcept { return ok; }
};

/// Compares Hamming distance of labels against graph distance for every
/// pair. Throws ValidationError when labels differ in length or the label
/// count does not match the vertex count.
IsometryCheck verify_isometric(const Graph& g, const DistMatrix& d,
                               std::span<const BitString> labels);
IsometryCheck verify_isometric(const Graph& g, std::span<const BitString> labels);

/// True iff every coordinate takes both values among the labels.
bool is_irredundant(std::span<const BitString> labels);

}  // namespace fibdim
