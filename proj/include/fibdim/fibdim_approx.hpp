#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fibdim/fibdim_exact.hpp"
#include "fibdim/graph.hpp"
#include "fibdim/semicube_graphs.hpp"

namespace fibdim {

/// Set of pairwise disjoint edges, each stored as (a, b) with a < b.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t size() const noexcept { return edges.size(); }
};

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(V^3)).
Matching max_matching(const Graph& g);

/// Lattice dimension: idim(G) - |M| for a maximum matching M of Sc(G).
std::size_t ldim(const Graph& g);

struct DimBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

/// lower = max(idim, 2 ldim - 1), upper = idim + ldim - 1.
DimBounds fdim_bounds(const Graph& g);

struct ApproxResult {
  std::size_t idim = 0;
  HypercubeEmbedding hypercube;
  CoordinatingPathSystem paths;
  FibonacciEmbedding embedding;
  /// |M_Y| for the matching-based algorithm; unused by the simplex scheme.
  std::size_t matching_size = 0;
  /// True when the simplex scheme fell back to the exact DP.
  bool used_exact = false;

  std::size_t f() const noexcept { return embedding.f; }
};

/// Matching-based approximation: each edge of a maximum matching of Y(G)
/// becomes a two-node coordinating path, every unmatched pair a singleton.
/// Guarantees fdim <= f' <= 3/2 fdim with f' = 2k - |M| - 1.
ApproxResult fdim_approx_3_2(const Graph& g);

/// Exact fdim of a partial cube with ldim = 2: idim + 1 for a grid
/// P_a □ P_b, idim otherwise. Throws ValidationError when ldim != 2.
std::size_t fdim_ldim2(const Graph& g);

/// True iff g is isomorphic to the grid with a and b edges per side.
bool is_grid(const Graph& g, std::size_t a, std::size_t b);

/// Starts from singleton paths on `allowed` (one semicube per pair) and keeps
/// joining two paths through an X edge between endpoints. Pairs of paths are
/// scanned in ascending index order and the first joinable one is merged.
CoordinatingPathSystem greedy_path_system(const XGraph& x,
                                          std::span<const SemicubeRef> allowed);

/// (1+eps)-approximation for a simplex graph H = κ(G). Runs the greedy on
/// X(H) minus one isolated semicube per pair; when more than eps*k paths
/// remain it falls back to the exact DP. Throws ValidationError when H is
/// inconsistent with κ(G).
ApproxResult fdim_simplex_eps(const Graph& h, const Graph& g, double eps,
                              const ExactOptions& options = {});

}  // namespace fibdim
