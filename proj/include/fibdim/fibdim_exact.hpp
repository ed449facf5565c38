#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fibdim/bitstring.hpp"
#include "fibdim/graph.hpp"
#include "fibdim/partial_cube.hpp"
#include "fibdim/semicube_graphs.hpp"

namespace fibdim {

/// Paths in X(G). Each path meets every complementary pair at most once and,
/// across the system, every pair is met exactly once. Single-node paths are
/// allowed.
struct CoordinatingPathSystem {
  std::vector<std::vector<SemicubeRef>> paths;

  std::size_t size() const noexcept { return paths.size(); }
};

/// Isometric embedding into the Fibonacci cube Γ_f.
struct FibonacciEmbedding {
  std::size_t f = 0;
  std::vector<BitString> label;
};

struct ExactOptions {
  static constexpr std::size_t kDefaultMaxK = 25;
  /// Hard limit of the bitmask representation.
  static constexpr std::size_t kLimitK = 32;

  std::size_t max_k = kDefaultMaxK;
};

/// Throws ValidationError unless `paths` is a coordinating path system of x.
void validate_path_system(const XGraph& x, const CoordinatingPathSystem& paths);

/// Same check, with adjacency derived from the embedding's semicubes.
void validate_path_system(const HypercubeEmbedding& emb,
                          const CoordinatingPathSystem& paths);

/// Minimum coordinating path system via dynamic programming over subsets of
/// pairs. Ties prefer extending a path over opening a new one, then the lowest
/// node id. Throws ResourceError when k exceeds options.max_k.
CoordinatingPathSystem min_coordinating_paths(const XGraph& x,
                                              const ExactOptions& options = {});

/// Lays the paths out as consecutive coordinate blocks separated by a constant
/// 0 column. Within a block, bit 1 means membership in that path node's
/// semicube. Result has dimension k + |paths| - 1 (0 when k = 0).
FibonacciEmbedding embed_from_paths(const HypercubeEmbedding& emb,
                                    const CoordinatingPathSystem& paths);

struct ExactResult {
  std::size_t idim = 0;
  HypercubeEmbedding hypercube;
  CoordinatingPathSystem paths;
  FibonacciEmbedding embedding;

  std::size_t fdim() const noexcept { return embedding.f; }
};

/// fdim(G) = idim(G) + p(X(G)) - 1 with a certified embedding into Γ_fdim.
ExactResult fdim_exact(const Graph& g, const ExactOptions& options = {});

/// u1 0 u2 0 ... 0 uk: always a valid embedding into Γ_{2k-1}.
FibonacciEmbedding doubling_embedding(const HypercubeEmbedding& emb);

struct FibonacciCheck {
  bool ok = true;
  /// A vertex whose label contains two consecutive ones.
  std::optional<Vertex> non_fibonacci;
  /// A pair whose label distance differs from the graph distance.
  std::optional<std::pair<Vertex, Vertex>> distance_witness;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks label length, the no-"11" property and isometry. Throws
/// ValidationError on ragged labels or a wrong label count.
FibonacciCheck verify_fibonacci(const Graph& g, const DistMatrix& d,
                                const FibonacciEmbedding& emb);
FibonacciCheck verify_fibonacci(const Graph& g, const FibonacciEmbedding& emb);

}  // namespace fibdim
