#pragma once

// Brute-force references for small inputs. Nothing here calls the Θ-class,
// semicube or dynamic-programming code; only graph_model and the plain data
// types XGraph / Tsp12Instance are shared.

#include <cstddef>
#include <optional>

#include "fibdim/constructions.hpp"
#include "fibdim/graph.hpp"
#include "fibdim/semicube_graphs.hpp"

namespace fibdim::oracle {

inline constexpr std::size_t kMaxBruteForceVertices = 16;
inline constexpr std::size_t kMaxBruteForceDimension = 20;

/// Smallest f <= f_max admitting an isometric embedding into Γ_f, found by
/// backtracking over Fibonacci strings in BFS order from vertex 0. nullopt
/// if none exists (or g is disconnected). ResourceError past the caps above.
std::optional<std::size_t> brute_force_fdim(const Graph& g, std::size_t f_max);

/// Smallest k <= k_max admitting an isometric embedding into Q_k.
std::optional<std::size_t> brute_force_idim(const Graph& g, std::size_t k_max);

/// p(X): tries every ordering of the pairs with every sign choice and splits
/// the sequence wherever consecutive nodes are not adjacent. k <= 9.
std::size_t brute_force_path_cover(const XGraph& x);

/// Exhaustive maximum matching size for graphs with at most 16 vertices.
std::size_t brute_force_matching_size(const Graph& g);

/// Subset DP; n <= 20.
bool has_hamiltonian_path(const Graph& g);

/// Held–Karp optimal tour length; n <= 16.
std::size_t tsp12_optimal(const Tsp12Instance& instance);

/// Every triple has exactly one vertex lying on geodesics between each pair
/// of the triple. n <= 200.
bool is_median_graph(const Graph& g);

}  // namespace fibdim::oracle
