#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fibdim/graph.hpp"

namespace fibdim {

/// Symmetric (1,2)-TSP instance: dist(u,v) = 1 if uv is an edge of the
/// source graph and 2 otherwise. The diagonal is stored as 0 and never used.
struct Tsp12Instance {
  std::size_t n = 0;
  std::vector<std::uint8_t> dist;

  std::uint8_t operator()(std::size_t u, std::size_t v) const {
    return dist[u * n + v];
  }
};

/// Γ_d; vertices are the Fibonacci strings of length d in lexicographic
/// order and carry them as labels.
Graph fibonacci_cube(std::size_t d);

/// Q_k; vertex v carries the k-bit label whose coordinate i is bit i of v.
Graph hypercube(std::size_t k);
Graph cycle(std::size_t n);
/// Path on n vertices.
Graph path(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Grid with `rows` x `cols` vertices (P_rows □ P_cols).
Graph grid(std::size_t rows, std::size_t cols);

/// Uniform labelled tree on n vertices decoded from a Prüfer sequence drawn
/// from a 64-bit Mersenne Twister seeded with `seed`.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// G □ H; vertex (u, v) gets index u * |V(H)| + v.
Graph cartesian_product(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

/// All cliques of g (including the empty one) as sorted vertex lists, ordered
/// by size and then lexicographically. Throws ResourceError past `cap`.
std::vector<std::vector<Vertex>> enumerate_cliques(const Graph& g,
                                                   std::size_t max_size,
                                                   std::size_t cap);

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// κ(G): one vertex per clique, adjacent when the cliques differ by exactly
/// one vertex. Vertex 0 is the empty clique; labels are "{}", "{2}", "{2,5}".
Graph simplex_graph(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// κ₂(G): the cliques with at most two vertices.
Graph two_simplex_graph(const Graph& g);

Tsp12Instance tsp12_instance(const Graph& g);

/// Matrix text format: n on the first line, then n rows of n entries.
std::string format_tsp12(const Tsp12Instance& instance);

/// κ₂(complement(g)); its Fibonacci dimension encodes Hamiltonian paths of g.
Graph hardness_instance(const Graph& g);

}  // namespace fibdim
