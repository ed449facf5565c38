#pragma once

// Helpers shared by the unit tests and the acceptance binary. The graph6
// decoder and the distance/embedding checks here are written independently
// of the library code they are used to test.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fibdim/bitstring.hpp"
#include "fibdim/graph.hpp"
#include "fibdim/semicube_graphs.hpp"

namespace fibdim::testing {

/// Straight from the format description: N(n) then the upper triangle
/// column by column, six bits per byte, most significant bit first.
struct RefGraph6 {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
};
RefGraph6 reference_graph6_decode(std::string_view text);

/// Same graph under the best vertex ordering: a string that is equal for
/// two graphs iff they are isomorphic.
std::string canonical_form(const Graph& g);

/// All graphs on n vertices up to isomorphism (n <= 6).
std::vector<Graph> all_graphs(std::size_t n);

/// Connected bipartite graphs on n vertices up to isomorphism (n <= 9),
/// grown by adding a vertex joined to a nonempty subset of one colour class.
std::vector<Graph> connected_bipartite_graphs(std::size_t n);

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Connected variant: a random spanning tree plus G(n, p) edges.
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Path, even cycle or small tree; idim between 1 and 7.
Graph random_factor(std::mt19937_64& rng);

/// Random X graph on k pairs: every cross-pair node pair with probability p.
XGraph random_xgraph(std::size_t k, double p, std::mt19937_64& rng);

/// Hop distances by Floyd–Warshall, 0xffff for unreachable.
std::vector<std::vector<unsigned>> floyd_distances(const Graph& g);

/// Plain pairwise check: Hamming distance equals graph distance.
bool labels_isometric(const Graph& g, const std::vector<BitString>& labels);

bool has_consecutive_ones(const BitString& s);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The test corpus of partial cubes: every connected bipartite partial cube
/// on at most `max_small` vertices, plus paths, even cycles, stars, spiders,
/// hypercubes, Fibonacci cubes, grids, random trees, products, simplex
/// graphs and hardness instances. Every member has idim <= 16.
std::vector<NamedGraph> partial_cube_corpus(std::size_t max_small = 7);

/// X(G □ H) equals X(G) ∪ X(H) under the class correspondence read off the
/// product edges: a product class maps to the factor class of its first edge.
bool product_x_is_union(const Graph& g, const Graph& h);

}  // namespace fibdim::testing
