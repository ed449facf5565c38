#include <doctest.h>

#include <random>
#include <set>

#include "fibdim/constructions.hpp"
#include "fibdim/error.hpp"
#include "fibdim/oracle.hpp"
#include "fibdim/partial_cube.hpp"
#include "test_support.hpp"

using namespace fibdim;
using testing::canonical_form;

TEST_CASE("Fibonacci cubes") {
  CHECK(fibonacci_cube(1).order() == 2);
  const Graph g3 = fibonacci_cube(3);
  CHECK(g3.labels() == std::vector<std::string>{"000", "001", "010", "100", "101"});
  CHECK(fibonacci_cube(10).order() == 144);
  std::size_t a = 2, b = 3;
  CHECK(fibonacci_cube(2).order() == 3);
  for (std::size_t d = 3; d <= 16; ++d) {
    const std::size_t c = a + b;
    CHECK(fibonacci_cube(d).order() == c);
    a = b;
    b = c;
  }
  // Edges join labels at Hamming distance one.
  const Graph g6 = fibonacci_cube(6);
  for (Vertex u = 0; u < g6.order(); ++u) {
    for (Vertex v = u + 1; v < g6.order(); ++v) {
      std::size_t diff = 0;
      for (std::size_t i = 0; i < 6; ++i) diff += g6.labels()[u][i] != g6.labels()[v][i];
      CHECK(g6.adjacent(u, v) == (diff == 1));
    }
  }
  CHECK_THROWS_AS(fibonacci_cube(0), ValidationError);
}

TEST_CASE("basic families") {
  const Graph q3 = hypercube(3);
  CHECK(q3.order() == 8);
  CHECK(q3.size() == 12);
  CHECK(q3.labels()[6] == "011");
  const Graph c6 = cycle(6);
  CHECK(c6.order() == 6);
  CHECK(c6.size() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
  CHECK(is_connected(c6));
  CHECK(path(1).order() == 1);
  CHECK(path(5).size() == 4);
  CHECK(star(4).degree(0) == 4);
  CHECK(complete_graph(5).size() == 10);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(empty_graph(4).size() == 0);
  CHECK_THROWS_AS(cycle(2), ValidationError);
  CHECK_THROWS_AS(path(0), ValidationError);
}

TEST_CASE("random trees") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 50; ++t) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const auto seed = rng();
    const Graph tree = random_tree(n, seed);
    CHECK(tree.order() == n);
    CHECK(tree.size() == n - 1);
    CHECK(is_connected(tree));
    CHECK(random_tree(n, seed) == tree);
  }
}

TEST_CASE("cartesian products") {
  CHECK(canonical_form(cartesian_product(path(2), path(2))) == canonical_form(cycle(4)));
  const Graph g23 = cartesian_product(path(2), path(3));
  CHECK(g23.order() == 6);
  CHECK(g23.size() == 7);
  CHECK(canonical_form(cartesian_product(hypercube(2), hypercube(1))) ==
        canonical_form(hypercube(3)));
  CHECK(grid(3, 4).size() == 3 * 3 + 2 * 4);
  // Vertex (u, v) is u * |V(H)| + v.
  const Graph p = cartesian_product(path(3), path(2));
  CHECK(p.adjacent(0, 1));
  CHECK(p.adjacent(1, 3));
  CHECK_FALSE(p.adjacent(1, 2));
}

TEST_CASE("complements") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(complement(complete_graph(n)).size() == 0);
  CHECK(canonical_form(complement(cycle(5))) == canonical_form(cycle(5)));
  std::mt19937_64 rng(61);
  const Graph g = testing::random_graph(9, 0.5, rng);
  CHECK(complement(complement(g)) == g);
}

TEST_CASE("simplex graphs") {
  SUBCASE("κ(K_2) is a 4-cycle") {
    const Graph h = simplex_graph(complete_graph(2));
    CHECK(canonical_form(h) == canonical_form(cycle(4)));
    CHECK(h.labels() == std::vector<std::string>{"{}", "{0}", "{1}", "{0,1}"});
  }
  SUBCASE("κ₂ has 1 + n + m vertices and equals κ on triangle-free graphs") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 30; ++t) {
      const Graph g = testing::random_graph(7, 0.3, rng);
      const Graph h2 = two_simplex_graph(g);
      CHECK(h2.order() == 1 + g.order() + g.size());
      bool triangle = false;
      for (auto [u, v] : g.edges()) {
        for (Vertex w = 0; w < g.order(); ++w) {
          triangle = triangle || (g.adjacent(u, w) && g.adjacent(v, w));
        }
      }
      if (!triangle) CHECK(simplex_graph(g) == h2);
    }
  }
  SUBCASE("κ(K_n) is Q_n") {
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(simplex_graph(complete_graph(n)).order() == (std::size_t{1} << n));
      CHECK(idim(simplex_graph(complete_graph(n))) == n);
    }
    CHECK(canonical_form(simplex_graph(complete_graph(3))) == canonical_form(hypercube(3)));
  }
  SUBCASE("edge rule") {
    const Graph g = cycle(5);
    const Graph h = simplex_graph(g);
    const auto cliques = enumerate_cliques(g, g.order(), 1000);
    REQUIRE(cliques.size() == h.order());
    for (Vertex a = 0; a < h.order(); ++a) {
      for (Vertex b = a + 1; b < h.order(); ++b) {
        std::set<Vertex> sa(cliques[a].begin(), cliques[a].end());
        std::set<Vertex> sb(cliques[b].begin(), cliques[b].end());
        const auto& small = sa.size() < sb.size() ? sa : sb;
        const auto& large = sa.size() < sb.size() ? sb : sa;
        const bool contained = std::includes(large.begin(), large.end(),
                                             small.begin(), small.end());
        CHECK(h.adjacent(a, b) == (contained && large.size() == small.size() + 1));
      }
    }
  }
  SUBCASE("clique cap") {
    CHECK_THROWS_AS(simplex_graph(complete_graph(12), 1000), ResourceError);
    CHECK(two_simplex_graph(complete_graph(12)).order() == 1 + 12 + 66);
  }
}

TEST_CASE("(1,2)-TSP instances") {
  const auto kn = tsp12_instance(complete_graph(5));
  for (std::size_t u = 0; u < 5; ++u) {
    for (std::size_t v = 0; v < 5; ++v) {
      if (u != v) CHECK(kn(u, v) == 1);
    }
  }
  CHECK(oracle::tsp12_optimal(kn) == 5);
  const auto empty = tsp12_instance(empty_graph(4));
  CHECK(empty(0, 3) == 2);
  CHECK(oracle::tsp12_optimal(empty) == 8);
  CHECK(oracle::tsp12_optimal(tsp12_instance(path(4))) == 5);
  CHECK(format_tsp12(tsp12_instance(path(3))) == "3\n0 1 2\n1 0 1\n2 1 0\n");
  CHECK_THROWS_AS(tsp12_instance(Graph(1)), ValidationError);
}

TEST_CASE("hardness instances") {
  CHECK(idim(hardness_instance(path(4))) == 4);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      const Graph h = hardness_instance(g);
      CHECK(idim(h) == n);
      CHECK(h == two_simplex_graph(complement(g)));
    }
  }
}
