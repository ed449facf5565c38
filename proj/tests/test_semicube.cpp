#include <doctest.h>

#include <random>
#include <set>

#include "fibdim/constructions.hpp"
#include "fibdim/error.hpp"
#include "fibdim/oracle.hpp"
#include "fibdim/partial_cube.hpp"
#include "fibdim/semicube_graphs.hpp"
#include "test_support.hpp"

using namespace fibdim;

namespace {

using VertexSet = std::set<Vertex>;

// Semicubes as plain vertex sets, indexed by node id 2i + chi.
std::vector<VertexSet> semicube_sets(const HypercubeEmbedding& emb) {
  std::vector<VertexSet> sets(2 * emb.k);
  for (Vertex v = 0; v < emb.label.size(); ++v) {
    for (std::size_t i = 0; i < emb.k; ++i) {
      sets[2 * i + (emb.label[v][i] ? 1 : 0)].insert(v);
    }
  }
  return sets;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  for (Vertex v : a) {
    if (b.count(v)) return false;
  }
  return true;
}

bool covers(const VertexSet& a, const VertexSet& b, std::size_t n) {
  VertexSet u = a;
  u.insert(b.begin(), b.end());
  return u.size() == n;
}

std::size_t count_edges(const DenseGraph& g) { return g.edge_count(); }

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out{path(2), path(5), star(3), star(5), cycle(6), cycle(8),
                         hypercube(3), fibonacci_cube(5), grid(3, 3),
                         simplex_graph(cycle(5))};
  std::mt19937_64 rng(21);
  for (int t = 0; t < 8; ++t) out.push_back(random_tree(8, rng()));
  for (int t = 0; t < 6; ++t) {
    out.push_back(cartesian_product(testing::random_factor(rng),
                                    testing::random_factor(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("semicube names") {
  CHECK(to_string(SemicubeRef{3, 0}) == "W(3,0)");
  CHECK(SemicubeRef{2, 1}.node() == 5);
  CHECK(SemicubeRef::from_node(5) == SemicubeRef{2, 1});
  CHECK(SemicubeRef{2, 1}.complement() == SemicubeRef{2, 0});
}

TEST_CASE("X graph examples") {
  SUBCASE("hypercubes have an edgeless X") {
    for (std::size_t k = 1; k <= 4; ++k) {
      CHECK(count_edges(build_X(canonical_embedding(hypercube(k))).graph) == 0);
    }
  }
  SUBCASE("star K_{1,3}: triangle on the leaf semicubes") {
    const auto x = build_X(canonical_embedding(star(3)));
    CHECK(x.k == 3);
    CHECK(count_edges(x.graph) == 3);
    for (std::uint32_t i = 0; i < 3; ++i) {
      CHECK(x.graph.degree(SemicubeRef{i, 0}.node()) == 0);
      for (std::uint32_t j = i + 1; j < 3; ++j) {
        CHECK(x.adjacent({i, 1}, {j, 1}));
      }
    }
  }
  SUBCASE("X of a two-simplex graph recovers the complement graph") {
    for (const Graph& g0 : testing::all_graphs(4)) {
      const Graph h = two_simplex_graph(complement(g0));
      const auto x = build_X(canonical_embedding(h));
      REQUIRE(x.k == 4);
      std::vector<std::size_t> kept;
      for (std::size_t i = 0; i < x.k; ++i) {
        const bool zero_isolated = x.graph.degree(2 * i) == 0;
        const bool one_isolated = x.graph.degree(2 * i + 1) == 0;
        REQUIRE((zero_isolated || one_isolated));
        kept.push_back(zero_isolated ? 2 * i + 1 : 2 * i);
      }
      std::vector<Edge> edges;
      for (Vertex a = 0; a < 4; ++a) {
        for (Vertex b = a + 1; b < 4; ++b) {
          if (x.graph.adjacent(kept[a], kept[b])) edges.emplace_back(a, b);
        }
      }
      CHECK(testing::canonical_form(Graph::from_edges(4, edges)) ==
            testing::canonical_form(g0));
    }
  }
  SUBCASE("from_edges rejects an edge inside a pair") {
    const std::pair<SemicubeRef, SemicubeRef> bad{{1, 0}, {1, 1}};
    CHECK_THROWS_AS(XGraph::from_edges(2, std::span(&bad, 1)), ValidationError);
  }
}

TEST_CASE("Sc graph examples") {
  SUBCASE("P_3") {
    const auto sc = build_Sc(canonical_embedding(path(3)));
    CHECK(sc.graph.edges() ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {SemicubeRef{0, 1}.node(), SemicubeRef{1, 0}.node()}});
  }
  SUBCASE("hypercubes have an edgeless Sc") {
    for (std::size_t k = 1; k <= 4; ++k) {
      CHECK(count_edges(build_Sc(canonical_embedding(hypercube(k))).graph) == 0);
    }
  }
  SUBCASE("P_4 matching") {
    const auto sc = build_Sc(canonical_embedding(path(4)));
    CHECK(oracle::brute_force_matching_size(sc.graph.to_graph()) == 2);
  }
}

TEST_CASE("Y graph examples") {
  CHECK(count_edges(build_Y(build_X(canonical_embedding(hypercube(3)))).graph) == 0);
  const auto y_star = build_Y(build_X(canonical_embedding(star(3))));
  CHECK(y_star.graph.order() == 3);
  CHECK(count_edges(y_star.graph) == 3);
  const auto y_path = build_Y(build_X(canonical_embedding(path(4))));
  CHECK(y_path.graph.order() == 3);
  CHECK(is_connected(y_path.graph.to_graph()));
}

TEST_CASE("crossing graph examples") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const Graph c = crossing_graph(canonical_embedding(hypercube(k)));
    CHECK(c.order() == k);
    CHECK(c.size() == k * (k - 1) / 2);
  }
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    CHECK(crossing_graph(canonical_embedding(random_tree(n, rng()))).size() == 0);
  }
  // The three classes of C_6 pairwise cross.
  const Graph c6 = crossing_graph(canonical_embedding(cycle(6)));
  CHECK(c6.order() == 3);
  CHECK(c6.size() == 3);
  CHECK(count_edges(build_X(canonical_embedding(cycle(6))).graph) == 0);
}

TEST_CASE("semicube graphs match their set definitions") {
  for (const Graph& g : sample_graphs()) {
    const auto emb = canonical_embedding(g);
    const auto sets = semicube_sets(emb);
    const auto x = build_X(g, emb);
    const auto sc = build_Sc(g, emb);
    const auto y = build_Y(x);
    const auto cross = crossing_graph(g, emb);
    const std::size_t n = g.order();
    CHECK(x.graph == build_X(emb).graph);
    for (std::size_t i = 0; i < emb.k; ++i) {
      CHECK(disjoint(sets[2 * i], sets[2 * i + 1]));
      CHECK(covers(sets[2 * i], sets[2 * i + 1], n));
    }
    for (std::size_t a = 0; a < 2 * emb.k; ++a) {
      for (std::size_t b = 0; b < 2 * emb.k; ++b) {
        const bool same_pair = a / 2 == b / 2;
        const bool x_edge = !same_pair && disjoint(sets[a], sets[b]);
        const bool sc_edge = !same_pair && covers(sets[a], sets[b], n) &&
                             !disjoint(sets[a], sets[b]);
        CHECK(x.graph.adjacent(a, b) == x_edge);
        CHECK(sc.graph.adjacent(a, b) == sc_edge);
        CHECK_FALSE((x.graph.adjacent(a, b) && sc.graph.adjacent(a, b)));
      }
    }
    for (std::size_t i = 0; i < emb.k; ++i) {
      for (std::size_t j = 0; j < emb.k; ++j) {
        if (i == j) continue;
        bool all_meet = true;
        bool any_x = false;
        for (std::size_t a = 0; a < 2; ++a) {
          for (std::size_t b = 0; b < 2; ++b) {
            all_meet = all_meet && !disjoint(sets[2 * i + a], sets[2 * j + b]);
            any_x = any_x || x.graph.adjacent(2 * i + a, 2 * j + b);
          }
        }
        CHECK(cross.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ==
              all_meet);
        CHECK(all_meet == !any_x);
        CHECK(y.graph.adjacent(i, j) == any_x);
      }
    }
  }
}

TEST_CASE("X of a product is the union of the factor X graphs") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    const Graph g = testing::random_factor(rng);
    const Graph h = testing::random_factor(rng);
    CHECK(testing::product_x_is_union(g, h));
  }
}
