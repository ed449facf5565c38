#include <doctest.h>

#include <random>
#include <set>

#include "fibdim/constructions.hpp"
#include "fibdim/error.hpp"
#include "fibdim/fibdim_approx.hpp"
#include "fibdim/oracle.hpp"
#include "fibdim/partial_cube.hpp"
#include "test_support.hpp"

using namespace fibdim;

namespace {

void check_matching(const Graph& g, const Matching& m) {
  std::set<std::size_t> used;
  for (auto [a, b] : m.edges) {
    CHECK(a < b);
    CHECK(g.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    CHECK(used.insert(a).second);
    CHECK(used.insert(b).second);
  }
}

bool certified(const Graph& g, const FibonacciEmbedding& emb) {
  for (const auto& s : emb.label) {
    if (s.size() != emb.f || testing::has_consecutive_ones(s)) return false;
  }
  return testing::labels_isometric(g, emb.label);
}

}  // namespace

TEST_CASE("maximum matching") {
  CHECK(max_matching(complete_graph(3)).size() == 1);
  CHECK(max_matching(path(4)).size() == 2);
  CHECK(max_matching(Graph(0)).size() == 0);
  CHECK(max_matching(cycle(9)).size() == 4);
  // Petersen graph: perfect matching through blossoms.
  const Graph petersen = parse_edge_list(
      "0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n");
  CHECK(max_matching(petersen).size() == 5);
  std::mt19937_64 rng(47);
  for (int t = 0; t < 300; ++t) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    const Graph g = testing::random_graph(n, p, rng);
    const Matching m = max_matching(g);
    check_matching(g, m);
    CHECK(m.size() == oracle::brute_force_matching_size(g));
  }
}

TEST_CASE("lattice dimension") {
  for (std::size_t n = 2; n <= 9; ++n) CHECK(ldim(path(n)) == 1);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(ldim(hypercube(k)) == k);
  CHECK(ldim(fibonacci_cube(4)) == 2);
  CHECK(ldim(star(3)) == 2);
  CHECK(ldim(grid(3, 5)) == 2);
  CHECK(ldim(cycle(6)) == 3);
  CHECK_THROWS_AS(ldim(complete_graph(3)), NotPartialCubeError);
}

TEST_CASE("dimension bounds") {
  auto bounds = [](const Graph& g) {
    const auto b = fdim_bounds(g);
    return std::pair{b.lower, b.upper};
  };
  CHECK(bounds(path(5)) == std::pair<std::size_t, std::size_t>{4, 4});
  CHECK(bounds(hypercube(3)) == std::pair<std::size_t, std::size_t>{5, 5});
  CHECK(bounds(fibonacci_cube(4)) == std::pair<std::size_t, std::size_t>{4, 5});
  CHECK(fdim_exact(fibonacci_cube(4)).fdim() == 4);
  CHECK(bounds(Graph(1)) == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("3/2-approximation examples") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto r = fdim_approx_3_2(hypercube(k));
    CHECK(r.matching_size == 0);
    CHECK(r.f() == 2 * k - 1);
    CHECK(certified(hypercube(k), r.embedding));
  }
  const auto star_r = fdim_approx_3_2(star(3));
  CHECK(star_r.matching_size == 1);
  CHECK(star_r.f() == 4);
  CHECK(2 * star_r.f() <= 3 * fdim_exact(star(3)).fdim());
  CHECK_THROWS_AS(fdim_approx_3_2(cycle(5)), NotPartialCubeError);
}

TEST_CASE("3/2-approximation on the corpus") {
  for (const auto& [name, g] : testing::partial_cube_corpus(6)) {
    CAPTURE(name);
    const auto r = fdim_approx_3_2(g);
    const std::size_t exact = fdim_exact(g).fdim();
    CHECK(certified(g, r.embedding));
    CHECK(r.f() == 2 * r.idim - r.matching_size - (r.idim > 0 ? 1 : 0));
    CHECK(exact <= r.f());
    CHECK(2 * r.f() <= 3 * exact);
  }
}

TEST_CASE("bound chain on the corpus") {
  for (const auto& [name, g] : testing::partial_cube_corpus(6)) {
    CAPTURE(name);
    const std::size_t k = idim(g);
    const std::size_t l = ldim(g);
    const std::size_t f = fdim_exact(g).fdim();
    if (k == 0) continue;
    CHECK(k <= f);
    CHECK(f <= 2 * k - 1);
    CHECK(f <= k + l - 1);
    CHECK(l <= (f + 1) / 2);
    const auto b = fdim_bounds(g);
    CHECK(b.lower <= f);
    CHECK(f <= b.upper);
  }
}

TEST_CASE("grid recognition") {
  CHECK(is_grid(grid(3, 4), 2, 3));
  CHECK(is_grid(grid(3, 4), 3, 2));
  CHECK_FALSE(is_grid(grid(3, 4), 1, 5));
  CHECK(is_grid(cycle(4), 1, 1));
  CHECK_FALSE(is_grid(fibonacci_cube(4), 1, 3));
  CHECK_FALSE(is_grid(cycle(8), 1, 3));
  // Same counts as the 3x3 grid, different shape.
  const Graph odd = parse_edge_list(
      "0 1\n1 2\n0 3\n1 4\n2 5\n3 4\n4 5\n3 6\n6 7\n7 8\n5 8\n0 8\n");
  CHECK_FALSE(is_grid(odd, 2, 2));
}

TEST_CASE("ldim = 2 formula") {
  CHECK(fdim_ldim2(grid(2, 3)) == 4);
  CHECK(fdim_ldim2(star(3)) == 3);
  CHECK_THROWS_AS(fdim_ldim2(cycle(6)), ValidationError);
  CHECK_THROWS_AS(fdim_ldim2(path(4)), ValidationError);
  std::size_t grids = 0, checked = 0;
  for (const auto& [name, g] : testing::partial_cube_corpus(7)) {
    if (ldim(g) != 2) continue;
    CAPTURE(name);
    const std::size_t exact = fdim_exact(g).fdim();
    CHECK(fdim_ldim2(g) == exact);
    if (name.starts_with("grid")) {
      CHECK(exact == idim(g) + 1);
      ++grids;
    }
    ++checked;
  }
  CHECK(grids >= 5);
  CHECK(checked >= 20);
}

TEST_CASE("greedy path system") {
  SUBCASE("edgeless X") {
    const XGraph x = XGraph::from_edges(4, {});
    std::vector<SemicubeRef> allowed{{0, 0}, {1, 1}, {2, 0}, {3, 1}};
    CHECK(greedy_path_system(x, allowed).size() == 4);
  }
  SUBCASE("triangle") {
    const XGraph x = build_X(canonical_embedding(star(3)));
    std::vector<SemicubeRef> allowed{{0, 1}, {1, 1}, {2, 1}};
    const auto sys = greedy_path_system(x, allowed);
    REQUIRE(sys.size() == 1);
    CHECK(sys.paths[0].size() == 3);
    CHECK_NOTHROW(validate_path_system(x, sys));
    std::vector<SemicubeRef> with_isolated{{0, 0}, {1, 1}, {2, 1}};
    const auto two = greedy_path_system(x, with_isolated);
    CHECK(two.size() == 2);
  }
  SUBCASE("bad allowed sets") {
    const XGraph x = XGraph::from_edges(2, {});
    std::vector<SemicubeRef> repeat{{0, 0}, {0, 1}};
    CHECK_THROWS_AS(greedy_path_system(x, repeat), ValidationError);
    std::vector<SemicubeRef> short_list{{0, 0}};
    CHECK_THROWS_AS(greedy_path_system(x, short_list), ValidationError);
  }
  SUBCASE("paths and caterpillars reach one path on an optimal side choice") {
    std::vector<Graph> trees;
    for (std::size_t n = 2; n <= 11; ++n) trees.push_back(path(n));
    // Caterpillars: a spine with one pendant leaf per spine vertex.
    for (std::size_t spine = 2; spine <= 6; ++spine) {
      std::vector<Edge> edges;
      for (Vertex v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
      for (Vertex v = 0; v < spine; ++v) edges.emplace_back(v, static_cast<Vertex>(spine + v));
      trees.push_back(Graph::from_edges(2 * spine, edges));
    }
    for (const Graph& t : trees) {
      const auto x = build_X(canonical_embedding(t));
      const auto best = min_coordinating_paths(x);
      REQUIRE(best.size() == 1);
      std::vector<SemicubeRef> allowed(best.paths[0].begin(), best.paths[0].end());
      std::sort(allowed.begin(), allowed.end());
      const auto greedy = greedy_path_system(x, allowed);
      CHECK_NOTHROW(validate_path_system(x, greedy));
      CHECK(greedy.size() == 1);
    }
  }
}

TEST_CASE("simplex scheme") {
  SUBCASE("empty base graph gives a star") {
    const Graph g = empty_graph(3);
    const Graph h = simplex_graph(g);
    CHECK(testing::canonical_form(h) == testing::canonical_form(star(3)));
    const auto r = fdim_simplex_eps(h, g, 0.5);
    CHECK(r.f() == 3);
    CHECK(fdim_exact(h).fdim() == 3);
  }
  SUBCASE("P_3") {
    const Graph g = path(3);
    const Graph h = simplex_graph(g);
    CHECK(h.order() == 6);
    CHECK(fdim_exact(h).fdim() == 4);
    CHECK(oracle::brute_force_fdim(h, 5) == 4u);
    const auto r = fdim_simplex_eps(h, g, 0.9);
    CHECK(r.f() == 4);
    CHECK(certified(h, r.embedding));
  }
  SUBCASE("within (1 + eps) of the optimum") {
    std::vector<Graph> bases;
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const Graph& g : testing::all_graphs(n)) bases.push_back(g);
    }
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
      const auto n = std::uniform_int_distribution<std::size_t>(6, 10)(rng);
      bases.push_back(testing::random_graph(n, 0.3, rng));
    }
    for (const Graph& g : bases) {
      const Graph h = simplex_graph(g);
      const std::size_t exact = fdim_exact(h).fdim();
      for (double eps : {0.3, 0.5, 0.9}) {
        const auto r = fdim_simplex_eps(h, g, eps);
        CHECK(certified(h, r.embedding));
        CHECK(exact <= r.f());
        CHECK(static_cast<double>(r.f()) <= (1.0 + eps) * static_cast<double>(exact));
      }
    }
  }
  SUBCASE("inconsistent input") {
    const Graph h = simplex_graph(path(3));
    CHECK_THROWS_AS(fdim_simplex_eps(h, complete_graph(3), 0.5), ValidationError);
    CHECK_THROWS_AS(fdim_simplex_eps(h, path(4), 0.5), ValidationError);
    CHECK_THROWS_AS(fdim_simplex_eps(h, path(3), 0.0), ValidationError);
    CHECK_THROWS_AS(fdim_simplex_eps(h, path(3), 1.0), ValidationError);
    CHECK_THROWS_AS(fdim_simplex_eps(h, empty_graph(3), 0.5), ValidationError);
  }
}
