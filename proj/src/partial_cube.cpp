#include "fibdim/partial_cube.hpp"

#include <numeric>
#include <string>

#include "fibdim/error.hpp"

namespace fibdim {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Edges uv and xy are in relation Θ iff d(u,x) + d(v,y) != d(u,y) + d(v,x).
bool theta_related(const DistMatrix& d, Edge e, Edge f) {
  auto [u, v] = e;
  auto [x, y] = f;
  return d(u, x) + d(v, y) != d(u, y) + d(v, x);
}

}  // namespace

ThetaPartition theta_classes(const Graph& g, const DistMatrix& d) {
  if (!is_connected(g)) throw NotPartialCubeError("graph is not connected");
  if (!is_bipartite(g)) throw NotPartialCubeError("graph is not bipartite");

  const auto edges = g.edges();
  const std::size_t m = edges.size();
  DisjointSets sets(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (theta_related(d, edges[a], edges[b])) sets.unite(a, b);
    }
  }

  ThetaPartition theta;
  theta.class_of.assign(m, 0);
  std::vector<std::size_t> class_of_root(m, static_cast<std::size_t>(-1));
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t root = sets.find(e);
    if (class_of_root[root] == static_cast<std::size_t>(-1)) {
      class_of_root[root] = theta.classes.size();
      theta.classes.emplace_back();
    }
    theta.class_of[e] = class_of_root[root];
    theta.classes[class_of_root[root]].push_back(e);
  }
  return theta;
}

HypercubeEmbedding canonical_embedding(const Graph& g, const DistMatrix& d) {
  const auto theta = theta_classes(g, d);
  const auto edges = g.edges();
  const std::size_t n = g.order();

  HypercubeEmbedding emb;
  emb.k = theta.k();
  emb.label.assign(n, BitString(emb.k));
  for (std::size_t i = 0; i < emb.k; ++i) {
    auto [a, b] = edges[theta.classes[i].front()];
    // Orient so that vertex 0 sits on the 0 side.
    if (d(0, a) > d(0, b)) std::swap(a, b);
    for (Vertex v = 0; v < n; ++v) {
      if (d(v, b) < d(v, a)) emb.label[v].set(i);
    }
  }

  auto check = verify_isometric(g, d, emb.label);
  if (!check) {
    auto [u, v] = *check.witness;
    throw NotPartialCubeError(
        "not a partial cube: label distance of vertices " + std::to_string(u) +
            " and " + std::to_string(v) + " differs from graph distance",
        u, v);
  }
  return emb;
}

HypercubeEmbedding canonical_embedding(const Graph& g) {
  return canonical_embedding(g, distance_matrix(g));
}

bool is_partial_cube(const Graph& g) {
  if (g.order() == 0) return false;
  try {
    canonical_embedding(g);
    return true;
  } catch (const NotPartialCubeError&) {
    return false;
  }
}

std::size_t idim(const Graph& g) { return canonical_embedding(g).k; }

IsometryCheck verify_isometric(const Graph& g, const DistMatrix& d,
                               std::span<const BitString> labels) {
  const std::size_t n = g.order();
  if (labels.size() != n) {
    throw ValidationError("expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels.size()));
  }
  for (const auto& l : labels) {
    if (l.size() != labels.front().size()) {
      throw ValidationError("labels have different lengths");
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (hamming(labels[u], labels[v]) != d(u, v)) {
        return {false, std::pair{u, v}};
      }
    }
  }
  return {};
}

IsometryCheck verify_isometric(const Graph& g,
                               std::span<const BitString> labels) {
  return verify_isometric(g, distance_matrix(g), labels);
}

bool is_irredundant(std::span<const BitString> labels) {
  if (labels.empty()) return true;
  BitString any_one(labels.front().size());
  BitString any_zero(labels.front().size());
  for (const auto& l : labels) {
    any_one |= l;
    any_zero |= ~l;
  }
  return any_one.all() && any_zero.all();
}

}  // namespace fibdim
