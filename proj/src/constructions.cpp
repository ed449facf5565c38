#include "fibdim/constructions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "fibdim/error.hpp"

namespace fibdim {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

std::string clique_name(const std::vector<Vertex>& clique) {
  std::string out = "{";
  for (std::size_t t = 0; t < clique.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(clique[t]);
  }
  return out + "}";
}

Graph clique_graph(const std::vector<std::vector<Vertex>>& cliques) {
  std::map<std::vector<Vertex>, Vertex> index;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    index.emplace(cliques[c], static_cast<Vertex>(c));
    labels.push_back(clique_name(cliques[c]));
  }
  // Every clique minus one member is again a clique, so it suffices to link
  // each clique to its maximal proper subcliques.
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    const auto& clique = cliques[c];
    for (std::size_t drop = 0; drop < clique.size(); ++drop) {
      auto smaller = clique;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      edges.emplace_back(index.at(smaller), static_cast<Vertex>(c));
    }
  }
  return Graph::from_edges(cliques.size(), edges, std::move(labels));
}

}  // namespace

Graph fibonacci_cube(std::size_t d) {
  require(d >= 1 && d <= 30, "fibonacci_cube needs 1 <= d <= 30");
  std::vector<std::uint32_t> strings;
  // Bit d-1-i of the integer holds coordinate i, so numeric order is
  // lexicographic order of the strings.
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << d); ++s) {
    if ((s & (s >> 1)) == 0) strings.push_back(s);
  }
  std::map<std::uint32_t, Vertex> index;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < strings.size(); ++v) {
    index.emplace(strings[v], static_cast<Vertex>(v));
    std::string label(d, '0');
    for (std::size_t i = 0; i < d; ++i) {
      if ((strings[v] >> (d - 1 - i)) & 1u) label[i] = '1';
    }
    labels.push_back(std::move(label));
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < strings.size(); ++v) {
    for (std::size_t b = 0; b < d; ++b) {
      const std::uint32_t other = strings[v] ^ (std::uint32_t{1} << b);
      auto it = index.find(other);
      if (it != index.end() && it->second > v) {
        edges.emplace_back(static_cast<Vertex>(v), it->second);
      }
    }
  }
  return Graph::from_edges(strings.size(), edges, std::move(labels));
}

Graph hypercube(std::size_t k) {
  require(k <= 20, "hypercube needs k <= 20");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) {
    std::string label(k, '0');
    for (std::size_t b = 0; b < k; ++b) {
      if ((v >> b) & 1u) label[b] = '1';
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (w > v) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
    labels.push_back(std::move(label));
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(std::size_t n) { return complement(empty_graph(n)); }

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) {
      edges.emplace_back(u, static_cast<Vertex>(a + v));
    }
  }
  return Graph::from_edges(a + b, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
  return cartesian_product(path(rows), path(cols));
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "random_tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) {
    const Edge e{0, 1};
    return Graph::from_edges(2, std::span(&e, 1));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> pruefer(n - 2);
  for (auto& x : pruefer) x = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : pruefer) ++degree[x];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex x : pruefer) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return Graph::from_edges(n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  std::vector<Edge> edges;
  auto id = [m](std::size_t u, std::size_t v) {
    return static_cast<Vertex>(u * m + v);
  };
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (auto [a, b] : h.edges()) edges.emplace_back(id(u, a), id(u, b));
  }
  for (auto [a, b] : g.edges()) {
    for (std::size_t v = 0; v < m; ++v) edges.emplace_back(id(a, v), id(b, v));
  }
  return Graph::from_edges(g.order() * m, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

std::vector<std::vector<Vertex>> enumerate_cliques(const Graph& g,
                                                   std::size_t max_size,
                                                   std::size_t cap) {
  std::vector<std::vector<Vertex>> cliques{{}};
  // Depth-first extension by larger vertex ids adjacent to every member.
  std::vector<Vertex> current;
  auto extend = [&](auto&& self, Vertex from) -> void {
    if (current.size() == max_size) return;
    for (Vertex v = from; v < g.order(); ++v) {
      bool ok = std::all_of(current.begin(), current.end(),
                            [&](Vertex u) { return g.adjacent(u, v); });
      if (!ok) continue;
      current.push_back(v);
      if (cliques.size() >= cap) {
        throw ResourceError("more than " + std::to_string(cap) +
                            " cliques; use the 2-simplex graph instead");
      }
      cliques.push_back(current);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return cliques;
}

Graph simplex_graph(const Graph& g, std::size_t cap) {
  return clique_graph(enumerate_cliques(g, g.order(), cap));
}

Graph two_simplex_graph(const Graph& g) {
  return clique_graph(
      enumerate_cliques(g, 2, std::numeric_limits<std::size_t>::max()));
}

Tsp12Instance tsp12_instance(const Graph& g) {
  require(g.order() >= 2, "a (1,2)-TSP instance needs at least 2 points");
  Tsp12Instance t;
  t.n = g.order();
  t.dist.assign(t.n * t.n, 0);
  for (Vertex u = 0; u < t.n; ++u) {
    for (Vertex v = 0; v < t.n; ++v) {
      if (u != v) t.dist[u * t.n + v] = g.adjacent(u, v) ? 1 : 2;
    }
  }
  return t;
}

std::string format_tsp12(const Tsp12Instance& instance) {
  std::string out = std::to_string(instance.n) + "\n";
  for (std::size_t u = 0; u < instance.n; ++u) {
    for (std::size_t v = 0; v < instance.n; ++v) {
      if (v > 0) out += ' ';
      out += std::to_string(int{instance(u, v)});
    }
    out += '\n';
  }
  return out;
}

Graph hardness_instance(const Graph& g) {
  return two_simplex_graph(complement(g));
}

}  // namespace fibdim
