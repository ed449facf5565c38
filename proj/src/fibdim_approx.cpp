#include "fibdim/fibdim_approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fibdim/constructions.hpp"
#include "fibdim/error.hpp"

namespace fibdim {

namespace {

void certify(const Graph& g, const DistMatrix& d,
             const FibonacciEmbedding& emb, const char* who) {
  if (!verify_fibonacci(g, d, emb)) {
    throw VerificationError(std::string(who) + " embedding failed certification");
  }
}

}  // namespace

std::size_t ldim(const Graph& g) {
  const auto emb = canonical_embedding(g);
  const auto sc = build_Sc(emb);
  return emb.k - max_matching(sc.graph.to_graph()).size();
}

DimBounds fdim_bounds(const Graph& g) {
  const auto emb = canonical_embedding(g);
  const std::size_t k = emb.k;
  const std::size_t l = k - max_matching(build_Sc(emb).graph.to_graph()).size();
  if (k == 0) return {0, 0};
  return {std::max(k, 2 * l - 1), k + l - 1};
}

ApproxResult fdim_approx_3_2(const Graph& g) {
  const DistMatrix d = distance_matrix(g);
  ApproxResult result;
  result.hypercube = canonical_embedding(g, d);
  const std::size_t k = result.idim = result.hypercube.k;
  const XGraph x = build_X(result.hypercube);
  const YGraph y = build_Y(x);
  const Matching m = max_matching(y.graph.to_graph());
  result.matching_size = m.size();

  std::vector<std::size_t> mate(k, k);
  for (auto [a, b] : m.edges) {
    mate[a] = b;
    mate[b] = a;
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    if (mate[i] == k) {
      result.paths.paths.push_back({SemicubeRef{i, 0}});
      continue;
    }
    if (mate[i] < i) continue;
    // Lift the Y edge to the first X edge between the two pairs.
    const auto j = static_cast<std::uint32_t>(mate[i]);
    bool lifted = false;
    for (std::uint8_t a = 0; a < 2 && !lifted; ++a) {
      for (std::uint8_t b = 0; b < 2 && !lifted; ++b) {
        if (x.adjacent({i, a}, {j, b})) {
          result.paths.paths.push_back({SemicubeRef{i, a}, SemicubeRef{j, b}});
          lifted = true;
        }
      }
    }
  }
  result.embedding = embed_from_paths(result.hypercube, result.paths);
  certify(g, d, result.embedding, "3/2-approximation");
  return result;
}

bool is_grid(const Graph& g, std::size_t a, std::size_t b) {
  const std::size_t n = g.order();
  if (n != (a + 1) * (b + 1) || g.size() != a * (b + 1) + b * (a + 1)) {
    return false;
  }
  if (!is_connected(g)) return false;
  const DistMatrix d = distance_matrix(g);
  const std::size_t corner_degree = (a > 0) + (b > 0);

  // With corner c = (0,0) and x = (a,0): d(c,v) = i + j, d(x,v) = a - i + j.
  std::vector<std::size_t> cell(n);
  std::vector<bool> taken(n);
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != corner_degree) continue;
    for (Vertex x = 0; x < n; ++x) {
      if (d(c, x) != a) continue;
      std::fill(taken.begin(), taken.end(), false);
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) {
        const long sum = static_cast<long>(d(c, v));
        const long diff = static_cast<long>(d(x, v));
        const long twice_i = sum - diff + static_cast<long>(a);
        const long twice_j = sum + diff - static_cast<long>(a);
        if (twice_i < 0 || twice_j < 0 || twice_i % 2 != 0 || twice_j % 2 != 0) {
          ok = false;
          break;
        }
        const auto i = static_cast<std::size_t>(twice_i / 2);
        const auto j = static_cast<std::size_t>(twice_j / 2);
        if (i > a || j > b || taken[i * (b + 1) + j]) {
          ok = false;
          break;
        }
        taken[i * (b + 1) + j] = true;
        cell[v] = i * (b + 1) + j;
      }
      if (!ok) continue;
      for (auto [u, v] : g.edges()) {
        const std::size_t cu = cell[u], cv = cell[v];
        const std::size_t lo = std::min(cu, cv), hi = std::max(cu, cv);
        const bool step_j = hi - lo == 1 && hi % (b + 1) != 0;
        const bool step_i = hi - lo == b + 1;
        if (!step_i && !step_j) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

std::size_t fdim_ldim2(const Graph& g) {
  const std::size_t l = ldim(g);
  if (l != 2) {
    throw ValidationError("fdim_ldim2 needs ldim = 2, got " + std::to_string(l));
  }
  const std::size_t k = idim(g);
  for (std::size_t a = 1; a <= k / 2; ++a) {
    if (is_grid(g, a, k - a)) return k + 1;
  }
  return k;
}

CoordinatingPathSystem greedy_path_system(const XGraph& x,
                                          std::span<const SemicubeRef> allowed) {
  std::vector<bool> seen(x.k, false);
  for (auto s : allowed) {
    if (s.i >= x.k || seen[s.i]) {
      throw ValidationError("allowed nodes must pick exactly one semicube per pair");
    }
    seen[s.i] = true;
  }
  if (allowed.size() != x.k) {
    throw ValidationError("allowed nodes must pick exactly one semicube per pair");
  }

  std::vector<std::vector<SemicubeRef>> paths;
  for (auto s : allowed) paths.push_back({s});

  auto try_join = [&](std::size_t p, std::size_t q) {
    auto& a = paths[p];
    auto& b = paths[q];
    if (x.adjacent(a.back(), b.front())) {
      a.insert(a.end(), b.begin(), b.end());
    } else if (x.adjacent(a.back(), b.back())) {
      a.insert(a.end(), b.rbegin(), b.rend());
    } else if (x.adjacent(a.front(), b.front())) {
      std::reverse(a.begin(), a.end());
      a.insert(a.end(), b.begin(), b.end());
    } else if (x.adjacent(a.front(), b.back())) {
      b.insert(b.end(), a.begin(), a.end());
      a = std::move(b);
    } else {
      return false;
    }
    paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(q));
    return true;
  };

  bool joined = true;
  while (joined) {
    joined = false;
    for (std::size_t p = 0; p < paths.size() && !joined; ++p) {
      for (std::size_t q = p + 1; q < paths.size() && !joined; ++q) {
        joined = try_join(p, q);
      }
    }
  }
  return CoordinatingPathSystem{std::move(paths)};
}

ApproxResult fdim_simplex_eps(const Graph& h, const Graph& g, double eps,
                              const ExactOptions& options) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ValidationError("epsilon must lie in (0, 1)");
  }
  const DistMatrix d = distance_matrix(h);
  ApproxResult result;
  result.hypercube = canonical_embedding(h, d);
  const std::size_t k = result.idim = result.hypercube.k;
  if (k != g.order()) {
    throw ValidationError("idim(H) = " + std::to_string(k) +
                          " but G has " + std::to_string(g.order()) +
                          " vertices; H is not κ(G)");
  }
  std::size_t clique_count = 0;
  try {
    clique_count = enumerate_cliques(g, g.order(), h.order() + 1).size();
  } catch (const ResourceError&) {
    clique_count = h.order() + 1;
  }
  if (clique_count != h.order()) {
    throw ValidationError("H has " + std::to_string(h.order()) +
                          " vertices but G has " +
                          (clique_count > h.order() ? "more" : std::to_string(clique_count)) +
                          " cliques");
  }

  const XGraph x = build_X(result.hypercube);
  std::vector<SemicubeRef> allowed;
  for (std::uint32_t i = 0; i < k; ++i) {
    // One semicube of each pair is isolated in X(κ(G)); keep the other.
    if (x.graph.degree(2 * i) == 0) {
      allowed.push_back({i, 1});
    } else if (x.graph.degree(2 * i + 1) == 0) {
      allowed.push_back({i, 0});
    } else {
      throw ValidationError("pair " + std::to_string(i) +
                            " has no isolated semicube; H is not κ(G)");
    }
  }
  std::vector<std::size_t> x_degrees;
  std::size_t x_edges = 0;
  for (auto s : allowed) {
    std::size_t deg = 0;
    for (auto t : allowed) deg += x.adjacent(s, t);
    x_degrees.push_back(deg);
    x_edges += deg;
  }
  const Graph gbar = complement(g);
  std::vector<std::size_t> gbar_degrees;
  for (Vertex v = 0; v < gbar.order(); ++v) gbar_degrees.push_back(gbar.degree(v));
  std::sort(x_degrees.begin(), x_degrees.end());
  std::sort(gbar_degrees.begin(), gbar_degrees.end());
  if (x_edges / 2 != gbar.size() || x_degrees != gbar_degrees) {
    throw ValidationError("X(H) minus isolated semicubes does not match the "
                          "complement of G; H is not κ(G)");
  }

  result.paths = greedy_path_system(x, allowed);
  if (static_cast<double>(result.paths.size()) > eps * static_cast<double>(k)) {
    // A large independent set in complement(G) means a large clique in G,
    // hence |V(H)| >= 2^(eps k) and the exact DP is polynomial in |V(H)|.
    result.paths = min_coordinating_paths(x, options);
    result.used_exact = true;
  }
  result.embedding = embed_from_paths(result.hypercube, result.paths);
  certify(h, d, result.embedding, "simplex (1+eps)");
  return result;
}

}  // namespace fibdim
