#include "fibdim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fibdim/error.hpp"

namespace fibdim::oracle {

namespace {

void require_cap(bool ok, const std::string& what) {
  if (!ok) throw ResourceError(what);
}

// Assigns k-bit masks to vertices so that popcount distances equal graph
// distances. Vertices are placed in BFS order; each non-root vertex is one
// bit flip away from its BFS parent.
class MaskEmbedder {
 public:
  MaskEmbedder(const Graph& g, const DistMatrix& d, std::size_t bits,
               bool fibonacci, bool fix_root)
      : g_(g), d_(d), bits_(bits), fibonacci_(fibonacci), fix_root_(fix_root) {
    std::vector<bool> seen(g.order(), false);
    order_.push_back(0);
    parent_.assign(g.order(), 0);
    seen[0] = true;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      for (Vertex w : g.neighbors(order_[head])) {
        if (!seen[w]) {
          seen[w] = true;
          parent_[w] = order_[head];
          order_.push_back(w);
        }
      }
    }
    label_.assign(g.order(), 0);
    used_.assign(std::size_t{1} << bits_, false);
  }

  bool run() { return place(0); }

 private:
  bool admissible(std::uint32_t mask) const {
    return !fibonacci_ || (mask & (mask >> 1)) == 0;
  }

  bool try_mask(std::size_t idx, std::uint32_t mask) {
    if (used_[mask] || !admissible(mask)) return false;
    const Vertex v = order_[idx];
    for (std::size_t t = 0; t < idx; ++t) {
      const Vertex w = order_[t];
      if (static_cast<std::uint32_t>(std::popcount(mask ^ label_[w])) !=
          d_(v, w)) {
        return false;
      }
    }
    used_[mask] = true;
    label_[v] = mask;
    const bool ok = place(idx + 1);
    used_[mask] = false;
    return ok;
  }

  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    if (idx == 0) {
      if (fix_root_) return try_mask(0, 0);
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits_); ++mask) {
        if (try_mask(0, mask)) return true;
      }
      return false;
    }
    const std::uint32_t base = label_[parent_[order_[idx]]];
    for (std::size_t b = 0; b < bits_; ++b) {
      if (try_mask(idx, base ^ (std::uint32_t{1} << b))) return true;
    }
    return false;
  }

  const Graph& g_;
  const DistMatrix& d_;
  std::size_t bits_;
  bool fibonacci_;
  bool fix_root_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> label_;
  std::vector<bool> used_;
};

std::optional<std::size_t> smallest_dimension(const Graph& g,
                                              std::size_t max_dim,
                                              bool fibonacci) {
  require_cap(g.order() <= kMaxBruteForceVertices,
              "brute force limited to " +
                  std::to_string(kMaxBruteForceVertices) + " vertices");
  require_cap(max_dim <= kMaxBruteForceDimension,
              "brute force limited to dimension " +
                  std::to_string(kMaxBruteForceDimension));
  if (g.order() == 0) return std::nullopt;
  const DistMatrix d = distance_matrix(g);
  const auto diameter = d.diameter();
  if (diameter == DistMatrix::kUnreachable) return std::nullopt;

  // Any embedding needs at least `diameter` coordinates and enough strings.
  for (std::size_t dim = diameter; dim <= max_dim; ++dim) {
    std::size_t count = 0;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << dim); ++m) {
      if (!fibonacci || (m & (m >> 1)) == 0) ++count;
    }
    if (count < g.order()) continue;
    // Hypercubes are vertex-transitive, so the root may sit at 0...0.
    if (MaskEmbedder(g, d, dim, fibonacci, !fibonacci).run()) return dim;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> brute_force_fdim(const Graph& g, std::size_t f_max) {
  return smallest_dimension(g, f_max, true);
}

std::optional<std::size_t> brute_force_idim(const Graph& g, std::size_t k_max) {
  return smallest_dimension(g, k_max, false);
}

std::size_t brute_force_path_cover(const XGraph& x) {
  const std::size_t k = x.k;
  require_cap(k <= 9, "brute-force path cover limited to k <= 9");
  if (k == 0) return 0;

  std::size_t best = k;
  std::vector<bool> used(k, false);
  // Extends a sequence of semicubes one pair at a time; a new path starts
  // whenever the next node is not adjacent to the previous one.
  auto extend = [&](auto&& self, std::size_t placed, std::size_t last,
                    std::size_t paths) -> void {
    if (best == 1) return;
    if (placed == k) {
      best = std::min(best, paths);
      return;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j]) continue;
      used[j] = true;
      for (std::size_t chi = 0; chi < 2; ++chi) {
        const std::size_t node = 2 * j + chi;
        const bool joins = placed > 0 && x.graph.adjacent(last, node);
        const std::size_t next = paths + (joins ? 0 : 1);
        if (next < best) self(self, placed + 1, node, next);
      }
      used[j] = false;
    }
  };
  extend(extend, 0, 0, 0);
  return best;
}

std::size_t brute_force_matching_size(const Graph& g) {
  require_cap(g.order() <= 16, "brute-force matching limited to 16 vertices");
  std::vector<bool> matched(g.order(), false);
  auto solve = [&](auto&& self, Vertex from) -> std::size_t {
    while (from < g.order() && matched[from]) ++from;
    if (from >= g.order()) return 0;
    matched[from] = true;
    std::size_t best = self(self, from + 1);  // leave `from` exposed
    for (Vertex w : g.neighbors(from)) {
      if (matched[w]) continue;
      matched[w] = true;
      best = std::max(best, 1 + self(self, from + 1));
      matched[w] = false;
    }
    matched[from] = false;
    return best;
  };
  return solve(solve, 0);
}

bool has_hamiltonian_path(const Graph& g) {
  const std::size_t n = g.order();
  require_cap(n <= 20, "Hamiltonian path search limited to 20 vertices");
  if (n <= 1) return true;
  // ends[S] = vertices at which some path covering exactly S can end.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (std::size_t v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) nbr[v] |= 1u << w;
  }
  for (std::size_t set = 1; set < ends.size(); ++set) {
    if (std::popcount(set) < 2) continue;
    std::uint32_t reach = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!((set >> v) & 1u)) continue;
      if (ends[set & ~(std::size_t{1} << v)] & nbr[v]) reach |= 1u << v;
    }
    ends[set] = reach;
  }
  return ends.back() != 0;
}

std::size_t tsp12_optimal(const Tsp12Instance& t) {
  const std::size_t n = t.n;
  require_cap(n <= 16, "Held-Karp limited to 16 points");
  if (n <= 1) return 0;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 2;
  const std::size_t subsets = std::size_t{1} << n;
  // cost[S][v]: shortest path from 0 through exactly S, ending at v.
  std::vector<std::size_t> cost(subsets * n, kInf);
  cost[1 * n + 0] = 0;
  for (std::size_t set = 1; set < subsets; set += 2) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t here = cost[set * n + v];
      if (here == kInf) continue;
      for (std::size_t w = 1; w < n; ++w) {
        if ((set >> w) & 1u) continue;
        auto& there = cost[(set | (std::size_t{1} << w)) * n + w];
        there = std::min(there, here + t(v, w));
      }
    }
  }
  std::size_t best = kInf;
  for (std::size_t v = 1; v < n; ++v) {
    best = std::min(best, cost[(subsets - 1) * n + v] + t(v, 0));
  }
  return best;
}

bool is_median_graph(const Graph& g) {
  const std::size_t n = g.order();
  require_cap(n <= 200, "median check limited to 200 vertices");
  if (n == 0 || !is_connected(g)) return false;
  const DistMatrix d = distance_matrix(g);
  auto between = [&](std::size_t a, std::size_t m, std::size_t b) {
    return d(a, m) + d(m, b) == d(a, b);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t c = b; c < n; ++c) {
        std::size_t medians = 0;
        for (std::size_t m = 0; m < n && medians < 2; ++m) {
          if (between(a, m, b) && between(b, m, c) && between(a, m, c)) {
            ++medians;
          }
        }
        if (medians != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace fibdim::oracle
