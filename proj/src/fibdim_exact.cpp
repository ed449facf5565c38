#include "fibdim/fibdim_exact.hpp"

#include <bit>
#include <cstdint>
#include <new>
#include <string>

#include "fibdim/error.hpp"

namespace fibdim {

namespace {

std::string describe(SemicubeRef s) { return to_string(s); }

// Shared structural checks; `adjacent` decides X-adjacency.
template <typename Adjacent>
void validate_paths(std::size_t k, const CoordinatingPathSystem& system,
                    Adjacent&& adjacent) {
  std::vector<bool> seen(k, false);
  for (std::size_t p = 0; p < system.paths.size(); ++p) {
    const auto& path = system.paths[p];
    if (path.empty()) {
      throw ValidationError("path " + std::to_string(p) + " is empty");
    }
    for (std::size_t t = 0; t < path.size(); ++t) {
      const auto s = path[t];
      if (s.i >= k || s.chi > 1) {
        throw ValidationError(describe(s) + " is not a semicube of this graph");
      }
      if (seen[s.i]) {
        throw ValidationError("pair " + std::to_string(s.i) +
                              " is met more than once");
      }
      seen[s.i] = true;
      if (t > 0 && !adjacent(path[t - 1], s)) {
        throw ValidationError(describe(path[t - 1]) + " and " + describe(s) +
                              " are not adjacent in X(G)");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!seen[i]) {
      throw ValidationError("pair " + std::to_string(i) +
                            " is not met by any path");
    }
  }
}

// Subset DP over pairs of complementary semicubes.
//
// pi(I, j, chi) is the minimum number of paths covering exactly the pairs in
// I with one path ending at W(j, chi). With R = I \ {j}:
//   pi(I, j, chi) = min(1 + best(R), min over X-neighbours n in R of pi(R, n))
// Every pi(R, .) >= best(R), so the minimum is best(R) when some neighbour is
// tight in R and best(R) + 1 otherwise. Storing best(R) and the set of tight
// endpoints per subset is therefore enough to recover every pi value.
class SubsetTable {
 public:
  SubsetTable(std::size_t k, std::vector<std::uint64_t> adj)
      : k_(k), adj_(std::move(adj)) {
    const std::size_t subsets = std::size_t{1} << k_;
    try {
      best_.assign(subsets, 0);
      tight_.assign(subsets, 0);
    } catch (const std::bad_alloc&) {
      throw ResourceError("cannot allocate the subset table for k = " +
                          std::to_string(k_));
    }
    for (std::uint64_t set = 1; set < subsets; ++set) {
      std::uint8_t b = 0xff;
      std::uint64_t t = 0;
      for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
        const unsigned j = std::countr_zero(rest);
        const std::uint64_t r = set & ~(std::uint64_t{1} << j);
        for (unsigned chi = 0; chi < 2; ++chi) {
          const unsigned node = 2 * j + chi;
          const std::uint8_t v = best_[r] + ((tight_[r] & adj_[node]) == 0);
          if (v < b) {
            b = v;
            t = std::uint64_t{1} << node;
          } else if (v == b) {
            t |= std::uint64_t{1} << node;
          }
        }
      }
      best_[set] = b;
      tight_[set] = t;
    }
  }

  std::uint8_t best(std::uint64_t set) const { return best_[set]; }
  std::uint64_t tight(std::uint64_t set) const { return tight_[set]; }

  std::uint8_t pi(std::uint64_t set, unsigned node) const {
    const std::uint64_t r = set & ~(std::uint64_t{1} << (node / 2));
    return best_[r] + ((tight_[r] & adj_[node]) == 0);
  }

  std::uint64_t adj(unsigned node) const { return adj_[node]; }

 private:
  std::size_t k_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint8_t> best_;
  std::vector<std::uint64_t> tight_;
};

std::uint64_t nodes_of(std::uint64_t set) {
  std::uint64_t nodes = 0;
  for (; set != 0; set &= set - 1) {
    nodes |= std::uint64_t{3} << (2 * std::countr_zero(set));
  }
  return nodes;
}

SemicubeRef ref(unsigned node) { return SemicubeRef::from_node(node); }

}  // namespace

void validate_path_system(const XGraph& x,
                          const CoordinatingPathSystem& paths) {
  validate_paths(x.k, paths, [&](SemicubeRef a, SemicubeRef b) {
    return x.adjacent(a, b);
  });
}

void validate_path_system(const HypercubeEmbedding& emb,
                          const CoordinatingPathSystem& paths) {
  const SemicubeFamily family(emb);
  validate_paths(emb.k, paths, [&](SemicubeRef a, SemicubeRef b) {
    return a.i != b.i && !family.members(a).intersects(family.members(b));
  });
}

CoordinatingPathSystem min_coordinating_paths(const XGraph& x,
                                              const ExactOptions& options) {
  const std::size_t k = x.k;
  if (k > options.max_k || k > ExactOptions::kLimitK) {
    throw ResourceError("exact algorithm needs k <= " +
                        std::to_string(std::min(options.max_k,
                                                 ExactOptions::kLimitK)) +
                        " but k = " + std::to_string(k) +
                        "; use the approximation instead");
  }
  CoordinatingPathSystem system;
  if (k == 0) return system;

  std::vector<std::uint64_t> adj(2 * k, 0);
  for (auto [a, b] : x.graph.edges()) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  const SubsetTable table(k, adj);

  // Walk back from the full set, peeling one path end at a time.
  std::uint64_t set = (k == 64) ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << k) - 1;
  unsigned end = std::countr_zero(table.tight(set));
  std::vector<SemicubeRef> current{ref(end)};
  while (true) {
    const std::uint64_t rest = set & ~(std::uint64_t{1} << (end / 2));
    if (rest == 0) break;
    const std::uint8_t value = table.pi(set, end);
    const std::uint64_t candidates = nodes_of(rest);

    unsigned next = 2 * 64;
    for (std::uint64_t c = candidates & table.adj(end); c != 0; c &= c - 1) {
      const unsigned node = std::countr_zero(c);
      if (table.pi(rest, node) == value) {
        next = node;
        break;
      }
    }
    if (next == 2 * 64) {
      system.paths.push_back(std::move(current));
      current.clear();
      for (std::uint64_t c = candidates; c != 0; c &= c - 1) {
        const unsigned node = std::countr_zero(c);
        if (table.pi(rest, node) + 1 == value) {
          next = node;
          break;
        }
      }
    }
    current.push_back(ref(next));
    end = next;
    set = rest;
  }
  system.paths.push_back(std::move(current));
  return system;
}

FibonacciEmbedding embed_from_paths(const HypercubeEmbedding& emb,
                                    const CoordinatingPathSystem& paths) {
  validate_path_system(emb, paths);
  FibonacciEmbedding out;
  out.f = emb.k == 0 ? 0 : emb.k + paths.size() - 1;
  out.label.assign(emb.label.size(), BitString(out.f));
  std::size_t column = 0;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    if (p > 0) ++column;  // separator, constant 0
    for (const auto s : paths.paths[p]) {
      for (std::size_t v = 0; v < emb.label.size(); ++v) {
        if (emb.label[v][s.i] == (s.chi == 1)) out.label[v].set(column);
      }
      ++column;
    }
  }
  return out;
}

ExactResult fdim_exact(const Graph& g, const ExactOptions& options) {
  const DistMatrix d = distance_matrix(g);
  ExactResult result;
  result.hypercube = canonical_embedding(g, d);
  result.idim = result.hypercube.k;
  if (result.idim > options.max_k || result.idim > ExactOptions::kLimitK) {
    throw ResourceError("exact algorithm needs idim <= " +
                        std::to_string(std::min(options.max_k,
                                                 ExactOptions::kLimitK)) +
                        " but idim = " + std::to_string(result.idim) +
                        "; use the approximation instead");
  }
  const XGraph x = build_X(result.hypercube);
  result.paths = min_coordinating_paths(x, options);
  result.embedding = embed_from_paths(result.hypercube, result.paths);
  if (!verify_fibonacci(g, d, result.embedding)) {
    throw VerificationError("exact embedding failed certification");
  }
  return result;
}

FibonacciEmbedding doubling_embedding(const HypercubeEmbedding& emb) {
  FibonacciEmbedding out;
  out.f = emb.k == 0 ? 0 : 2 * emb.k - 1;
  out.label.assign(emb.label.size(), BitString(out.f));
  for (std::size_t v = 0; v < emb.label.size(); ++v) {
    for (std::size_t i = 0; i < emb.k; ++i) {
      if (emb.label[v][i]) out.label[v].set(2 * i);
    }
  }
  return out;
}

FibonacciCheck verify_fibonacci(const Graph& g, const DistMatrix& d,
                                const FibonacciEmbedding& emb) {
  FibonacciCheck check;
  for (const auto& l : emb.label) {
    if (l.size() != emb.f) {
      throw ValidationError("label length " + std::to_string(l.size()) +
                            " differs from dimension " +
                            std::to_string(emb.f));
    }
  }
  auto iso = verify_isometric(g, d, emb.label);
  for (Vertex v = 0; v < emb.label.size(); ++v) {
    if (!is_fibonacci_string(emb.label[v])) {
      check.ok = false;
      check.non_fibonacci = v;
      break;
    }
  }
  if (!iso) {
    check.ok = false;
    check.distance_witness = iso.witness;
  }
  return check;
}

FibonacciCheck verify_fibonacci(const Graph& g, const FibonacciEmbedding& emb) {
  return verify_fibonacci(g, distance_matrix(g), emb);
}

}  // namespace fibdim
