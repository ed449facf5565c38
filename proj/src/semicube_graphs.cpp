#include "fibdim/semicube_graphs.hpp"

#include "fibdim/error.hpp"

namespace fibdim {

std::string to_string(SemicubeRef s) {
  return "W(" + std::to_string(s.i) + "," + std::to_string(int{s.chi}) + ")";
}

std::size_t DenseGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> DenseGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    for (auto b = rows_[a].find_next(a); b != BitString::npos;
         b = rows_[a].find_next(b)) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

Graph DenseGraph::to_graph() const {
  std::vector<Edge> edges;
  for (auto [a, b] : this->edges()) {
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Graph::from_edges(order(), edges);
}

XGraph XGraph::from_edges(
    std::size_t k,
    std::span<const std::pair<SemicubeRef, SemicubeRef>> edges) {
  XGraph x{k, DenseGraph(2 * k)};
  for (auto [a, b] : edges) {
    if (a.i >= k || b.i >= k) {
      throw ValidationError("semicube index out of range");
    }
    if (a.i == b.i) {
      throw ValidationError("X edge inside complementary pair " +
                            std::to_string(a.i));
    }
    x.graph.add_edge(a.node(), b.node());
  }
  return x;
}

SemicubeFamily::SemicubeFamily(const HypercubeEmbedding& emb)
    : n_(emb.label.size()), members_(2 * emb.k, BitString(emb.label.size())) {
  for (std::size_t v = 0; v < n_; ++v) {
    for (std::size_t i = 0; i < emb.k; ++i) {
      members_[2 * i + (emb.label[v][i] ? 1 : 0)].set(v);
    }
  }
}

XGraph build_X(const HypercubeEmbedding& emb) {
  const std::size_t k = emb.k;
  XGraph x{k, DenseGraph(2 * k)};
  for (std::size_t a = 0; a < 2 * k; ++a) {
    for (std::size_t b = a + 1; b < 2 * k; ++b) {
      if (a / 2 != b / 2) x.graph.add_edge(a, b);
    }
  }
  for (const auto& label : emb.label) {
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t a = 2 * i + (label[i] ? 1 : 0);
      for (std::size_t j = i + 1; j < k; ++j) {
        x.graph.remove_edge(a, 2 * j + (label[j] ? 1 : 0));
      }
    }
  }
  return x;
}

XGraph build_X(const Graph&, const HypercubeEmbedding& emb) {
  return build_X(emb);
}

ScGraph build_Sc(const HypercubeEmbedding& emb) {
  const SemicubeFamily family(emb);
  const std::size_t k = emb.k;
  ScGraph sc{k, DenseGraph(2 * k)};
  for (std::size_t a = 0; a < 2 * k; ++a) {
    for (std::size_t b = a + 1; b < 2 * k; ++b) {
      if (a / 2 == b / 2) continue;
      const auto& wa = family.members(a);
      const auto& wb = family.members(b);
      if ((wa | wb).all() && wa.intersects(wb)) sc.graph.add_edge(a, b);
    }
  }
  return sc;
}

ScGraph build_Sc(const Graph&, const HypercubeEmbedding& emb) {
  return build_Sc(emb);
}

YGraph build_Y(const XGraph& x) {
  YGraph y{DenseGraph(x.k)};
  for (auto [a, b] : x.graph.edges()) y.graph.add_edge(a / 2, b / 2);
  return y;
}

Graph crossing_graph(const HypercubeEmbedding& emb) {
  const SemicubeFamily family(emb);
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < emb.k; ++i) {
    for (std::uint32_t j = i + 1; j < emb.k; ++j) {
      bool crossing = true;
      for (std::uint8_t a = 0; a < 2 && crossing; ++a) {
        for (std::uint8_t b = 0; b < 2 && crossing; ++b) {
          crossing = family.members(SemicubeRef{i, a})
                         .intersects(family.members(SemicubeRef{j, b}));
        }
      }
      if (crossing) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(emb.k, edges);
}

Graph crossing_graph(const Graph&, const HypercubeEmbedding& emb) {
  return crossing_graph(emb);
}

}  // namespace fibdim
