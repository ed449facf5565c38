#include "fibdim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <string>

#include "fibdim/bitstring.hpp"
#include "fibdim/error.hpp"

namespace fibdim {

std::string to_string(const BitString& bits) {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i] = '1';
  }
  return out;
}

BitString bits_from_string(std::string_view text) {
  BitString bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits.set(i);
    } else if (text[i] != '0') {
      throw ValidationError("bit string contains '" + std::string(1, text[i]) +
                            "' at position " + std::to_string(i));
    }
  }
  return bits;
}

bool is_fibonacci_string(const BitString& bits) {
  return !(bits & (bits >> 1)).any();
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw ValidationError("label count " + std::to_string(labels.size()) +
                          " does not match vertex count " + std::to_string(n));
  }
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) {
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    if (u >= n || v >= n) {
      throw ValidationError("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") out of range");
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice += nbrs.size();
  }
  g.edge_count_ = twice / 2;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::name(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::uint32_t DistMatrix::diameter() const {
  std::uint32_t best = 0;
  for (auto d : d_) {
    if (d == kUnreachable) return kUnreachable;
    best = std::max(best, d);
  }
  return best;
}

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (is_blank(line)) continue;
    auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') continue;

    Vertex ids[2];
    std::size_t pos = first;
    for (int t = 0; t < 2; ++t) {
      pos = line.find_first_not_of(" \t", pos);
      if (pos == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": expected two vertex ids",
                         line_no);
      }
      auto end = line.find_first_of(" \t\r", pos);
      if (end == std::string_view::npos) end = line.size();
      auto token = line.substr(pos, end - pos);
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), ids[t]);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": malformed vertex id '" + std::string(token) +
                             "'",
                         line_no);
      }
      pos = end;
    }
    if (!is_blank(line.substr(pos))) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": trailing characters after edge",
                       line_no);
    }
    if (ids[0] == ids[1]) {
      throw ParseError("line " + std::to_string(line_no) + ": self-loop at " +
                           std::to_string(ids[0]),
                       line_no);
    }
    n = std::max<std::size_t>(n, std::max(ids[0], ids[1]) + std::size_t{1});
    edges.emplace_back(ids[0], ids[1]);
  }
  return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.order(), DistMatrix::kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == DistMatrix::kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistMatrix distance_matrix(const Graph& g) {
  DistMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), &d.at(s, 0));
  }
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) {
    return d == DistMatrix::kUnreachable;
  });
}

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  constexpr std::uint8_t kNone = 2;
  std::vector<std::uint8_t> color(g.order(), kNone);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != kNone) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == kNone) {
          color[w] = color[u] ^ 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

}  // namespace fibdim
