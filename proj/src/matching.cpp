// Edmonds' blossom algorithm for maximum-cardinality matching in general
// graphs: repeated BFS for augmenting paths from each exposed vertex, with
// odd cycles contracted by relabelling their vertices to a common base.

#include <algorithm>
#include <queue>

#include "fibdim/fibdim_approx.hpp"

namespace fibdim {

namespace {

constexpr int kNone = -1;

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(static_cast<int>(g.order())), match_(n_, kNone),
        parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<int> run() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      for (int v = augmenting_path_end(root); v != kNone;) {
        int pv = parent_[v];
        int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int augmenting_path_end(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) {
        int to = static_cast<int>(w);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
  const auto mate = Blossom(g).run();
  Matching m;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] > v) {
      m.edges.emplace_back(static_cast<std::size_t>(v),
                           static_cast<std::size_t>(mate[v]));
    }
  }
  return m;
}

}  // namespace fibdim
