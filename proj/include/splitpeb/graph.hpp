#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "splitpeb/error.hpp"

namespace splitpeb {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

/// Connected simple graph together with a partition of its vertices into a
/// clique K and an independent set S. Immutable once built; obtain one via
/// validate_split() or canonical_partition().
class SplitGraph {
 public:
  SplitGraph() = default;

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return adj_.size() / 2; }

  /// Sorted ascending.
  [[nodiscard]] const std::vector<VertexId>& clique() const { return clique_; }
  /// Sorted ascending; the cone vertices.
  [[nodiscard]] const std::vector<VertexId>& independent() const { return independent_; }

  [[nodiscard]] bool in_clique(VertexId v) const { return in_clique_[v] != 0; }
  [[nodiscard]] bool is_cone(VertexId v) const { return in_clique_[v] == 0; }

  /// Sorted ascending.
  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  [[nodiscard]] int degree(VertexId v) const { return offset_[v + 1] - offset_[v]; }

  [[nodiscard]] bool adjacent(VertexId u, VertexId v) const {
    auto nb = neighbors(degree(u) <= degree(v) ? u : v);
    VertexId other = degree(u) <= degree(v) ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
  }

  /// Each edge once, as (u, v) with u < v, in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// True when the clique side is the canonical one chosen by canonical_partition().
  [[nodiscard]] bool is_canonical() const { return canonical_; }

  [[nodiscard]] bool valid_vertex(VertexId v) const { return v >= 0 && v < n_; }

  // Builds from already-checked parts. Callers must have validated the input.
  static SplitGraph from_checked(int n, std::vector<VertexId> clique,
                                 const std::vector<Edge>& edges, bool canonical) {
    SplitGraph g;
    g.n_ = n;
    g.canonical_ = canonical;
    g.in_clique_.assign(n, 0);
    std::sort(clique.begin(), clique.end());
    for (VertexId v : clique) g.in_clique_[v] = 1;
    g.clique_ = std::move(clique);
    for (VertexId v = 0; v < n; ++v) {
      if (!g.in_clique_[v]) g.independent_.push_back(v);
    }
    std::vector<int> deg(n + 1, 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    g.offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.offset_[v + 1] = g.offset_[v] + deg[v];
    g.adj_.resize(static_cast<std::size_t>(g.offset_[n]));
    std::vector<int> fill(g.offset_.begin(), g.offset_.end() - 1);
    for (auto [u, v] : edges) {
      g.adj_[fill[u]++] = v;
      g.adj_[fill[v]++] = u;
    }
    for (VertexId v = 0; v < n; ++v) {
      std::sort(g.adj_.begin() + g.offset_[v], g.adj_.begin() + g.offset_[v + 1]);
    }
    return g;
  }

 private:
  int n_ = 0;
  bool canonical_ = false;
  std::vector<VertexId> clique_;
  std::vector<VertexId> independent_;
  std::vector<std::uint8_t> in_clique_;
  std::vector<int> offset_{0};
  std::vector<VertexId> adj_;
};

/// Cut vertices (articulation points) of a connected graph.
struct CutVertexInfo {
  std::vector<VertexId> cut_set;  // sorted
  int ct = 0;
};

struct DistanceInfo {
  std::vector<int> dist;
  int ecc = 0;
};

namespace detail {

inline std::vector<Edge> normalized_edges(int n, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::BadEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::BadEdge, "self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(ErrorCode::BadEdge, "duplicate edge (" + std::to_string(dup->first) + "," +
                                        std::to_string(dup->second) + ")");
  }
  return edges;
}

inline std::vector<std::vector<VertexId>> adjacency_lists(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

inline bool is_connected(const std::vector<std::vector<VertexId>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

}  // namespace detail

/// Checks that `clique` and its complement form a split partition of the
/// connected graph given by `edges`.
inline SplitGraph validate_split(int n, std::vector<VertexId> clique, std::vector<Edge> edges) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "graph must have at least one vertex");
  edges = detail::normalized_edges(n, std::move(edges));
  std::vector<char> in_k(n, 0);
  for (VertexId v : clique) {
    if (v < 0 || v >= n) throw Error(ErrorCode::BadEdge, "clique vertex " + std::to_string(v) + " out of range");
    if (in_k[v]) throw Error(ErrorCode::BadEdge, "clique vertex " + std::to_string(v) + " listed twice");
    in_k[v] = 1;
  }
  std::vector<int> k_degree(n, 0);
  for (auto [u, v] : edges) {
    if (!in_k[u] && !in_k[v]) {
      throw Error(ErrorCode::NotIndependent,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") inside the independent set");
    }
    if (in_k[u] && in_k[v]) {
      ++k_degree[u];
      ++k_degree[v];
    }
  }
  const int k = static_cast<int>(clique.size());
  for (VertexId v : clique) {
    if (k_degree[v] != k - 1) {
      throw Error(ErrorCode::NotAClique, "clique vertex " + std::to_string(v) + " misses a clique neighbor");
    }
  }
  if (!detail::is_connected(detail::adjacency_lists(n, edges))) {
    throw Error(ErrorCode::Disconnected, "graph is not connected");
  }
  return SplitGraph::from_checked(n, std::move(clique), edges, false);
}

/// Finds the split partition with the largest clique side, breaking ties by
/// the lexicographically smallest sorted clique.
inline SplitGraph canonical_partition(int n, std::vector<Edge> edges) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "graph must have at least one vertex");
  edges = detail::normalized_edges(n, std::move(edges));
  auto adj = detail::adjacency_lists(n, edges);
  if (!detail::is_connected(adj)) throw Error(ErrorCode::Disconnected, "graph is not connected");

  // Hammer-Simeone degree-sequence test.
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return adj[a].size() > adj[b].size(); });
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adj[order[i]].size()) >= i) m = i + 1;
  }
  std::int64_t head = 0;
  std::int64_t tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += static_cast<std::int64_t>(adj[order[i]].size());
  if (head != static_cast<std::int64_t>(m) * (m - 1) + tail) {
    throw Error(ErrorCode::NotSplit, "degree sequence fails the split criterion");
  }

  std::vector<VertexId> clique(order.begin(), order.begin() + m);
  std::sort(clique.begin(), clique.end());
  std::vector<char> in_k(n, 0);
  for (VertexId v : clique) in_k[v] = 1;

  // Other maximum cliques are K - x + v for a cone v with N(v) = K - x,
  // valid only when x has no neighbor outside K.
  std::vector<VertexId> best = clique;
  for (VertexId v = 0; v < n; ++v) {
    if (in_k[v] || static_cast<int>(adj[v].size()) != m - 1) continue;
    VertexId missing = -1;
    std::size_t j = 0;
    for (VertexId x : clique) {
      if (j < adj[v].size() && adj[v][j] == x) {
        ++j;
      } else {
        missing = x;
        break;
      }
    }
    if (missing < 0 || static_cast<int>(adj[missing].size()) != m - 1) continue;
    std::vector<VertexId> alt;
    alt.reserve(m);
    for (VertexId x : clique) {
      if (x != missing) alt.push_back(x);
    }
    alt.insert(std::upper_bound(alt.begin(), alt.end(), v), v);
    if (alt < best) best = std::move(alt);
  }
  return SplitGraph::from_checked(n, std::move(best), edges, true);
}

/// Same graph, repartitioned canonically. Returns a copy when already canonical.
inline SplitGraph canonicalize(const SplitGraph& g) {
  if (g.is_canonical()) return g;
  return canonical_partition(g.n(), g.edges());
}

inline DistanceInfo distances_from(const SplitGraph& g, VertexId r) {
  if (!g.valid_vertex(r)) throw Error(ErrorCode::InvalidArgument, "root " + std::to_string(r) + " out of range");
  DistanceInfo info;
  info.dist.assign(g.n(), -1);
  std::queue<VertexId> queue;
  info.dist[r] = 0;
  queue.push(r);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    info.ecc = std::max(info.ecc, info.dist[u]);
    for (VertexId v : g.neighbors(u)) {
      if (info.dist[v] < 0) {
        info.dist[v] = info.dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return info;
}

inline int diameter(const SplitGraph& g) {
  int d = 0;
  for (VertexId v = 0; v < g.n(); ++v) d = std::max(d, distances_from(g, v).ecc);
  return d;
}

/// Articulation points by an iterative low-link DFS.
inline CutVertexInfo cut_vertices(const SplitGraph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<VertexId> parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  int root_children = 0;
  std::vector<VertexId> stack;
  if (n > 0) {
    disc[0] = low[0] = timer++;
    stack.push_back(0);
  }
  while (!stack.empty()) {
    VertexId u = stack.back();
    auto nb = g.neighbors(u);
    if (next[u] < nb.size()) {
      VertexId v = nb[next[u]++];
      if (disc[v] < 0) {
        parent[v] = u;
        disc[v] = low[v] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(v);
      } else if (v != parent[u]) {
        low[u] = std::min(low[u], disc[v]);
      }
      continue;
    }
    stack.pop_back();
    VertexId p = parent[u];
    if (p >= 0) {
      low[p] = std::min(low[p], low[u]);
      if (p != 0 && low[u] >= disc[p]) is_cut[p] = 1;
    }
  }
  if (root_children > 1) is_cut[0] = 1;
  CutVertexInfo info;
  for (VertexId v = 0; v < n; ++v) {
    if (is_cut[v]) info.cut_set.push_back(v);
  }
  info.ct = static_cast<int>(info.cut_set.size());
  return info;
}

/// Cut vertices read off the leaves: the unique neighbors of degree-1
/// vertices. Agrees with cut_vertices() on split graphs with n >= 3.
inline std::vector<VertexId> leaf_neighbor_cut_set(const SplitGraph& g) {
  std::vector<VertexId> out;
  if (g.n() < 3) return out;
  std::vector<char> mark(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 1) mark[g.neighbors(v)[0]] = 1;
  }
  for (VertexId v = 0; v < g.n(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

}  // namespace splitpeb
