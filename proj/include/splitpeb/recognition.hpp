#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "splitpeb/graph.hpp"

namespace splitpeb {

/// Canonically partitioned graph with its cut vertices and the per-vertex
/// tallies shared by recognition and the pebbling formulas.
class PreparedGraph {
 public:
  explicit PreparedGraph(const SplitGraph& g) : g_(canonicalize(g)) {
    cuts_ = cut_vertices(g_);
    is_cut_.assign(g_.n(), 0);
    for (VertexId x : cuts_.cut_set) is_cut_[x] = 1;
    cone_neighbors_.assign(g_.n(), 0);
    for (VertexId v : g_.independent()) {
      for (VertexId x : g_.neighbors(v)) ++cone_neighbors_[x];
    }
    auto by_degree = [&](VertexId a, VertexId b) {
      return std::pair(g_.degree(a), a) < std::pair(g_.degree(b), b);
    };
    cones_by_degree_ = g_.independent();
    std::sort(cones_by_degree_.begin(), cones_by_degree_.end(), by_degree);
    clique_by_degree_ = g_.clique();
    std::sort(clique_by_degree_.begin(), clique_by_degree_.end(), by_degree);
  }

  [[nodiscard]] const SplitGraph& graph() const { return g_; }
  [[nodiscard]] const CutVertexInfo& cuts() const { return cuts_; }
  [[nodiscard]] bool is_cut(VertexId v) const { return is_cut_[v] != 0; }
  /// Number of cone vertices adjacent to v.
  [[nodiscard]] int cone_neighbors(VertexId v) const { return cone_neighbors_[v]; }
  /// Cones ordered by (degree, id).
  [[nodiscard]] const std::vector<VertexId>& cones_by_degree() const { return cones_by_degree_; }
  /// Clique vertices ordered by (degree, id).
  [[nodiscard]] const std::vector<VertexId>& clique_by_degree() const { return clique_by_degree_; }

 private:
  SplitGraph g_;
  CutVertexInfo cuts_;
  std::vector<char> is_cut_;
  std::vector<int> cone_neighbors_;
  std::vector<VertexId> cones_by_degree_;
  std::vector<VertexId> clique_by_degree_;
};

/// H(G): one edge N(v) for every degree-2 cone v whose neighbors avoid the
/// cut vertices. Parallel edges are merged; `labels` keeps every such cone.
struct AuxGraphH {
  struct HEdge {
    VertexId a = 0;  // a < b
    VertexId b = 0;
    std::vector<VertexId> labels;  // sorted
  };

  std::vector<VertexId> vertices;  // sorted
  std::vector<HEdge> edges;        // sorted by (a, b)
  std::vector<std::vector<VertexId>> adjacency;  // indexed by graph vertex id, sorted

  [[nodiscard]] const HEdge* find(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair(u, v),
                               [](const HEdge& e, const std::pair<VertexId, VertexId>& key) {
                                 return std::pair(e.a, e.b) < key;
                               });
    return it != edges.end() && it->a == u && it->b == v ? &*it : nullptr;
  }

  [[nodiscard]] bool contains_edge(VertexId u, VertexId v) const { return find(u, v) != nullptr; }
};

/// Three degree-2 cones with N(cones[0]) = {a, b}, N(cones[1]) = {a, c},
/// N(cones[2]) = {b, c}, where base = (a, b, c).
struct PyramidWitness {
  std::array<VertexId, 3> cones{};
  std::array<VertexId, 3> base{};

  friend bool operator==(const PyramidWitness&, const PyramidWitness&) = default;
};

/// True when v is a degree-2 cone whose neighbors are not cut vertices.
inline bool in_W(const PreparedGraph& pg, VertexId v) {
  const auto& g = pg.graph();
  if (!g.is_cone(v) || g.degree(v) != 2) return false;
  auto nb = g.neighbors(v);
  return !pg.is_cut(nb[0]) && !pg.is_cut(nb[1]);
}

inline AuxGraphH build_H(const PreparedGraph& pg) {
  const auto& g = pg.graph();
  AuxGraphH h;
  h.adjacency.resize(g.n());
  for (VertexId v : g.independent()) {
    if (!in_W(pg, v)) continue;
    auto nb = g.neighbors(v);
    h.edges.push_back({nb[0], nb[1], {v}});
  }
  std::sort(h.edges.begin(), h.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b, x.labels[0]) < std::tie(y.a, y.b, y.labels[0]);
  });
  std::vector<AuxGraphH::HEdge> merged;
  for (auto& e : h.edges) {
    if (!merged.empty() && merged.back().a == e.a && merged.back().b == e.b) {
      merged.back().labels.push_back(e.labels[0]);
    } else {
      merged.push_back(std::move(e));
    }
  }
  h.edges = std::move(merged);
  for (const auto& e : h.edges) {
    h.adjacency[e.a].push_back(e.b);
    h.adjacency[e.b].push_back(e.a);
    h.vertices.push_back(e.a);
    h.vertices.push_back(e.b);
  }
  for (auto& row : h.adjacency) std::sort(row.begin(), row.end());
  std::sort(h.vertices.begin(), h.vertices.end());
  h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
  return h;
}

inline AuxGraphH build_H(const SplitGraph& g) { return build_H(PreparedGraph(g)); }

namespace detail {

inline PyramidWitness witness_from_triangle(const AuxGraphH& h, VertexId a, VertexId b, VertexId c) {
  return PyramidWitness{{h.find(a, b)->labels[0], h.find(a, c)->labels[0], h.find(b, c)->labels[0]}, {a, b, c}};
}

}  // namespace detail

/// r-Pereyra test: H has a triangle through the edge N(r).
inline std::optional<PyramidWitness> is_r_pereyra(const PreparedGraph& pg, const AuxGraphH& h, VertexId r) {
  if (!pg.graph().valid_vertex(r)) throw Error(ErrorCode::InvalidArgument, "root " + std::to_string(r) + " out of range");
  if (!in_W(pg, r)) return std::nullopt;
  auto nb = pg.graph().neighbors(r);
  const VertexId a = nb[0];
  const VertexId b = nb[1];
  const auto& na = h.adjacency[a];
  const auto& nb_h = h.adjacency[b];
  // Smallest common H-neighbor of a and b.
  auto ia = na.begin();
  auto ib = nb_h.begin();
  while (ia != na.end() && ib != nb_h.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      const VertexId c = *ia;
      return PyramidWitness{{r, h.find(a, c)->labels[0], h.find(b, c)->labels[0]}, {a, b, c}};
    }
  }
  return std::nullopt;
}

inline std::optional<PyramidWitness> is_r_pereyra(const SplitGraph& g, VertexId r) {
  PreparedGraph pg(g);
  return is_r_pereyra(pg, build_H(pg), r);
}

/// Any triangle of H, found by the degree-ordered edge-iterator method.
inline std::optional<PyramidWitness> is_pereyra(const AuxGraphH& h) {
  const std::size_t n = h.adjacency.size();
  auto before = [&](VertexId u, VertexId v) {
    return std::pair(h.adjacency[u].size(), u) < std::pair(h.adjacency[v].size(), v);
  };
  std::vector<std::vector<VertexId>> forward(n);
  for (const auto& e : h.edges) {
    if (before(e.a, e.b)) {
      forward[e.a].push_back(e.b);
    } else {
      forward[e.b].push_back(e.a);
    }
  }
  std::vector<char> mark(n, 0);
  for (VertexId u : h.vertices) {
    for (VertexId v : forward[u]) mark[v] = 1;
    for (VertexId v : forward[u]) {
      for (VertexId w : forward[v]) {
        if (mark[w]) {
          std::array<VertexId, 3> tri{u, v, w};
          std::sort(tri.begin(), tri.end());
          return detail::witness_from_triangle(h, tri[0], tri[1], tri[2]);
        }
      }
    }
    for (VertexId v : forward[u]) mark[v] = 0;
  }
  return std::nullopt;
}

inline std::optional<PyramidWitness> is_pereyra(const SplitGraph& g) { return is_pereyra(build_H(g)); }

/// Minimum degree among vertices at distance exactly `ecc` from the root.
inline int delta_at_max_distance(const SplitGraph& g, const DistanceInfo& d) {
  int best = -1;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (d.dist[v] == d.ecc && (best < 0 || g.degree(v) < best)) best = g.degree(v);
  }
  return best;
}

inline bool is_r_phoenix(const SplitGraph& g, VertexId r) {
  PreparedGraph pg(g);
  if (!is_r_pereyra(pg, build_H(pg), r)) return false;
  auto d = distances_from(pg.graph(), r);
  return d.ecc == 3 && delta_at_max_distance(pg.graph(), d) >= 4;
}

/// A degree-2 cone r and a cone s of degree at most 3 with disjoint
/// neighborhoods, found by the label-accumulation scan: each processed
/// degree-2 cone is recorded at both of its neighbors, and a later cone whose
/// neighbors carry fewer distinct labels than there are earlier degree-2 cones
/// must miss one of them. Degree-2 partners are tried before degree-3 ones.
/// Requires a graph without cut vertices.
inline std::optional<std::pair<VertexId, VertexId>> find_disjoint_small_cones(const PreparedGraph& pg) {
  const auto& g = pg.graph();
  if (pg.cuts().ct > 0) {
    throw Error(ErrorCode::PreconditionViolated, "graph has " + std::to_string(pg.cuts().ct) + " cut vertices");
  }
  std::vector<VertexId> deg2;
  std::vector<VertexId> deg3;
  for (VertexId v : g.independent()) {
    if (g.degree(v) == 2) deg2.push_back(v);
    if (g.degree(v) == 3) deg3.push_back(v);
  }
  const auto n = static_cast<std::uint64_t>(g.n());
  auto pair_key = [n](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(b);
  };
  std::vector<int> label_count(g.n(), 0);  // |lambda(x)|
  std::unordered_map<std::uint64_t, int> pair_count;  // degree-2 cones per neighborhood

  auto disjoint_partner = [&](VertexId s, std::size_t limit) -> std::optional<std::pair<VertexId, VertexId>> {
    auto ns = g.neighbors(s);
    for (std::size_t j = 0; j < limit; ++j) {
      auto nr = g.neighbors(deg2[j]);
      bool hit = false;
      for (VertexId x : nr) hit = hit || std::find(ns.begin(), ns.end(), x) != ns.end();
      if (!hit) return std::pair(deg2[j], s);
    }
    return std::nullopt;
  };

  for (std::size_t i = 0; i < deg2.size(); ++i) {
    auto nb = g.neighbors(deg2[i]);
    ++label_count[nb[0]];
    ++label_count[nb[1]];
    const int same = ++pair_count[pair_key(nb[0], nb[1])];
    const std::size_t labels = static_cast<std::size_t>(label_count[nb[0]] + label_count[nb[1]] - same);
    if (labels < i + 1) return disjoint_partner(deg2[i], i);
  }
  for (VertexId s : deg3) {
    auto nb = g.neighbors(s);
    int labels = label_count[nb[0]] + label_count[nb[1]] + label_count[nb[2]];
    for (int x = 0; x < 3; ++x) {
      for (int y = x + 1; y < 3; ++y) {
        if (auto it = pair_count.find(pair_key(nb[x], nb[y])); it != pair_count.end()) labels -= it->second;
      }
    }
    if (static_cast<std::size_t>(labels) < deg2.size()) return disjoint_partner(s, deg2.size());
  }
  return std::nullopt;
}

inline std::optional<std::pair<VertexId, VertexId>> find_disjoint_small_cones(const SplitGraph& g) {
  return find_disjoint_small_cones(PreparedGraph(g));
}

}  // namespace splitpeb
