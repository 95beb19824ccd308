#pragma once

// Shared fixtures: exhaustive small split graphs, seeded random families and
// naive reference implementations used to cross-check the fast paths.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "splitpeb/generators.hpp"
#include "splitpeb/graph.hpp"
#include "splitpeb/recognition.hpp"

namespace splitpeb::test_support {

/// Every connected split graph with clique {0..k-1} (1 <= k <= max_k) and up to
/// max_s cones k, k+1, ..., whose neighborhood bitmasks are nondecreasing.
/// Isomorphic copies remain; cone order only is quotiented out.
inline std::vector<SplitGraph> sweep_graphs(int max_k, int max_s) {
  std::vector<SplitGraph> out;
  for (int k = 1; k <= max_k; ++k) {
    for (int s = 0; s <= max_s; ++s) {
      const int full = (1 << k) - 1;
      std::vector<int> masks(s, 1);
      std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i == s) {
          auto edges = detail::clique_edges(k);
          for (int j = 0; j < s; ++j) {
            for (int x = 0; x < k; ++x) {
              if (masks[j] >> x & 1) edges.emplace_back(x, k + j);
            }
          }
          out.push_back(validate_split(k + s, detail::iota_ids(k), edges));
          return;
        }
        for (int m = lo; m <= full; ++m) {
          masks[i] = m;
          rec(i + 1, m);
        }
      };
      rec(0, 1);
    }
  }
  return out;
}

/// `count` random split graphs with 2 <= n <= max_n, deterministic in seed.
inline std::vector<SplitGraph> random_graphs(int count, int max_n, std::uint64_t seed, int min_cone_degree = 1) {
  SplitMix64 rng(seed);
  std::vector<SplitGraph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const double p = 0.2 + 0.7 * rng.uniform();
    auto g = gen_random_split(k, n - k, p, rng());
    bool ok = true;
    for (VertexId v : g.independent()) ok = ok && g.degree(v) >= min_cone_degree;
    if (ok) out.push_back(std::move(g));
  }
  return out;
}

/// Pyramid search by brute force over triples of degree-2 cones whose
/// neighbors are all non-cut; optionally requiring `r` among them.
inline bool naive_pereyra(const SplitGraph& g_in, std::optional<VertexId> r = std::nullopt) {
  PreparedGraph pg(g_in);
  const auto& g = pg.graph();
  std::vector<VertexId> w;
  for (VertexId v : g.independent()) {
    if (in_W(pg, v)) w.push_back(v);
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      for (std::size_t l = j + 1; l < w.size(); ++l) {
        if (r && *r != w[i] && *r != w[j] && *r != w[l]) continue;
        std::vector<VertexId> base;
        for (VertexId v : {w[i], w[j], w[l]}) {
          for (VertexId x : g.neighbors(v)) base.push_back(x);
        }
        std::sort(base.begin(), base.end());
        // Three distinct 2-sets over a 3-set: every base vertex appears twice.
        if (base.size() == 6 && base[0] == base[1] && base[2] == base[3] && base[4] == base[5] &&
            base[1] != base[2] && base[3] != base[4]) {
          const auto n0 = g.neighbors(w[i]);
          const auto n1 = g.neighbors(w[j]);
          const auto n2 = g.neighbors(w[l]);
          if (!std::equal(n0.begin(), n0.end(), n1.begin()) && !std::equal(n0.begin(), n0.end(), n2.begin()) &&
              !std::equal(n1.begin(), n1.end(), n2.begin())) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

/// Smallest d_u + d_v over a degree-2 cone u and a cone v of degree <= 3 with
/// disjoint neighborhoods, by scanning all pairs.
inline std::optional<int> naive_disjoint_degree_sum(const SplitGraph& g_in) {
  const SplitGraph g = canonicalize(g_in);
  std::optional<int> best;
  for (VertexId u : g.independent()) {
    if (g.degree(u) != 2) continue;
    for (VertexId v : g.independent()) {
      if (v == u || g.degree(v) > 3) continue;
      bool disjoint = true;
      for (VertexId x : g.neighbors(u)) disjoint = disjoint && !g.adjacent(x, v);
      if (disjoint && (!best || g.degree(u) + g.degree(v) < *best)) best = g.degree(u) + g.degree(v);
    }
  }
  return best;
}

}  // namespace splitpeb::test_support
