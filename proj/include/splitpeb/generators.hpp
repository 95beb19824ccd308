#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "splitpeb/graph.hpp"

namespace splitpeb {

/// SplitMix64. Same seed, same stream, on every platform; usable as a
/// UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound). Lemire-free modulo; the bias is irrelevant at our sizes.
  std::uint64_t below(std::uint64_t bound) { return (*this)() % bound; }

 private:
  std::uint64_t state_;
};

namespace detail {

inline std::vector<Edge> clique_edges(int k) {
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return edges;
}

inline std::vector<VertexId> iota_ids(int k) {
  std::vector<VertexId> ids(k);
  for (int i = 0; i < k; ++i) ids[i] = i;
  return ids;
}

}  // namespace detail

/// Sun S_n: clique 0..m-1 with leaf m+i on clique vertex i (n = 2m), and for
/// odd n a further leaf n-1 on clique vertex 0.
inline SplitGraph gen_sun(int n) {
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "sun needs n >= 4, got " + std::to_string(n));
  const int m = n / 2;
  auto edges = detail::clique_edges(m);
  for (int i = 0; i < m; ++i) edges.emplace_back(i, m + i);
  if (n % 2 == 1) edges.emplace_back(0, n - 1);
  return validate_split(n, detail::iota_ids(m), std::move(edges));
}

inline SplitGraph gen_complete(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "complete graph needs n >= 1");
  return validate_split(n, detail::iota_ids(n), detail::clique_edges(n));
}

/// Vertex order (r, a, b, c, p, q); clique {a, b, c}.
inline SplitGraph gen_pyramid() {
  return validate_split(6, {1, 2, 3},
                        {{0, 1}, {0, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 3}, {1, 2}, {1, 3}, {2, 3}});
}

/// The 6-cycle (r, a, p, c, q, b) plus `kept_triangle_edges` edges of the
/// triangle (a, b, c). Only the full triangle is a split graph: dropping any
/// triangle edge leaves an induced 4-cycle, so 2 reports NotSplit.
inline SplitGraph gen_near_pyramid(int kept_triangle_edges) {
  if (kept_triangle_edges != 2 && kept_triangle_edges != 3) {
    throw Error(ErrorCode::InvalidArgument, "near-Pyramid keeps 2 or 3 triangle edges");
  }
  std::vector<Edge> edges{{0, 1}, {1, 4}, {4, 3}, {3, 5}, {5, 2}, {2, 0}, {1, 2}, {1, 3}};
  if (kept_triangle_edges == 3) edges.emplace_back(2, 3);
  return canonical_partition(6, std::move(edges));
}

/// Vertex order (r, a, b, c, p, q, x1, x2, x3, x4, s); clique {a, b, c, x1..x4};
/// N(r) = {a, b}, N(p) = {a, c}, N(q) = {b, c}, N(s) = {x1..x4}.
inline SplitGraph gen_phoenix() {
  auto edges = detail::clique_edges(7);  // ids 0..6 stand for a, b, c, x1..x4
  for (auto& [u, v] : edges) {
    u = u < 3 ? u + 1 : u + 3;
    v = v < 3 ? v + 1 : v + 3;
  }
  edges.insert(edges.end(), {{0, 1}, {0, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 3}, {10, 6}, {10, 7}, {10, 8}, {10, 9}});
  return validate_split(11, {1, 2, 3, 6, 7, 8, 9}, std::move(edges));
}

/// Clique 0..k_size-1 and cones k_size..k_size+s_size-1. Each cone picks every
/// clique vertex independently with probability edge_prob, redrawing until its
/// neighborhood is nonempty. Deterministic in `seed`.
inline SplitGraph gen_random_split(int k_size, int s_size, double edge_prob, std::uint64_t seed) {
  if (k_size < 1 || s_size < 0) throw Error(ErrorCode::InvalidArgument, "need k_size >= 1 and s_size >= 0");
  if (!(edge_prob > 0.0) || edge_prob > 1.0) throw Error(ErrorCode::InvalidArgument, "edge_prob must lie in (0, 1]");
  SplitMix64 rng(seed);
  auto edges = detail::clique_edges(k_size);
  std::vector<VertexId> picked;
  for (int i = 0; i < s_size; ++i) {
    const VertexId cone = k_size + i;
    do {
      picked.clear();
      for (VertexId x = 0; x < k_size; ++x) {
        if (rng.uniform() < edge_prob) picked.push_back(x);
      }
    } while (picked.empty());
    for (VertexId x : picked) edges.emplace_back(x, cone);
  }
  return validate_split(k_size + s_size, detail::iota_ids(k_size), std::move(edges));
}

}  // namespace splitpeb
