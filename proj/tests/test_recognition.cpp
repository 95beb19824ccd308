#include <gtest/gtest.h>

#include <algorithm>

#include "splitpeb/generators.hpp"
#include "splitpeb/recognition.hpp"
#include "support.hpp"

using namespace splitpeb;

namespace {

// K = {0,1,2,3}, cones u = 4 (N = {0,1}) and v = 5 (N = {2,3}).
SplitGraph two_disjoint_cones() {
  auto edges = detail::clique_edges(4);
  edges.insert(edges.end(), {{0, 4}, {1, 4}, {2, 5}, {3, 5}});
  return validate_split(6, {0, 1, 2, 3}, edges);
}

std::vector<VertexId> sorted(std::array<VertexId, 3> a) {
  std::sort(a.begin(), a.end());
  return {a.begin(), a.end()};
}

}  // namespace

TEST(AuxGraph, Pyramid) {
  auto h = build_H(gen_pyramid());
  EXPECT_EQ(h.vertices, (std::vector<VertexId>{1, 2, 3}));
  ASSERT_EQ(h.edges.size(), 3u);
  auto ab = h.find(1, 2);
  auto ac = h.find(1, 3);
  auto bc = h.find(2, 3);
  ASSERT_TRUE(ab && ac && bc);
  EXPECT_EQ(ab->labels, (std::vector<VertexId>{0}));
  EXPECT_EQ(ac->labels, (std::vector<VertexId>{4}));
  EXPECT_EQ(bc->labels, (std::vector<VertexId>{5}));
}

TEST(AuxGraph, SunIsEmpty) {
  auto h = build_H(gen_sun(6));
  EXPECT_TRUE(h.edges.empty());
  EXPECT_TRUE(h.vertices.empty());
}

TEST(AuxGraph, PhoenixIsTriangle) {
  auto h = build_H(gen_phoenix());
  EXPECT_EQ(h.vertices, (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(h.edges.size(), 3u);
}

TEST(AuxGraph, ParallelConesShareOneEdge) {
  // Two cones on {0,1}: one H-edge with two labels.
  auto edges = detail::clique_edges(3);
  edges.insert(edges.end(), {{0, 3}, {1, 3}, {0, 4}, {1, 4}});
  auto h = build_H(validate_split(5, {0, 1, 2}, edges));
  ASSERT_EQ(h.edges.size(), 1u);
  EXPECT_EQ(h.edges[0].labels, (std::vector<VertexId>{3, 4}));
}

TEST(RPereyra, Pyramid) {
  auto w = is_r_pereyra(gen_pyramid(), 0);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->cones[0], 0);
  EXPECT_EQ(sorted(w->cones), (std::vector<VertexId>{0, 4, 5}));
  EXPECT_EQ(sorted(w->base), (std::vector<VertexId>{1, 2, 3}));
}

TEST(RPereyra, Negative) {
  auto sun = gen_sun(6);
  for (VertexId leaf : sun.independent()) EXPECT_FALSE(is_r_pereyra(sun, leaf));
  auto ph = gen_phoenix();
  EXPECT_FALSE(is_r_pereyra(ph, 10));  // degree 4
  EXPECT_FALSE(is_r_pereyra(ph, 1));   // clique vertex
}

TEST(Pereyra, Examples) {
  EXPECT_TRUE(is_pereyra(gen_pyramid()));
  EXPECT_TRUE(is_pereyra(gen_phoenix()));
  for (int n = 4; n <= 12; ++n) EXPECT_FALSE(is_pereyra(gen_sun(n)));
  EXPECT_FALSE(is_pereyra(gen_complete(5)));
}

TEST(Pereyra, WitnessIsAPyramid) {
  auto g = gen_phoenix();
  auto w = is_pereyra(g);
  ASSERT_TRUE(w);
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (int i = 0; i < 3; ++i) {
    auto nb = g.neighbors(w->cones[i]);
    std::vector<VertexId> want{w->base[pairs[i].first], w->base[pairs[i].second]};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(std::vector<VertexId>(nb.begin(), nb.end()), want);
  }
}

TEST(Pereyra, CutVertexNeighborsExcluded) {
  // Pyramid plus a leaf on a: a becomes a cut vertex, so no cone using a counts.
  auto edges = std::vector<Edge>{{0, 1}, {0, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 6}};
  auto g = validate_split(7, {1, 2, 3}, edges);
  EXPECT_FALSE(is_pereyra(g));
  EXPECT_FALSE(test_support::naive_pereyra(g));
}

TEST(Pereyra, MatchesNaiveTripleScan) {
  int positives = 0;
  for (const auto& g : test_support::sweep_graphs(4, 3)) {
    const bool fast = is_pereyra(g).has_value();
    EXPECT_EQ(fast, test_support::naive_pereyra(g));
    positives += fast;
    const auto c = canonicalize(g);
    for (VertexId r : c.independent()) {
      EXPECT_EQ(is_r_pereyra(g, r).has_value(), test_support::naive_pereyra(g, r));
    }
  }
  EXPECT_GT(positives, 0);
  for (const auto& g : test_support::random_graphs(200, 12, 99)) {
    EXPECT_EQ(is_pereyra(g).has_value(), test_support::naive_pereyra(g));
  }
}

TEST(Phoenix, Examples) {
  EXPECT_TRUE(is_r_phoenix(gen_phoenix(), 0));
  EXPECT_FALSE(is_r_phoenix(gen_pyramid(), 0));
  // Drop x4 (vertex 9): s has degree 3.
  auto full = gen_phoenix();
  std::vector<Edge> edges;
  for (auto [u, v] : full.edges()) {
    if (u == 9 || v == 9) continue;
    edges.emplace_back(u > 9 ? u - 1 : u, v > 9 ? v - 1 : v);
  }
  auto g = validate_split(10, {1, 2, 3, 6, 7, 8}, edges);
  EXPECT_EQ(g.degree(9), 3);
  EXPECT_FALSE(is_r_phoenix(g, 0));
}

TEST(DisjointCones, Examples) {
  auto pair = find_disjoint_small_cones(two_disjoint_cones());
  ASSERT_TRUE(pair);
  EXPECT_EQ(*pair, std::make_pair(VertexId{4}, VertexId{5}));
  EXPECT_FALSE(find_disjoint_small_cones(gen_pyramid()));
  // Cones of degree 4 only.
  auto edges = detail::clique_edges(5);
  for (int c = 5; c < 8; ++c) {
    for (int x = 0; x < 4; ++x) edges.emplace_back((x + c) % 5, c);
  }
  EXPECT_FALSE(find_disjoint_small_cones(validate_split(8, {0, 1, 2, 3, 4}, edges)));
  EXPECT_THROW(find_disjoint_small_cones(gen_sun(6)), Error);
}

TEST(DisjointCones, MatchesPairScan) {
  auto check = [](const SplitGraph& g) {
    if (cut_vertices(g).ct > 0) return;
    auto fast = find_disjoint_small_cones(g);
    auto naive = test_support::naive_disjoint_degree_sum(g);
    ASSERT_EQ(fast.has_value(), naive.has_value());
    if (!fast) return;
    const auto c = canonicalize(g);
    auto [r, s] = *fast;
    EXPECT_EQ(c.degree(r), 2);
    EXPECT_TRUE(c.is_cone(r) && c.is_cone(s));
    EXPECT_LE(c.degree(s), 3);
    for (VertexId x : c.neighbors(r)) EXPECT_FALSE(c.adjacent(x, s));
    EXPECT_EQ(c.degree(r) + c.degree(s), *naive);
  };
  for (const auto& g : test_support::sweep_graphs(4, 3)) check(g);
  for (const auto& g : test_support::random_graphs(200, 12, 5)) check(g);
  for (const auto& g : test_support::random_graphs(100, 40, 6, 2)) check(g);
}
