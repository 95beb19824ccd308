#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "splitpeb/graph.hpp"
#include "splitpeb/oracle.hpp"
#include "splitpeb/recognition.hpp"

namespace splitpeb {

using Rational = boost::rational<std::int64_t>;

/// Unchecked strategy data, as read from a certificate.
struct RawStrategy {
  VertexId root = 0;
  std::map<VertexId, VertexId> parent;  // child -> parent
  std::map<VertexId, Rational> weight;  // missing vertices weigh 0
};

/// A rooted subtree of G with a weight function that at least halves from
/// parent to child away from the root's neighborhood. Build through
/// validate_strategy().
class Strategy {
 public:
  [[nodiscard]] VertexId root() const { return root_; }
  /// Tree vertices, root first, then ascending.
  [[nodiscard]] const std::vector<VertexId>& vertices() const { return vertices_; }
  [[nodiscard]] const std::map<VertexId, VertexId>& parent() const { return parent_; }
  [[nodiscard]] const std::vector<Rational>& weights() const { return weight_; }
  [[nodiscard]] Rational weight(VertexId v) const { return weight_[v]; }

  /// sigma(C) = sum of weight(v) * C(v).
  [[nodiscard]] Rational weigh(const Configuration& c) const {
    Rational total(0);
    for (std::size_t v = 0; v < weight_.size(); ++v) total += weight_[v] * c.counts[v];
    return total;
  }

  /// sigma(T-bar): total weight of the tree vertices other than the root.
  [[nodiscard]] Rational tree_weight() const {
    Rational total(0);
    for (VertexId v : vertices_) total += weight_[v];
    return total;
  }

  [[nodiscard]] RawStrategy raw() const {
    RawStrategy out{root_, parent_, {}};
    for (std::size_t v = 0; v < weight_.size(); ++v) {
      if (weight_[v] != Rational(0)) out.weight[static_cast<VertexId>(v)] = weight_[v];
    }
    return out;
  }

 private:
  friend Strategy validate_strategy(const SplitGraph& g, const RawStrategy& raw);

  VertexId root_ = 0;
  std::vector<VertexId> vertices_;
  std::map<VertexId, VertexId> parent_;
  std::vector<Rational> weight_;
};

inline Strategy validate_strategy(const SplitGraph& g, const RawStrategy& raw) {
  if (!g.valid_vertex(raw.root)) throw Error(ErrorCode::NotATree, "root " + std::to_string(raw.root) + " out of range");
  if (raw.parent.empty()) throw Error(ErrorCode::NotATree, "a strategy needs at least two vertices");
  for (auto [child, par] : raw.parent) {
    if (!g.valid_vertex(child) || !g.valid_vertex(par)) throw Error(ErrorCode::NotATree, "vertex out of range");
    if (child == raw.root) throw Error(ErrorCode::NotATree, "the root cannot have a parent");
    if (!g.adjacent(child, par)) {
      throw Error(ErrorCode::NotATree,
                  "parent edge (" + std::to_string(child) + "," + std::to_string(par) + ") is not an edge of G");
    }
  }
  // Every vertex must climb to the root without revisiting anything.
  for (auto [child, par] : raw.parent) {
    VertexId cur = child;
    for (std::size_t steps = 0; cur != raw.root; ++steps) {
      auto it = raw.parent.find(cur);
      if (it == raw.parent.end()) {
        throw Error(ErrorCode::NotATree, "vertex " + std::to_string(cur) + " does not reach the root");
      }
      if (steps > raw.parent.size()) throw Error(ErrorCode::NotATree, "parent map has a cycle");
      cur = it->second;
    }
  }

  Strategy s;
  s.root_ = raw.root;
  s.parent_ = raw.parent;
  s.weight_.assign(g.n(), Rational(0));
  s.vertices_.push_back(raw.root);
  for (auto [child, par] : raw.parent) s.vertices_.push_back(child);
  for (auto [v, w] : raw.weight) {
    if (!g.valid_vertex(v)) throw Error(ErrorCode::NotATree, "weighted vertex " + std::to_string(v) + " out of range");
    if (w < Rational(0)) throw Error(ErrorCode::WeightDoublingViolated, "negative weight on " + std::to_string(v));
    if (w != Rational(0) && v != raw.root && !raw.parent.contains(v)) {
      throw Error(ErrorCode::NotATree, "vertex " + std::to_string(v) + " has weight but is not in the tree");
    }
    s.weight_[v] = w;
  }
  if (s.weight_[raw.root] != Rational(0)) throw Error(ErrorCode::RootWeightNonzero, "root weight must be 0");
  if (std::all_of(s.weight_.begin(), s.weight_.end(), [](const Rational& w) { return w == Rational(0); })) {
    throw Error(ErrorCode::ZeroStrategy, "all weights are zero");
  }
  for (auto [child, par] : raw.parent) {
    if (par == raw.root) continue;  // neighbors of the root are unconstrained
    if (s.weight_[par] < Rational(2) * s.weight_[child]) {
      throw Error(ErrorCode::WeightDoublingViolated,
                  "weight(" + std::to_string(par) + ") < 2 * weight(" + std::to_string(child) + ")");
    }
  }
  return s;
}

/// Accumulated weight sigma = sum of the strategies' weights, per vertex.
inline std::vector<Rational> accumulated_weight(int n, const std::vector<Strategy>& strategies) {
  std::vector<Rational> sigma(n, Rational(0));
  for (const auto& s : strategies) {
    for (int v = 0; v < n; ++v) sigma[v] += s.weight(v);
  }
  return sigma;
}

/// Upper bound on pi(G, r) from a family of strategies: floor(sum of
/// sigma_i(T_i-bar)) + 1, usable only when the accumulated weight is at least
/// 1 on every vertex except r. Empty when that coverage fails.
inline std::optional<int> wfl_bound(const SplitGraph& g, VertexId r, const std::vector<Strategy>& strategies) {
  for (const auto& s : strategies) {
    if (s.root() != r) {
      throw Error(ErrorCode::RootMismatch,
                  "strategy rooted at " + std::to_string(s.root()) + ", expected " + std::to_string(r));
    }
  }
  auto sigma = accumulated_weight(g.n(), strategies);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (v != r && sigma[v] < Rational(1)) return std::nullopt;
  }
  Rational total(0);
  for (const auto& s : strategies) total += s.tree_weight();
  return static_cast<int>(total.numerator() / total.denominator()) + 1;
}

/// Checks sigma(C) <= sigma(T-bar) for every supplied configuration.
inline bool wfl_verify_unsolvable(const Strategy& strategy, const std::vector<Configuration>& unsolvable) {
  const Rational bound = strategy.tree_weight();
  return std::all_of(unsolvable.begin(), unsolvable.end(),
                     [&](const Configuration& c) { return strategy.weigh(c) <= bound; });
}

/// The strategy family certifying pi(G, r) <= n + |X - {r}| for a clique root:
/// one star-like tree per neighbor r' of r. A cut-vertex r' weighs 2 and
/// carries its not-yet-covered cone neighbors at weight 1; any other r' weighs
/// 1. Each cone still uncovered joins the trees of its two lowest-indexed
/// neighbors at weight 1/2. The accumulated weight is 2 on X - {r} and 1 on
/// every other non-root vertex.
inline std::vector<Strategy> rootKm_strategies(const SplitGraph& g_in, VertexId r) {
  PreparedGraph pg(g_in);
  const auto& g = pg.graph();
  if (!g.valid_vertex(r) || !g.in_clique(r)) {
    throw Error(ErrorCode::PreconditionViolated, "root " + std::to_string(r) + " is not a clique vertex");
  }
  std::map<VertexId, RawStrategy> trees;
  std::vector<char> covered(g.n(), 0);
  covered[r] = 1;
  for (VertexId nb : g.neighbors(r)) {
    covered[nb] = 1;
    RawStrategy& t = trees[nb];
    t.root = r;
    t.parent[nb] = r;
    t.weight[nb] = pg.is_cut(nb) ? Rational(2) : Rational(1);
  }
  for (VertexId nb : g.neighbors(r)) {
    if (!pg.is_cut(nb)) continue;
    RawStrategy& t = trees[nb];
    for (VertexId v : g.neighbors(nb)) {
      if (g.in_clique(v) || covered[v]) continue;
      covered[v] = 1;
      t.parent[v] = nb;
      t.weight[v] = Rational(1);
    }
  }
  for (VertexId v = 0; v < g.n(); ++v) {
    if (covered[v]) continue;
    auto nbs = g.neighbors(v);
    if (nbs.size() < 2) {
      throw Error(ErrorCode::PreconditionViolated, "uncovered vertex " + std::to_string(v) + " has degree < 2");
    }
    for (int i = 0; i < 2; ++i) {
      RawStrategy& t = trees.at(nbs[i]);
      t.parent[v] = nbs[i];
      t.weight[v] = Rational(1, 2);
    }
  }
  std::vector<Strategy> out;
  out.reserve(trees.size());
  for (const auto& [nb, raw] : trees) out.push_back(validate_strategy(g, raw));
  return out;
}

}  // namespace splitpeb
