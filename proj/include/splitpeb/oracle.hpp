#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "splitpeb/graph.hpp"

namespace splitpeb {

/// Pebble counts per vertex, aligned with the graph's vertex order.
struct Configuration {
  std::vector<int> counts;

  [[nodiscard]] int size() const { return std::accumulate(counts.begin(), counts.end(), 0); }
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Which pebbling steps the search may use, by how they change the distance
/// of the moved pebble to the root.
enum class MoveRule {
  Any,
  Semigreedy,  // distance does not increase
  Greedy,      // distance strictly decreases
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SolveOptions {
  int k = 1;
  MoveRule rule = MoveRule::Any;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Exhaustive k-fold r-solvability search.
///
/// Every pebbling step removes one pebble from the board, so the move graph
/// over configurations is acyclic and a memoized recursion decides each state
/// exactly. A state is settled without search once some vertex v holds
/// (k - C(r)) * 2^dist(v, r) pebbles: walking them down a shortest path is a
/// greedy solution. Every other state lies in the "box"
///   C(r) <= k - 1,  C(v) <= k * 2^dist(v, r) - 1,
/// which is also the complete candidate set for unsolvable configurations.
/// Pebbles that reach r are never moved off again.
class Solver {
 public:
  Solver(const SplitGraph& g, VertexId root, SolveOptions opts) : g_(g), root_(root), opts_(opts) {
    if (!g.valid_vertex(root)) throw Error(ErrorCode::InvalidArgument, "root " + std::to_string(root) + " out of range");
    if (opts.k < 1) throw Error(ErrorCode::InvalidArgument, "fold k must be >= 1");
    dist_ = distances_from(g, root).dist;
    const int n = g.n();
    radix_.resize(n);
    stride_.resize(n);
    box_size_ = 1;
    bool overflow = false;
    for (VertexId v = 0; v < n; ++v) {
      radix_[v] = v == root ? opts.k : opts.k << std::min(dist_[v], 30);
      stride_[v] = box_size_;
      if (box_size_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(radix_[v])) {
        overflow = true;
      } else {
        box_size_ *= static_cast<std::uint64_t>(radix_[v]);
      }
    }
    if (overflow) box_size_ = std::numeric_limits<std::uint64_t>::max();
    flat_ = box_size_ <= kFlatLimit;
    if (flat_) memo_.assign(box_size_, kUnknown);
  }

  [[nodiscard]] const SplitGraph& graph() const { return g_; }
  [[nodiscard]] VertexId root() const { return root_; }
  [[nodiscard]] const SolveOptions& options() const { return opts_; }
  [[nodiscard]] const std::vector<int>& distances() const { return dist_; }

  /// Number of configurations in the candidate box (saturating).
  [[nodiscard]] std::uint64_t box_size() const { return box_size_; }
  /// Largest count vertex v can hold inside the box.
  [[nodiscard]] int cap(VertexId v) const { return radix_[v] - 1; }
  [[nodiscard]] std::uint64_t states_explored() const { return explored_; }

  bool solvable(std::span<const int> counts) {
    if (static_cast<int>(counts.size()) != g_.n()) {
      throw Error(ErrorCode::InvalidArgument, "configuration has " + std::to_string(counts.size()) +
                                                  " entries for a graph with " + std::to_string(g_.n()) + " vertices");
    }
    for (int c : counts) {
      if (c < 0) throw Error(ErrorCode::InvalidArgument, "negative pebble count");
    }
    work_.assign(counts.begin(), counts.end());
    if (settled_by_any_vertex()) return true;
    return search();
  }

  bool solvable(const Configuration& c) { return solvable(std::span<const int>(c.counts)); }

  /// Calls fn(counts) for every configuration in the box, in mixed-radix order
  /// (vertex 0 varies fastest).
  template <typename Fn>
  void for_each_box_config(Fn&& fn) const {
    std::vector<int> counts(g_.n(), 0);
    while (true) {
      fn(std::span<const int>(counts));
      int v = 0;
      while (v < g_.n() && ++counts[v] == radix_[v]) counts[v++] = 0;
      if (v == g_.n()) break;
    }
  }

 private:
  static constexpr std::uint64_t kFlatLimit = std::uint64_t{1} << 26;
  static constexpr std::uint8_t kUnknown = 0;
  static constexpr std::uint8_t kSolvable = 1;
  static constexpr std::uint8_t kUnsolvable = 2;

  [[nodiscard]] bool settled_by(VertexId v) const {
    const int need = opts_.k - work_[root_];
    if (need <= 0) return true;
    if (v == root_) return false;
    return dist_[v] < 30 && work_[v] >= (need << dist_[v]);
  }

  [[nodiscard]] bool settled_by_any_vertex() const {
    for (VertexId v = 0; v < g_.n(); ++v) {
      if (settled_by(v)) return true;
    }
    return work_[root_] >= opts_.k;
  }

  [[nodiscard]] bool allowed(VertexId from, VertexId to) const {
    switch (opts_.rule) {
      case MoveRule::Any: return true;
      case MoveRule::Semigreedy: return dist_[to] <= dist_[from];
      case MoveRule::Greedy: return dist_[to] < dist_[from];
    }
    return true;
  }

  [[nodiscard]] std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (VertexId v = 0; v < g_.n(); ++v) idx += static_cast<std::uint64_t>(work_[v]) * stride_[v];
    return idx;
  }

  [[nodiscard]] std::string hash_key() const {
    std::string key(work_.size() * sizeof(int), '\0');
    std::copy_n(reinterpret_cast<const char*>(work_.data()), key.size(), key.data());
    return key;
  }

  void charge() {
    if (++explored_ > opts_.node_budget) {
      throw Error(ErrorCode::BudgetExceeded,
                  "search exceeded node budget of " + std::to_string(opts_.node_budget) + " states");
    }
  }

  // Precondition: work_ is a box state (not settled).
  bool search() {
    std::uint64_t idx = 0;
    std::string key;
    if (flat_) {
      idx = index();
      if (memo_[idx] != kUnknown) return memo_[idx] == kSolvable;
    } else {
      key = hash_key();
      if (auto it = hashed_.find(key); it != hashed_.end()) return it->second;
    }
    charge();

    bool result = false;
    for (VertexId u = 0; u < g_.n() && !result; ++u) {
      if (u == root_ || work_[u] < 2) continue;
      for (VertexId v : g_.neighbors(u)) {
        if (!allowed(u, v)) continue;
        work_[u] -= 2;
        work_[v] += 1;
        bool settled = v == root_ ? settled_by_any_vertex() : settled_by(v);
        bool ok = settled || search();
        work_[u] += 2;
        work_[v] -= 1;
        if (ok) {
          result = true;
          break;
        }
      }
    }

    if (flat_) {
      memo_[idx] = result ? kSolvable : kUnsolvable;
    } else {
      hashed_.emplace(std::move(key), result);
    }
    return result;
  }

  const SplitGraph& g_;
  VertexId root_;
  SolveOptions opts_;
  std::vector<int> dist_;
  std::vector<int> radix_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t box_size_ = 0;
  bool flat_ = false;
  std::vector<std::uint8_t> memo_;
  std::unordered_map<std::string, bool> hashed_;
  std::vector<int> work_;
  std::uint64_t explored_ = 0;
};

inline bool is_solvable(const SplitGraph& g, const Configuration& c, VertexId r, const SolveOptions& opts = {}) {
  Solver solver(g, r, opts);
  return solver.solvable(c);
}

struct UnsolvableWitness {
  int size = 0;
  Configuration config;
};

namespace detail {

inline void require_enumerable(const Solver& solver) {
  if (solver.box_size() > solver.options().node_budget) {
    throw Error(ErrorCode::BudgetExceeded, "candidate box of " + std::to_string(solver.box_size()) +
                                               " configurations exceeds node budget of " +
                                               std::to_string(solver.options().node_budget));
  }
}

}  // namespace detail

/// A maximum-size r-unsolvable configuration; ties go to the
/// lexicographically smallest count vector.
inline UnsolvableWitness max_unsolvable(const SplitGraph& g, VertexId r, const SolveOptions& opts = {}) {
  Solver solver(g, r, opts);
  detail::require_enumerable(solver);
  UnsolvableWitness best;
  best.size = -1;
  solver.for_each_box_config([&](std::span<const int> counts) {
    const int size = std::accumulate(counts.begin(), counts.end(), 0);
    if (size < best.size) return;
    if (solver.solvable(counts)) return;
    std::vector<int> cand(counts.begin(), counts.end());
    if (size > best.size || cand < best.config.counts) {
      best.size = size;
      best.config.counts = std::move(cand);
    }
  });
  return best;
}

inline UnsolvableWitness max_unsolvable(const SplitGraph& g, VertexId r, int k) {
  return max_unsolvable(g, r, SolveOptions{.k = k});
}

/// pi_k(G, r) under the given move rule: one more than the largest unsolvable size.
inline int brute_pi(const SplitGraph& g, VertexId r, const SolveOptions& opts) {
  return max_unsolvable(g, r, opts).size + 1;
}

inline int brute_pi(const SplitGraph& g, VertexId r, int k = 1) { return brute_pi(g, r, SolveOptions{.k = k}); }

/// max over roots of brute_pi.
inline int brute_pi_graph(const SplitGraph& g, const SolveOptions& opts = {}) {
  int best = 0;
  for (VertexId r = 0; r < g.n(); ++r) best = std::max(best, brute_pi(g, r, opts));
  return best;
}

/// Every r-unsolvable configuration (all lie in the candidate box).
inline std::vector<Configuration> unsolvable_configurations(const SplitGraph& g, VertexId r,
                                                            const SolveOptions& opts = {}) {
  Solver solver(g, r, opts);
  detail::require_enumerable(solver);
  std::vector<Configuration> out;
  solver.for_each_box_config([&](std::span<const int> counts) {
    if (!solver.solvable(counts)) out.push_back(Configuration{{counts.begin(), counts.end()}});
  });
  return out;
}

/// Unsolvable configurations that become solvable after adding one pebble anywhere.
inline std::vector<Configuration> maximal_unsolvable_configurations(const SplitGraph& g, VertexId r,
                                                                    const SolveOptions& opts = {}) {
  Solver solver(g, r, opts);
  detail::require_enumerable(solver);
  std::vector<Configuration> out;
  std::vector<int> bumped;
  solver.for_each_box_config([&](std::span<const int> counts) {
    if (solver.solvable(counts)) return;
    bumped.assign(counts.begin(), counts.end());
    for (VertexId v = 0; v < g.n(); ++v) {
      ++bumped[v];
      const bool still_unsolvable = !solver.solvable(bumped);
      --bumped[v];
      if (still_unsolvable) return;
    }
    out.push_back(Configuration{{counts.begin(), counts.end()}});
  });
  return out;
}

}  // namespace splitpeb
