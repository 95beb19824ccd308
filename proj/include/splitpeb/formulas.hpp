#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitpeb/graph.hpp"
#include "splitpeb/oracle.hpp"
#include "splitpeb/recognition.hpp"

namespace splitpeb {

/// Which closed form gives pi(G, r).
enum class RootCase { Clique, ConeEcc2, ConeEcc3 };

constexpr std::string_view to_string(RootCase c) {
  switch (c) {
    case RootCase::Clique: return "clique";
    case RootCase::ConeEcc2: return "cone_ecc2";
    case RootCase::ConeEcc3: return "cone_ecc3";
  }
  return "unknown";
}

/// The four competing lower-bound families for an eccentricity-3 cone root.
enum class TCase { RS, R, S, Zero };

constexpr std::string_view to_string(TCase c) {
  switch (c) {
    case TCase::RS: return "rs";
    case TCase::R: return "r";
    case TCase::S: return "s";
    case TCase::Zero: return "0";
  }
  return "unknown";
}

struct TValues {
  int t_rs = 0;
  int t_r = 0;
  int t_s = 0;
  int t_0 = 0;
  int t = 0;
  TCase dominant = TCase::RS;  // first maximizer in the order rs, r, s, 0

  [[nodiscard]] int value(TCase c) const {
    switch (c) {
      case TCase::RS: return t_rs;
      case TCase::R: return t_r;
      case TCase::S: return t_s;
      case TCase::Zero: return t_0;
    }
    return 0;
  }
};

inline TValues t_values(int n, int c_rs, int c_rz, int d_r, int d_s) {
  TValues t;
  t.t_rs = n + c_rs + 6 - d_r - d_s;
  t.t_r = n + c_rs + 2 - d_r;
  t.t_s = n + c_rs + c_rz + 2 - d_s;
  t.t_0 = n + c_rs + c_rz;
  t.t = t.t_rs;
  for (TCase c : {TCase::R, TCase::S, TCase::Zero}) {
    if (t.value(c) > t.t) {
      t.t = t.value(c);
      t.dominant = c;
    }
  }
  return t;
}

/// Inequality systems characterizing when each t-function is a maximizer.
/// Several can hold at once on ties.
struct DominanceConditions {
  bool rs = false;
  bool r = false;
  bool s = false;
  bool zero = false;
};

inline DominanceConditions dominance_conditions(int d_r, int d_s, int c_rz) {
  DominanceConditions out;
  out.rs = d_s <= 4 && d_r + c_rz <= 4 && d_r + d_s + c_rz <= 6;
  out.r = d_s >= 4 && d_r + c_rz <= 2;
  out.s = d_r + c_rz >= 4 && d_s <= 2;
  out.zero = d_r + d_s + c_rz >= 6 && d_r + c_rz >= 2 && d_s >= 2;
  return out;
}

/// Per-root quantities behind pi(G, r). Fields that do not apply to the
/// root's case keep their defaults (s, t empty; c_rs = c_rz = 0).
struct RootAnalysis {
  VertexId root = 0;
  bool root_in_clique = false;
  RootCase root_case = RootCase::Clique;
  int ecc = 0;
  int d_r = 0;
  std::optional<VertexId> s;  // min-degree vertex at maximum distance (lowest id on ties)
  int delta = 0;              // min degree at maximum distance; 0 when nothing lies farther than r
  int c_r = 0;                // |X - {r}|
  int c_rs = 0;
  int c_rz = 0;
  std::optional<TValues> t;
  bool pereyra = false;
  bool phoenix = false;
  std::optional<PyramidWitness> pyramid;
  int pi = 0;
};

/// Per-root evaluation of the closed forms over one prepared graph. Every
/// query is O(deg) plus a scan of low-degree cones, so all n roots of a large
/// sparse split graph are affordable.
class SplitAnalyzer {
 public:
  explicit SplitAnalyzer(const SplitGraph& g) : pg_(g), h_(build_H(pg_)), stamp_(pg_.graph().n(), 0) {}

  [[nodiscard]] const PreparedGraph& prepared() const { return pg_; }
  [[nodiscard]] const SplitGraph& graph() const { return pg_.graph(); }
  [[nodiscard]] const AuxGraphH& aux() const { return h_; }
  [[nodiscard]] int ct() const { return pg_.cuts().ct; }

  RootAnalysis analyze(VertexId r) {
    const auto& g = graph();
    if (!g.valid_vertex(r)) throw Error(ErrorCode::InvalidArgument, "root " + std::to_string(r) + " out of range");
    RootAnalysis a;
    a.root = r;
    a.root_in_clique = g.in_clique(r);
    a.d_r = g.degree(r);
    a.c_r = ct() - (pg_.is_cut(r) ? 1 : 0);
    if (a.root_in_clique) {
      analyze_clique_root(a);
    } else {
      analyze_cone_root(a);
    }
    return a;
  }

  /// t-values with a caller-chosen s, which must lie at distance 3 from the
  /// cone root r.
  TValues t_with(VertexId r, VertexId s) {
    const auto& g = graph();
    if (!g.is_cone(r) || !g.is_cone(s) || r == s) {
      throw Error(ErrorCode::PreconditionViolated, "t-values need two distinct cones");
    }
    mark(r);
    for (VertexId x : g.neighbors(s)) {
      if (stamp_[x] == epoch_) throw Error(ErrorCode::PreconditionViolated, "s is not at distance 3 from r");
    }
    return t_values(g.n(), c_rs_for(r, s), c_rz_for(r), g.degree(r), g.degree(s));
  }

 private:
  void mark(VertexId r) {
    ++epoch_;
    for (VertexId x : graph().neighbors(r)) stamp_[x] = epoch_;
  }

  [[nodiscard]] bool disjoint_from_marked(VertexId v) const {
    for (VertexId x : graph().neighbors(v)) {
      if (stamp_[x] == epoch_) return false;
    }
    return true;
  }

  [[nodiscard]] int c_rs_for(VertexId r, VertexId s) const {
    int c = ct();
    for (VertexId x : graph().neighbors(r)) c -= pg_.is_cut(x) ? 1 : 0;
    for (VertexId x : graph().neighbors(s)) c -= pg_.is_cut(x) ? 1 : 0;
    return c;
  }

  // Cut vertices of N(r) that also see a cone other than r.
  [[nodiscard]] int c_rz_for(VertexId r) const {
    int c = 0;
    for (VertexId x : graph().neighbors(r)) {
      if (pg_.is_cut(x) && pg_.cone_neighbors(x) >= 2) ++c;
    }
    return c;
  }

  void analyze_clique_root(RootAnalysis& a) {
    const auto& g = graph();
    const VertexId r = a.root;
    a.root_case = RootCase::Clique;
    a.pi = g.n() + a.c_r;
    if (g.n() == 1) return;
    if (a.d_r == g.n() - 1) {
      a.ecc = 1;
      for (const auto* group : {&pg_.clique_by_degree(), &pg_.cones_by_degree()}) {
        for (VertexId v : *group) {
          if (v == r) continue;
          if (!a.s || std::pair(g.degree(v), v) < std::pair(g.degree(*a.s), *a.s)) a.s = v;
          break;
        }
      }
    } else {
      // Everything at distance 2 is a cone missing r.
      a.ecc = 2;
      for (VertexId v : pg_.cones_by_degree()) {
        if (!g.adjacent(v, r)) {
          a.s = v;
          break;
        }
      }
    }
    a.delta = g.degree(*a.s);
  }

  void analyze_cone_root(RootAnalysis& a) {
    const auto& g = graph();
    const VertexId r = a.root;
    mark(r);
    for (VertexId v : pg_.cones_by_degree()) {
      if (v != r && disjoint_from_marked(v)) {
        a.s = v;
        break;
      }
    }
    if (a.s) {
      a.root_case = RootCase::ConeEcc3;
      a.ecc = 3;
      a.delta = g.degree(*a.s);
      a.c_rs = c_rs_for(r, *a.s);
      a.c_rz = c_rz_for(r);
      a.t = t_values(g.n(), a.c_rs, a.c_rz, a.d_r, a.delta);
      a.pyramid = is_r_pereyra(pg_, h_, r);
      a.pereyra = a.pyramid.has_value();
      a.phoenix = a.pereyra && a.delta >= 4;
      a.pi = a.t->t + (a.phoenix ? 1 : 0);
      return;
    }
    a.root_case = RootCase::ConeEcc2;
    a.ecc = a.d_r == g.n() - 1 ? 1 : 2;
    // Distance 2: clique vertices off N(r) and every other cone.
    std::optional<VertexId> best;
    for (VertexId v : pg_.clique_by_degree()) {
      if (stamp_[v] != epoch_) {
        best = v;
        break;
      }
    }
    for (VertexId v : pg_.cones_by_degree()) {
      if (v == r) continue;
      if (!best || std::pair(g.degree(v), v) < std::pair(g.degree(*best), *best)) best = v;
      break;
    }
    a.s = best;
    a.delta = best ? g.degree(*best) : 0;
    a.pyramid = is_r_pereyra(pg_, h_, r);
    a.pereyra = a.pyramid.has_value();
    a.pi = g.n() + ct() + (a.pereyra ? 1 : 0);
  }

  PreparedGraph pg_;
  AuxGraphH h_;
  std::vector<int> stamp_;
  int epoch_ = 0;
};

/// Quantities for an eccentricity-3 cone root, with s of minimum degree.
inline RootAnalysis compute_t(const SplitGraph& g, VertexId r) {
  SplitAnalyzer an(g);
  auto a = an.analyze(r);
  if (a.root_case != RootCase::ConeEcc3) {
    throw Error(ErrorCode::PreconditionViolated, "root " + std::to_string(r) + " is not a cone of eccentricity 3");
  }
  return a;
}

inline int pi_root_clique(const SplitGraph& g, VertexId r) {
  auto a = SplitAnalyzer(g).analyze(r);
  if (a.root_case != RootCase::Clique) {
    throw Error(ErrorCode::PreconditionViolated, "root " + std::to_string(r) + " is not a clique vertex");
  }
  return a.pi;
}

inline int pi_root_ecc2(const SplitGraph& g, VertexId r) {
  auto a = SplitAnalyzer(g).analyze(r);
  if (a.root_case != RootCase::ConeEcc2) {
    throw Error(ErrorCode::PreconditionViolated, "root " + std::to_string(r) + " is not a cone of eccentricity 2");
  }
  return a.pi;
}

inline int pi_root_ecc3(const SplitGraph& g, VertexId r) {
  auto a = SplitAnalyzer(g).analyze(r);
  if (a.root_case != RootCase::ConeEcc3) {
    throw Error(ErrorCode::PreconditionViolated, "root " + std::to_string(r) + " is not a cone of eccentricity 3");
  }
  return a.pi;
}

/// pi(G, r) from whichever closed form applies to r.
inline int pi_root(const SplitGraph& g, VertexId r) { return SplitAnalyzer(g).analyze(r).pi; }

/// 2-fold pebbling number for a clique root. A root adjacent to everything has
/// no vertex at distance 2 and gets n + 2 (n + 1 for the one-vertex graph).
inline int pi2_root_clique(const RootAnalysis& a, int n) {
  if (a.root_case != RootCase::Clique) {
    throw Error(ErrorCode::PreconditionViolated, "root " + std::to_string(a.root) + " is not a clique vertex");
  }
  if (n == 1) return 2;
  if (a.ecc < 2) return n + 2;
  if (a.delta == 1) return n + a.c_r + 4;
  if (a.delta < 4) return n + 6 - a.delta;
  return n + 2;
}

inline int pi2_root_clique(const SplitGraph& g, VertexId r) {
  return pi2_root_clique(SplitAnalyzer(g).analyze(r), g.n());
}

/// Closed form for diameter-3 split graphs, driven by the cut-vertex count,
/// the disjoint small-cone scan and the Pereyra test.
inline int pi_diam3_closed_form(SplitAnalyzer& an) {
  const auto& g = an.graph();
  int diam = 0;
  for (VertexId v = 0; v < g.n() && diam < 3; ++v) diam = std::max(diam, an.analyze(v).ecc);
  if (diam != 3) throw Error(ErrorCode::PreconditionViolated, "graph has diameter " + std::to_string(diam) + ", not 3");
  const int n = g.n();
  const int ct = an.ct();
  if (ct >= 2) return n + ct + 2;
  if (ct == 1) {
    for (VertexId v : g.independent()) {
      if (g.degree(v) != 1) continue;
      auto a = an.analyze(v);
      return a.ecc == 3 && a.delta <= 4 ? n + 5 - a.delta : n + 1;
    }
    return n + 1;
  }
  if (auto pair = find_disjoint_small_cones(an.prepared())) {
    return n + 6 - g.degree(pair->first) - g.degree(pair->second);
  }
  return is_pereyra(an.aux()) ? n + 1 : n;
}

inline int pi_diam3_closed_form(const SplitGraph& g) {
  SplitAnalyzer an(g);
  return pi_diam3_closed_form(an);
}

struct PebblingNumber {
  int pi = 0;
  VertexId argmax_root = 0;  // lowest id among maximizers
  bool class0 = false;
  int diameter = 0;
  std::optional<int> closed_form;  // set when the diameter is 3
  std::vector<RootAnalysis> per_root;
};

inline PebblingNumber pebbling_number(const SplitGraph& g) {
  SplitAnalyzer an(g);
  PebblingNumber out;
  out.per_root.reserve(g.n());
  for (VertexId r = 0; r < g.n(); ++r) {
    out.per_root.push_back(an.analyze(r));
    const auto& a = out.per_root.back();
    if (a.pi > out.pi) {
      out.pi = a.pi;
      out.argmax_root = r;
    }
    out.diameter = std::max(out.diameter, a.ecc);
  }
  out.class0 = out.pi == g.n();
  if (out.diameter == 3) out.closed_form = pi_diam3_closed_form(an);
  return out;
}

enum class WitnessKind { C_rs, C_r, C_s, C_0, C_P, RootKm, RootE2 };

inline constexpr std::array<WitnessKind, 7> kAllWitnessKinds{WitnessKind::C_rs, WitnessKind::C_r, WitnessKind::C_s,
                                                             WitnessKind::C_0,  WitnessKind::C_P, WitnessKind::RootKm,
                                                             WitnessKind::RootE2};

constexpr std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::C_rs: return "C_rs";
    case WitnessKind::C_r: return "C_r";
    case WitnessKind::C_s: return "C_s";
    case WitnessKind::C_0: return "C_0";
    case WitnessKind::C_P: return "C_P";
    case WitnessKind::RootKm: return "rootKm_witness";
    case WitnessKind::RootE2: return "rootE2_witness";
  }
  return "unknown";
}

inline std::optional<WitnessKind> witness_kind_from_string(std::string_view name) {
  for (WitnessKind k : kAllWitnessKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

inline WitnessKind witness_kind_for(TCase c) {
  switch (c) {
    case TCase::RS: return WitnessKind::C_rs;
    case TCase::R: return WitnessKind::C_r;
    case TCase::S: return WitnessKind::C_s;
    case TCase::Zero: return WitnessKind::C_0;
  }
  return WitnessKind::C_0;
}

struct WitnessConfig {
  WitnessKind kind = WitnessKind::C_0;
  Configuration config;
  int expected_size = 0;
};

namespace detail {

/// Lowest-indexed degree-1 neighbor of x other than `skip`.
inline std::optional<VertexId> leaf_of(const SplitGraph& g, VertexId x, VertexId skip) {
  for (VertexId v : g.neighbors(x)) {
    if (v != skip && g.degree(v) == 1) return v;
  }
  return std::nullopt;
}

/// leaf_of(), falling back to the lowest-indexed cone neighbor other than `skip`.
inline std::optional<VertexId> leaf_or_cone_of(const SplitGraph& g, VertexId x, VertexId skip) {
  if (auto leaf = leaf_of(g, x, skip)) return leaf;
  for (VertexId v : g.neighbors(x)) {
    if (v != skip && g.is_cone(v)) return v;
  }
  return std::nullopt;
}

class ConfigBuilder {
 public:
  ConfigBuilder(const SplitGraph& g, WitnessKind kind) : g_(g), kind_(kind), counts_(g.n(), -1) {}

  void put(VertexId v, int pebbles) {
    if (counts_[v] < 0) counts_[v] = pebbles;
  }
  void put_all(std::span<const VertexId> vs, int pebbles) {
    for (VertexId v : vs) put(v, pebbles);
  }
  // Zeroes every x in `cuts` and puts 3 on one leaf of each.
  void cut_vertices_with_leaves(const std::vector<VertexId>& cuts, VertexId root) {
    for (VertexId x : cuts) put(x, 0);
    for (VertexId x : cuts) {
      auto leaf = leaf_or_cone_of(g_, x, root);
      if (!leaf) {
        throw Error(ErrorCode::NotApplicable, "cut vertex " + std::to_string(x) + " has no cone other than the root");
      }
      put(*leaf, 3);
    }
  }
  WitnessConfig finish(int expected_size) {
    for (int& c : counts_) {
      if (c < 0) c = 1;
    }
    return WitnessConfig{kind_, Configuration{std::move(counts_)}, expected_size};
  }

 private:
  const SplitGraph& g_;
  WitnessKind kind_;
  std::vector<int> counts_;
};

}  // namespace detail

/// The explicit unsolvable configuration of the given kind for root r. Vertex
/// ids refer to the graph as given (partitions are canonicalized internally).
inline WitnessConfig witness_config(SplitAnalyzer& an, VertexId r, WitnessKind kind) {
  const auto& g = an.graph();
  const auto& pg = an.prepared();
  const auto a = an.analyze(r);
  const int n = g.n();
  detail::ConfigBuilder b(g, kind);
  auto not_applicable = [&](const std::string& why) {
    return Error(ErrorCode::NotApplicable,
                 std::string(to_string(kind)) + " for root " + std::to_string(r) + ": " + why);
  };

  switch (kind) {
    case WitnessKind::C_rs:
    case WitnessKind::C_r:
    case WitnessKind::C_s:
    case WitnessKind::C_0: {
      if (a.root_case != RootCase::ConeEcc3) throw not_applicable("root is not a cone of eccentricity 3");
      const VertexId s = *a.s;
      std::vector<VertexId> x_rs;
      std::vector<VertexId> x_rz;
      for (VertexId x : pg.cuts().cut_set) {
        if (!g.adjacent(x, r) && !g.adjacent(x, s)) x_rs.push_back(x);
        if (g.adjacent(x, r) && pg.cone_neighbors(x) >= 2) x_rz.push_back(x);
      }
      b.put(r, 0);
      if (kind == WitnessKind::C_rs) {
        b.put_all(g.neighbors(r), 0);
        b.put_all(g.neighbors(s), 0);
        b.cut_vertices_with_leaves(x_rs, r);
        b.put(s, 7);
      } else if (kind == WitnessKind::C_r) {
        b.put_all(g.neighbors(r), 0);
        b.cut_vertices_with_leaves(x_rs, r);
        b.put(s, 3);
      } else {
        std::vector<VertexId> both = x_rs;
        both.insert(both.end(), x_rz.begin(), x_rz.end());
        if (kind == WitnessKind::C_s) {
          b.put_all(g.neighbors(s), 0);
          b.put(s, 3);
        }
        b.cut_vertices_with_leaves(both, r);
      }
      const TCase tc = kind == WitnessKind::C_rs  ? TCase::RS
                       : kind == WitnessKind::C_r ? TCase::R
                       : kind == WitnessKind::C_s ? TCase::S
                                                  : TCase::Zero;
      return b.finish(a.t->value(tc) - 1);
    }
    case WitnessKind::C_P: {
      if (!a.phoenix) throw not_applicable("graph is not r-Phoenix");
      const auto& w = *a.pyramid;
      b.put(r, 0);
      b.put_all(w.base, 0);
      b.put(w.cones[1], 3);
      b.put(w.cones[2], 3);
      return b.finish(n);
    }
    case WitnessKind::RootKm: {
      if (a.root_case != RootCase::Clique) throw not_applicable("root is not a clique vertex");
      std::vector<VertexId> others;
      for (VertexId x : pg.cuts().cut_set) {
        if (x != r) others.push_back(x);
      }
      b.put(r, 0);
      b.cut_vertices_with_leaves(others, r);
      return b.finish(n + a.c_r - 1);
    }
    case WitnessKind::RootE2: {
      if (a.root_case != RootCase::ConeEcc2) throw not_applicable("root is not a cone of eccentricity 2");
      b.put(r, 0);
      if (a.pereyra) {
        b.put_all(a.pyramid->base, 0);
        b.put(a.pyramid->cones[1], 3);
        b.put(a.pyramid->cones[2], 3);
        return b.finish(n + an.ct());
      }
      // A leaf root whose neighbor has no other leaf: that neighbor gets 0 and
      // one spare non-cut, non-leaf vertex carries the 3 instead.
      const auto& cuts = pg.cuts().cut_set;
      std::optional<VertexId> lonely;
      if (a.d_r == 1 && !detail::leaf_of(g, g.neighbors(r)[0], r)) lonely = g.neighbors(r)[0];
      std::vector<VertexId> others;
      for (VertexId x : cuts) {
        if (!lonely || x != *lonely) others.push_back(x);
      }
      if (lonely) b.put(*lonely, 0);
      b.cut_vertices_with_leaves(others, r);
      if (lonely) {
        std::optional<VertexId> spare;
        for (VertexId v = 0; v < n && !spare; ++v) {
          if (v != r && !pg.is_cut(v) && g.degree(v) > 1) spare = v;
        }
        if (!spare) throw not_applicable("no vertex left to carry the spare pebbles");
        b.put(*spare, 3);
      }
      return b.finish(n + an.ct() - 1);
    }
  }
  throw not_applicable("unknown kind");
}

inline WitnessConfig witness_config(const SplitGraph& g, VertexId r, WitnessKind kind) {
  SplitAnalyzer an(g);
  return witness_config(an, r, kind);
}

}  // namespace splitpeb
