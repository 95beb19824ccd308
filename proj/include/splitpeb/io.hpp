#pragma once

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "splitpeb/formulas.hpp"
#include "splitpeb/graph.hpp"
#include "splitpeb/oracle.hpp"
#include "splitpeb/recognition.hpp"
#include "splitpeb/strategy.hpp"

namespace splitpeb::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& obj, const char* name) {
  if (!obj.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) throw Error(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
  return *it;
}

inline int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, what + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::ParseError, what + " is out of range");
  }
  return static_cast<int>(v);
}

inline std::vector<int> as_int_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, what + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_int(x, what + " entry"));
  return out;
}

inline VertexId key_as_vertex(const std::string& key) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw Error(ErrorCode::ParseError, "\"" + key + "\" is not a vertex id");
  return v;
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- Graph JSON: {"n": int, "clique": [ids], "edges": [[u, v], ...]} with u < v.

inline SplitGraph graph_from_json(const json& j) {
  const int n = detail::as_int(detail::field(j, "n"), "n");
  if (n < 1) throw Error(ErrorCode::ParseError, "n must be positive");
  auto clique = detail::as_int_array(detail::field(j, "clique"), "clique");
  const json& raw_edges = detail::field(j, "edges");
  if (!raw_edges.is_array()) throw Error(ErrorCode::ParseError, "edges must be an array");
  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (const auto& e : raw_edges) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "each edge must be a pair [u, v]");
    const int u = detail::as_int(e[0], "edge endpoint");
    const int v = detail::as_int(e[1], "edge endpoint");
    if (u > v) {
      throw Error(ErrorCode::BadEdge, "edge [" + std::to_string(u) + "," + std::to_string(v) + "] must have u < v");
    }
    edges.emplace_back(u, v);
  }
  return validate_split(n, std::move(clique), std::move(edges));
}

inline SplitGraph parse_graph(const std::string& text) { return graph_from_json(detail::parse_text(text)); }

inline SplitGraph read_graph(const std::string& path) { return parse_graph(read_file(path)); }

inline json graph_to_json(const SplitGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({std::min(u, v), std::max(u, v)});
  std::vector<VertexId> clique(g.clique().begin(), g.clique().end());
  std::sort(clique.begin(), clique.end());
  return {{"n", g.n()}, {"clique", clique}, {"edges", std::move(edges)}};
}

// ---- Configuration JSON: {"counts": [int, ...]}.

inline Configuration configuration_from_json(const json& j, std::optional<int> expected_n = std::nullopt) {
  Configuration c{detail::as_int_array(detail::field(j, "counts"), "counts")};
  for (int x : c.counts) {
    if (x < 0) throw Error(ErrorCode::ParseError, "pebble counts must be nonnegative");
  }
  if (expected_n && static_cast<int>(c.counts.size()) != *expected_n) {
    throw Error(ErrorCode::ParseError, "configuration has " + std::to_string(c.counts.size()) +
                                           " entries, graph has " + std::to_string(*expected_n) + " vertices");
  }
  return c;
}

inline Configuration parse_configuration(const std::string& text, std::optional<int> expected_n = std::nullopt) {
  return configuration_from_json(detail::parse_text(text), expected_n);
}

inline json configuration_to_json(const Configuration& c) { return {{"counts", c.counts}}; }

// ---- Strategy JSON: {"root": r, "parent": {"child": parent}, "weight": {"v": [num, den]}}.

inline RawStrategy raw_strategy_from_json(const json& j) {
  RawStrategy raw;
  raw.root = detail::as_int(detail::field(j, "root"), "root");
  const json& parent = detail::field(j, "parent");
  if (!parent.is_object()) throw Error(ErrorCode::ParseError, "parent must be an object");
  for (const auto& [key, value] : parent.items()) {
    raw.parent[detail::key_as_vertex(key)] = detail::as_int(value, "parent of " + key);
  }
  const json& weight = detail::field(j, "weight");
  if (!weight.is_object()) throw Error(ErrorCode::ParseError, "weight must be an object");
  for (const auto& [key, value] : weight.items()) {
    if (!value.is_array() || value.size() != 2) {
      throw Error(ErrorCode::ParseError, "weight of " + key + " must be [numerator, denominator]");
    }
    const int num = detail::as_int(value[0], "weight numerator");
    const int den = detail::as_int(value[1], "weight denominator");
    if (den == 0) throw Error(ErrorCode::ParseError, "weight of " + key + " has a zero denominator");
    raw.weight[detail::key_as_vertex(key)] = Rational(num, den);
  }
  return raw;
}

inline Strategy strategy_from_json(const SplitGraph& g, const json& j) {
  return validate_strategy(g, raw_strategy_from_json(j));
}

inline json strategy_to_json(const Strategy& s) {
  json parent = json::object();
  json weight = json::object();
  for (auto [child, par] : s.parent()) parent[std::to_string(child)] = par;
  for (VertexId v : s.vertices()) {
    const Rational w = s.weight(v);
    if (w != Rational(0)) weight[std::to_string(v)] = {w.numerator(), w.denominator()};
  }
  return {{"root", s.root()}, {"parent", std::move(parent)}, {"weight", std::move(weight)}};
}

// ---- Reports.

inline json rational_to_json(const Rational& r) { return {r.numerator(), r.denominator()}; }

inline json t_values_to_json(const TValues& t) {
  return {{"t_rs", t.t_rs}, {"t_r", t.t_r},  {"t_s", t.t_s},
          {"t_0", t.t_0},   {"t", t.t},      {"dominant", std::string(to_string(t.dominant))}};
}

inline json pyramid_to_json(const PyramidWitness& w) {
  return {{"cones", std::vector<VertexId>(w.cones.begin(), w.cones.end())},
          {"base", std::vector<VertexId>(w.base.begin(), w.base.end())}};
}

template <typename T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json root_analysis_to_json(const RootAnalysis& a) {
  return {{"root", a.root},
          {"root_in_clique", a.root_in_clique},
          {"case", std::string(to_string(a.root_case))},
          {"ecc", a.ecc},
          {"d_r", a.d_r},
          {"s", optional_to_json(a.s)},
          {"delta", a.delta},
          {"c_r", a.c_r},
          {"c_rs", a.c_rs},
          {"c_rz", a.c_rz},
          {"t_values", a.t ? t_values_to_json(*a.t) : json(nullptr)},
          {"pereyra", a.pereyra},
          {"phoenix", a.phoenix},
          {"pyramid", a.pyramid ? pyramid_to_json(*a.pyramid) : json(nullptr)},
          {"pi", a.pi}};
}

inline json pebbling_number_to_json(const PebblingNumber& p) {
  json per_root = json::array();
  for (const auto& a : p.per_root) {
    per_root.push_back({{"root", a.root},
                        {"ecc", a.ecc},
                        {"case", std::string(to_string(a.root_case))},
                        {"t_values", a.t ? t_values_to_json(*a.t) : json(nullptr)},
                        {"pi_r", a.pi}});
  }
  return {{"pi", p.pi},
          {"class0", p.class0},
          {"argmax_root", p.argmax_root},
          {"diameter", p.diameter},
          {"closed_form", optional_to_json(p.closed_form)},
          {"per_root", std::move(per_root)}};
}

inline json witness_to_json(const WitnessConfig& w, VertexId root) {
  return {{"kind", std::string(to_string(w.kind))},
          {"root", root},
          {"counts", w.config.counts},
          {"size", w.config.size()},
          {"expected_size", w.expected_size}};
}

inline json error_to_json(std::string_view code, const std::string& detail) {
  return {{"error", std::string(code)}, {"detail", detail}};
}

/// Indented "key: value" rendering of a report for humans.
inline void render_text(const json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  auto scalar_array = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return x.is_primitive(); });
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !(value.is_array() && scalar_array(value))) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object()) {
        out << pad << "-\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

}  // namespace splitpeb::io
