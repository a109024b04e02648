#pragma once
// graph ingestion and serialization: text and JSON graph formats, edge-vector
// serialization, poset dumps, DOT Hasse diagrams

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "edge_vector.hpp"
#include "errors.hpp"
#include "multigraph.hpp"
#include "poset.hpp"
#include "rational.hpp"

namespace latflow {

namespace detail {

// group vertices by connected component, for a readable disconnected error
inline std::string component_list(int n, const std::vector<std::pair<int, int>>& edges) {
  UnionFind uf(n);
  for (auto [u, v] : edges) uf.unite(u, v);
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);
  std::string out;
  for (const auto& grp : groups) {
    if (grp.empty()) continue;
    out += out.empty() ? "{" : " {";
    for (size_t i = 0; i < grp.size(); ++i)
      out += (i ? "," : "") + std::to_string(grp[i]);
    out += "}";
  }
  return out;
}

inline Multigraph graph_from_parts(int n, int m, const std::vector<std::pair<int, int>>& edges,
                                   const std::string& where) {
  if (n < 1) throw input_error(where + ": vertex count must be positive");
  if (m != static_cast<int>(edges.size()))
    throw input_error(where + ": declared " + std::to_string(m) + " edges but found " +
                      std::to_string(edges.size()));
  for (auto [u, v] : edges)
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error(where + ": edge endpoint out of range: (" + std::to_string(u) + "," +
                        std::to_string(v) + ") with n=" + std::to_string(n));
  UnionFind uf(n);
  int parts = n;
  for (auto [u, v] : edges)
    if (uf.unite(u, v)) --parts;
  if (parts > 1)
    throw input_error(where + ": graph is not connected; components " + component_list(n, edges));
  return make_graph(n, edges);
}

}  // namespace detail

// line 1: `n m`; then m lines `u v`; `#` starts a comment; blank lines ignored
inline Multigraph parse_graph_text(const std::string& text, const std::string& where = "graph") {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) continue;  // blank or comment-only line
    std::string rest;
    if (!(ls >> b) || (ls >> rest))
      throw input_error(where + " line " + std::to_string(lineno) +
                        ": expected exactly two integers");
    if (a < -1000000 || a > 1000000 || b < -1000000 || b > 1000000)
      throw input_error(where + " line " + std::to_string(lineno) + ": value out of range");
    if (n < 0) {
      n = static_cast<int>(a);
      m = static_cast<int>(b);
      if (n < 1 || m < 0)
        throw input_error(where + " line " + std::to_string(lineno) + ": bad header `n m`");
    } else {
      if (static_cast<int>(edges.size()) == m)
        throw input_error(where + " line " + std::to_string(lineno) + ": more than " +
                          std::to_string(m) + " declared edges");
      edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  }
  if (n < 0) throw input_error(where + ": missing `n m` header line");
  return detail::graph_from_parts(n, m, edges, where);
}

inline Multigraph parse_graph_json(const nlohmann::json& j, const std::string& where = "graph") {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw input_error(where + ": JSON graph needs fields `n` and `edges`");
  if (!j["n"].is_number_integer()) throw input_error(where + ": field `n` must be an integer");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (!j["edges"].is_array()) throw input_error(where + ": field `edges` must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw input_error(where + ": each edge must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  int m = j.contains("m") ? j["m"].get<int>() : static_cast<int>(edges.size());
  return detail::graph_from_parts(n, m, edges, where);
}

inline Multigraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw input_error(path + ": " + e.what());
    }
    return parse_graph_json(j, path);
  }
  return parse_graph_text(text, path);
}

inline std::string graph_to_text(const Multigraph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
  for (const Edge& e : g.edges)
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

inline nlohmann::ordered_json graph_to_json(const Multigraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["m"] = g.m();
  auto& es = j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges) es.push_back({e.u, e.v});
  return j;
}

// edge vectors as arrays of `numerator/denominator` strings indexed by edge-id
inline nlohmann::ordered_json vec_to_json(const VecQ& x) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Rat& r : x)
    arr.push_back(to_string(r.numerator()) + "/" + to_string(r.denominator()));
  return arr;
}

inline nlohmann::ordered_json vec_to_json(const VecZ& x) { return vec_to_json(to_vecq(x)); }

inline VecQ vec_from_json(const nlohmann::json& arr, const std::string& where = "vector") {
  if (!arr.is_array()) throw input_error(where + ": expected a JSON array");
  VecQ x;
  for (const auto& item : arr) {
    if (!item.is_string()) throw input_error(where + ": entries must be rational strings");
    x.push_back(parse_rational(item.get<std::string>()));
  }
  return x;
}

// poset dump: elements with canonical keys and grades, cover relations by index
inline nlohmann::ordered_json poset_to_json(const GradedPoset& p) {
  nlohmann::ordered_json j;
  auto& elems = j["elements"] = nlohmann::ordered_json::array();
  for (int i = 0; i < p.n; ++i) {
    nlohmann::ordered_json e;
    e["key"] = p.key[i];
    e["grade"] = p.grade[i];
    elems.push_back(e);
  }
  auto& cov = j["covers"] = nlohmann::ordered_json::array();
  for (auto [lo, hi] : p.covers) cov.push_back({lo, hi});
  j["grade_counts"] = grade_counts(p);
  return j;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// Hasse diagram with covers drawn upward and elements ranked by grade
inline std::string poset_to_dot(const GradedPoset& p, const std::string& name = "hasse") {
  std::string out = "digraph \"" + detail::dot_escape(name) + "\" {\n";
  out += "  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int i = 0; i < p.n; ++i) {
    std::string label = p.key[i].empty() ? "()" : p.key[i];
    out += "  n" + std::to_string(i) + " [label=\"" + detail::dot_escape(label) + "\"];\n";
  }
  for (auto [lo, hi] : p.covers)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  int top = 0;
  for (int i = 0; i < p.n; ++i) top = std::max(top, p.grade[i]);
  for (int gr = 0; gr <= top; ++gr) {
    std::string rank = "  { rank=same;";
    bool any = false;
    for (int i = 0; i < p.n; ++i)
      if (p.grade[i] == gr) {
        rank += " n" + std::to_string(i) + ";";
        any = true;
      }
    if (any) out += rank + " }\n";
  }
  return out + "}\n";
}

}  // namespace latflow
