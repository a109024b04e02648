#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "errors.hpp"

namespace latflow {

// reference arc: tail u -> head v; u == v is a loop
struct Edge {
  int u = 0, v = 0;
};

// connected multigraph; vertices 0..n-1, edge ids are positions in `edges`
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }
  bool is_loop(int e) const { return edges[e].u == edges[e].v; }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace detail

inline bool is_connected(const Multigraph& g) {
  if (g.n <= 0) return false;
  detail::UnionFind uf(g.n);
  for (const Edge& e : g.edges) uf.unite(e.u, e.v);
  int root = uf.find(0);
  for (int v = 1; v < g.n; ++v)
    if (uf.find(v) != root) return false;
  return true;
}

inline Multigraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw input_error("graph needs at least one vertex");
  Multigraph g;
  g.n = n;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                        std::to_string(v) + ") with n=" + std::to_string(n));
    g.edges.push_back({u, v});
  }
  if (!is_connected(g)) throw input_error("graph is not connected");
  return g;
}

inline int genus(const Multigraph& g) { return g.m() - g.n + 1; }

// genus of the edge-induced subgraph: sum over components of |E_i| - |V_i| + 1;
// vertices not touched by the subset carry no data
inline int subgraph_genus(const Multigraph& g, const std::vector<int>& edge_ids) {
  detail::UnionFind uf(g.n);
  std::vector<char> touched(g.n, 0);
  int e_count = 0;
  for (int e : edge_ids) {
    if (e < 0 || e >= g.m()) throw input_error("unknown edge id " + std::to_string(e));
    ++e_count;
    touched[g.edges[e].u] = touched[g.edges[e].v] = 1;
    uf.unite(g.edges[e].u, g.edges[e].v);
  }
  std::vector<char> seen_root(g.n, 0);
  int v_count = 0, components = 0;
  for (int v = 0; v < g.n; ++v) {
    if (!touched[v]) continue;
    ++v_count;
    int r = uf.find(v);
    if (!seen_root[r]) {
      seen_root[r] = 1;
      ++components;
    }
  }
  return e_count - v_count + components;
}

// edges whose removal disconnects the graph; loops and parallel edges never qualify
inline std::vector<int> bridges(const Multigraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge id)
  for (int e = 0; e < g.m(); ++e)
    if (!g.is_loop(e)) {
      adj[g.edges[e].u].push_back({g.edges[e].v, e});
      adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
  std::vector<int> disc(g.n, -1), low(g.n, 0), out;
  int timer = 0;
  // iterative DFS; skips only the arriving edge instance, so parallels act as back edges
  struct Frame {
    int v, via_edge;
    size_t next = 0;
  };
  std::vector<Frame> stack;
  for (int start = 0; start < g.n; ++start) {
    if (disc[start] != -1) continue;
    disc[start] = low[start] = timer++;
    stack.push_back({start, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.via_edge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int child = f.v, via = f.via_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[child]);
          if (low[child] > disc[parent]) out.push_back(via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// partial orientation: per edge, 0 = absent, +1 = reference direction, -1 = reversed
struct OrientedSubgraph {
  std::vector<int8_t> dir;

  bool operator==(const OrientedSubgraph& o) const { return dir == o.dir; }
  bool operator<(const OrientedSubgraph& o) const { return dir < o.dir; }
};

inline OrientedSubgraph empty_orientation(const Multigraph& g) {
  return OrientedSubgraph{std::vector<int8_t>(g.m(), 0)};
}

inline void validate_orientation(const Multigraph& g, const OrientedSubgraph& d) {
  if (static_cast<int>(d.dir.size()) != g.m())
    throw input_error("orientation has " + std::to_string(d.dir.size()) + " entries, graph has " +
                      std::to_string(g.m()) + " edges");
}

// canonical key: one char per edge id, '.' absent, '+' reference, '-' reversed
inline std::string arc_key(const OrientedSubgraph& d) {
  std::string s(d.dir.size(), '.');
  for (size_t e = 0; e < d.dir.size(); ++e)
    if (d.dir[e] > 0) s[e] = '+';
    else if (d.dir[e] < 0) s[e] = '-';
  return s;
}

inline OrientedSubgraph orientation_from_key(const std::string& key) {
  OrientedSubgraph d;
  d.dir.reserve(key.size());
  for (char c : key) {
    if (c == '.') d.dir.push_back(0);
    else if (c == '+') d.dir.push_back(1);
    else if (c == '-') d.dir.push_back(-1);
    else throw input_error(std::string("bad orientation key char '") + c + "'");
  }
  return d;
}

inline int arc_count(const OrientedSubgraph& d) {
  int c = 0;
  for (int8_t x : d.dir) c += (x != 0);
  return c;
}

inline std::vector<int> oriented_edges(const OrientedSubgraph& d) {
  std::vector<int> out;
  for (size_t e = 0; e < d.dir.size(); ++e)
    if (d.dir[e] != 0) out.push_back(static_cast<int>(e));
  return out;
}

// arcs(inner) subseteq arcs(outer), directions included
inline bool arcs_contained(const OrientedSubgraph& inner, const OrientedSubgraph& outer) {
  for (size_t e = 0; e < inner.dir.size(); ++e)
    if (inner.dir[e] != 0 && inner.dir[e] != outer.dir[e]) return false;
  return true;
}

inline OrientedSubgraph reversed(const OrientedSubgraph& d) {
  OrientedSubgraph r = d;
  for (auto& x : r.dir) x = -x;
  return r;
}

inline int arc_tail(const Multigraph& g, int e, int8_t dir) {
  return dir > 0 ? g.edges[e].u : g.edges[e].v;
}
inline int arc_head(const Multigraph& g, int e, int8_t dir) {
  return dir > 0 ? g.edges[e].v : g.edges[e].u;
}

// every connected component of the underlying subgraph is strongly connected;
// the empty orientation passes vacuously, a lone oriented loop passes
inline bool is_strongly_connected(const Multigraph& g, const OrientedSubgraph& d) {
  validate_orientation(g, d);
  std::vector<int> es = oriented_edges(d);
  if (es.empty()) return true;
  detail::UnionFind uf(g.n);
  std::vector<char> touched(g.n, 0);
  std::vector<std::vector<int>> fwd(g.n), bwd(g.n);
  for (int e : es) {
    int t = arc_tail(g, e, d.dir[e]), h = arc_head(g, e, d.dir[e]);
    touched[t] = touched[h] = 1;
    uf.unite(t, h);
    fwd[t].push_back(h);
    bwd[h].push_back(t);
  }
  auto reach = [&](int root, const std::vector<std::vector<int>>& next) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : next[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return seen;
  };
  std::vector<char> root_done(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (!touched[v]) continue;
    int r = uf.find(v);
    if (root_done[r]) continue;
    root_done[r] = 1;
    auto f = reach(v, fwd), b = reach(v, bwd);
    for (int w = 0; w < g.n; ++w)
      if (touched[w] && uf.find(w) == r && (!f[w] || !b[w])) return false;
  }
  return true;
}

// no directed cycle among the arcs; a loop arc is itself a cycle
inline bool is_acyclic(const Multigraph& g, const OrientedSubgraph& d) {
  validate_orientation(g, d);
  std::vector<int> indeg(g.n, 0);
  std::vector<std::vector<int>> fwd(g.n);
  int arcs = 0;
  for (int e = 0; e < g.m(); ++e) {
    if (d.dir[e] == 0) continue;
    if (g.is_loop(e)) return false;
    ++arcs;
    int t = arc_tail(g, e, d.dir[e]), h = arc_head(g, e, d.dir[e]);
    fwd[t].push_back(h);
    ++indeg[h];
  }
  if (arcs == 0) return true;
  std::vector<int> queue;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  size_t qi = 0;
  int removed = 0;
  while (qi < queue.size()) {
    int v = queue[qi++];
    ++removed;
    for (int w : fwd[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return removed == g.n;
}

// a circuit is a simple cycle with a traversal direction, stored as its arc set
using Circuit = OrientedSubgraph;

inline int circuit_length(const Circuit& c) { return arc_count(c); }

namespace detail {

// if the edge subset is a simple cycle, emit its two traversals (subset order preserved)
inline void emit_circuit_pair(const Multigraph& g, const std::vector<int>& es,
                              std::vector<Circuit>& out) {
  std::vector<int> deg(g.n, 0);
  for (int e : es) {
    deg[g.edges[e].u] += 1;
    deg[g.edges[e].v] += 1;  // a loop contributes 2 to its vertex
  }
  UnionFind uf(g.n);
  for (int e : es) uf.unite(g.edges[e].u, g.edges[e].v);
  int root = uf.find(g.edges[es[0]].u);
  for (int e : es) {
    for (int v : {g.edges[e].u, g.edges[e].v}) {
      if (deg[v] != 2) return;
      if (uf.find(v) != root) return;
    }
  }
  // degrees all 2 and connected: a single cycle; walk it from the smallest edge
  Circuit c{std::vector<int8_t>(g.m(), 0)};
  std::vector<char> used(es.size(), 0);
  int e0 = es[0];
  c.dir[e0] = 1;
  used[0] = 1;
  int start = g.edges[e0].u, cur = g.edges[e0].v;
  while (cur != start || std::count(used.begin(), used.end(), 1) <
                             static_cast<long>(es.size())) {
    bool advanced = false;
    for (size_t i = 0; i < es.size(); ++i) {
      if (used[i]) continue;
      int e = es[i];
      if (g.edges[e].u == cur) {
        c.dir[e] = 1;
        cur = g.edges[e].v;
      } else if (g.edges[e].v == cur) {
        c.dir[e] = -1;
        cur = g.edges[e].u;
      } else {
        continue;
      }
      used[i] = 1;
      advanced = true;
      break;
    }
    if (!advanced) return;  // walk stuck: not a single closed traversal
  }
  out.push_back(c);
  out.push_back(reversed(c));
}

}  // namespace detail

// all simple cycles in both traversal directions; loops give length-1 circuits,
// parallel pairs give length-2 circuits
inline std::vector<Circuit> enumerate_circuits(const Multigraph& g, const Caps& caps = Caps{}) {
  if (g.m() > caps.max_edges)
    throw resource_error("enumerate_circuits: " + std::to_string(g.m()) +
                         " edges exceeds max_edges=" + std::to_string(caps.max_edges));
  std::vector<Circuit> out;
  for (std::uint32_t mask = 1; mask < (1u << g.m()); ++mask) {
    std::vector<int> es;
    for (int e = 0; e < g.m(); ++e)
      if (mask & (1u << e)) es.push_back(e);
    detail::emit_circuit_pair(g, es, out);
  }
  return out;
}

// fundamental circuits of the smallest-edge-id spanning tree; chord traversed forward
inline std::vector<Circuit> cycle_basis(const Multigraph& g) {
  detail::UnionFind uf(g.n);
  std::vector<char> in_tree(g.m(), 0);
  for (int e = 0; e < g.m(); ++e)
    if (!g.is_loop(e) && uf.unite(g.edges[e].u, g.edges[e].v)) in_tree[e] = 1;
  std::vector<std::vector<std::pair<int, int>>> tree_adj(g.n);
  for (int e = 0; e < g.m(); ++e)
    if (in_tree[e]) {
      tree_adj[g.edges[e].u].push_back({g.edges[e].v, e});
      tree_adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
  std::vector<Circuit> basis;
  for (int c = 0; c < g.m(); ++c) {
    if (in_tree[c]) continue;
    Circuit circ{std::vector<int8_t>(g.m(), 0)};
    circ.dir[c] = 1;
    int from = g.edges[c].v, to = g.edges[c].u;  // tree path closing the chord
    if (from != to) {
      std::vector<int> parent(g.n, -1), parent_edge(g.n, -1);
      std::vector<int> stack{to};
      parent[to] = to;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : tree_adj[v])
          if (parent[w] == -1) {
            parent[w] = v;
            parent_edge[w] = e;
            stack.push_back(w);
          }
      }
      for (int v = from; v != to; v = parent[v]) {
        int e = parent_edge[v];
        circ.dir[e] = (g.edges[e].u == v) ? 1 : -1;  // traversal v -> parent(v)
      }
    }
    basis.push_back(circ);
  }
  return basis;
}

}  // namespace latflow
