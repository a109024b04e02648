#pragma once
// covering numbers of the flow and cut lattices through orientation search:
// well-balanced strong orientations on the flow side, well-unbalanced acyclic
// orientations on the cut side, plus excess-function feasibility

#include <cstdint>
#include <string>
#include <vector>

#include "caps.hpp"
#include "cut_lattice.hpp"
#include "edge_vector.hpp"
#include "errors.hpp"
#include "laplacian.hpp"
#include "linalg.hpp"
#include "multigraph.hpp"
#include "orientations.hpp"
#include "polytope.hpp"
#include "rational.hpp"
#include "voronoi_cut.hpp"
#include "voronoi_flow.hpp"

namespace latflow {

inline bool all_degrees_even(const Multigraph& g) {
  std::vector<int> deg(g.n, 0);
  for (const Edge& e : g.edges) {
    deg[e.u] += 1;
    deg[e.v] += 1;
  }
  for (int y = 0; y < g.n; ++y)
    if (deg[y] % 2 != 0) return false;
  return true;
}

// two-colorability of the underlying graph; a loop is an odd cycle
inline bool is_bipartite(const Multigraph& g) {
  std::vector<int> color(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (const Edge& e : g.edges) {
    if (e.u == e.v) return false;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int root = 0; root < g.n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace detail {

struct StrongEval {
  VecQ v;      // cell vertex, edge coordinates
  VertexFn f;  // grounded potential, Delta(f) = d_out - d_in
  Rat inner;   // <f, Delta f>
  Rat q;       // q(v)
};

// evaluate one full strong orientation of g minus bridges and verify the
// l1 identity, the tension and potential laws, and the corrected constant
// q(v^D) = eps/4 - <f,Df>/4 along the way
inline StrongEval eval_strong_orientation(const Multigraph& g, const OrientedSubgraph& d,
                                          const std::vector<Circuit>& circuits, int eps,
                                          const Caps& caps) {
  StrongEval ev;
  ev.v = vertex_of_orientation(g, d, caps);

  VertexFn c(g.n, Rat(0));  // d_out - d_in
  for (int e = 0; e < g.m(); ++e)
    if (d.dir[e] != 0) {
      c[arc_tail(g, e, d.dir[e])] += Rat(1);
      c[arc_head(g, e, d.dir[e])] -= Rat(1);
    }
  ev.f = solve_laplacian(g, c, Rat(1));
  VertexFn lap = laplacian_apply(g, ev.f);
  ev.inner = Rat(0);
  for (int y = 0; y < g.n; ++y) ev.inner += ev.f[y] * lap[y];
  ev.q = q_form(ev.v);

  check(Rat(2) * ev.q == l1_norm(ev.v), "covering: l1 identity fails at " + arc_key(d));
  check(ev.q == Rat(eps) / Rat(4) - ev.inner / Rat(4),
        "covering: corrected constant identity fails at " + arc_key(d));

  // mu = 2v - 1 on arcs, as an edge vector; it must be the coboundary of f
  // and must vanish against every circuit inside d
  VecQ mu(g.m(), Rat(0));
  for (int e = 0; e < g.m(); ++e)
    if (d.dir[e] != 0) {
      mu[e] = Rat(2) * ev.v[e] - Rat(d.dir[e]);
      Rat step = ev.f[arc_head(g, e, d.dir[e])] - ev.f[arc_tail(g, e, d.dir[e])];
      check(step == Rat(d.dir[e]) * mu[e], "covering: potential law fails at " + arc_key(d));
    }
  for (const Circuit& cir : circuits)
    if (arcs_contained(cir, d))
      check(inner_product(mu, to_vecq(circuit_flow(cir))) == Rat(0),
            "covering: tension law fails at " + arc_key(d));
  return ev;
}

struct FlowSweep {
  Rat max_q = Rat(0), min_inner = Rat(0);
  std::vector<OrientedSubgraph> argmax_q, argmin_inner;
  int eps = 0;
};

inline FlowSweep flow_orientation_sweep(const Multigraph& g, const Caps& caps) {
  FlowSweep s;
  s.eps = g.m() - static_cast<int>(bridges(g).size());
  std::vector<OrientedSubgraph> all = strong_orientations(g, caps);
  check(!all.empty(), "covering: the non-bridge subgraph has no strong orientation");
  std::vector<Circuit> circuits = enumerate_circuits(g, caps);
  bool first = true;
  for (const OrientedSubgraph& d : all) {
    StrongEval ev = eval_strong_orientation(g, d, circuits, s.eps, caps);
    if (first || ev.q > s.max_q) {
      s.max_q = ev.q;
      s.argmax_q.clear();
    }
    if (ev.q == s.max_q) s.argmax_q.push_back(d);
    if (first || ev.inner < s.min_inner) {
      s.min_inner = ev.inner;
      s.argmin_inner.clear();
    }
    if (ev.inner == s.min_inner) s.argmin_inner.push_back(d);
    first = false;
  }
  check(s.argmax_q == s.argmin_inner,
        "covering: well-unbalanced and well-balanced orientation sets differ");
  return s;
}

// deterministic strong orientation of g minus bridges: depth-first trees
// pointing down, back edges pointing up, loops positive
inline OrientedSubgraph dfs_strong_orientation(const Multigraph& g) {
  OrientedSubgraph d = empty_orientation(g);
  std::vector<int> br = bridges(g);
  std::vector<char> is_br(g.m(), 0);
  for (int e : br) is_br[e] = 1;
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (other endpoint, edge)
  for (int e = 0; e < g.m(); ++e) {
    if (is_br[e]) continue;
    if (g.is_loop(e)) {
      d.dir[e] = 1;
      continue;
    }
    adj[g.edges[e].u].push_back({g.edges[e].v, e});
    adj[g.edges[e].v].push_back({g.edges[e].u, e});
  }
  std::vector<char> seen(g.n, 0);
  for (int root = 0; root < g.n; ++root) {
    if (seen[root] || adj[root].empty()) continue;
    seen[root] = 1;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [x, idx] = stack.back();
      if (idx == adj[x].size()) {
        stack.pop_back();
        continue;
      }
      auto [y, e] = adj[x][idx++];
      if (d.dir[e] != 0) continue;
      d.dir[e] = g.edges[e].u == x ? 1 : -1;  // away from x
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back({y, 0});
      }
    }
  }
  check(is_strongly_connected(g, d), "covering: depth-first orientation is not strong");
  return d;
}

}  // namespace detail

struct FlowCoveringReport {
  Rat value;                                // max over strong orientations of q(v^D)
  OrientedSubgraph argmax;                  // first maximizer in arc-key order
  std::vector<OrientedSubgraph> argmax_set;
  Rat inner;                                // <f, Delta f> at the argmax
  int eps = 0;                              // arcs per orientation (non-bridge edges)
  Rat corrected_value;                      // eps/4 - inner/4, equals value
  Rat uncorrected_value;                    // eps/2 - inner/2: before the factor-2 correction
  bool uncorrected_matches = false;
  bool closed_form_applies = false;         // host has all degrees even
  Rat closed_form;                          // |E|/4
  bool closed_form_matches = false;
  Rat uncorrected_closed_form;              // |E|/2: before the factor-2 correction
  bool uncorrected_closed_form_matches = false;
  bool lower_bound_only = false;            // enumeration capped; value is a lower bound
};

inline FlowCoveringReport covering_number_flow(const Multigraph& g, const Caps& caps = Caps{}) {
  FlowCoveringReport rep;
  try {
    detail::FlowSweep s = detail::flow_orientation_sweep(g, caps);
    rep.value = s.max_q;
    rep.argmax = s.argmax_q.front();
    rep.argmax_set = s.argmax_q;
    rep.inner = s.min_inner;
    rep.eps = s.eps;
  } catch (const resource_error&) {
    std::vector<Circuit> circuits = enumerate_circuits(g, caps);
    int eps = g.m() - static_cast<int>(bridges(g).size());
    OrientedSubgraph d = detail::dfs_strong_orientation(g);
    detail::StrongEval ev = detail::eval_strong_orientation(g, d, circuits, eps, caps);
    rep.value = ev.q;
    rep.argmax = d;
    rep.argmax_set = {d};
    rep.inner = ev.inner;
    rep.eps = eps;
    rep.lower_bound_only = true;
  }
  rep.corrected_value = Rat(rep.eps) / Rat(4) - rep.inner / Rat(4);
  check(rep.corrected_value == rep.value, "covering: corrected constant disagrees with maximum");
  rep.uncorrected_value = Rat(rep.eps) / Rat(2) - rep.inner / Rat(2);
  rep.uncorrected_matches = rep.uncorrected_value == rep.value;
  rep.closed_form_applies = all_degrees_even(g);
  if (rep.closed_form_applies) {
    rep.closed_form = Rat(g.m()) / Rat(4);
    rep.closed_form_matches = rep.closed_form == rep.value;
    rep.uncorrected_closed_form = Rat(g.m()) / Rat(2);
    rep.uncorrected_closed_form_matches = rep.uncorrected_closed_form == rep.value;
  }
  return rep;
}

struct WellBalancedResult {
  OrientedSubgraph orientation;  // first minimizer in arc-key order
  Rat inner;                     // the minimum <f, Delta f>
  std::vector<OrientedSubgraph> minimizers;
};

inline WellBalancedResult well_balanced_search(const Multigraph& g, const Caps& caps = Caps{}) {
  detail::FlowSweep s = detail::flow_orientation_sweep(g, caps);
  return {s.argmin_inner.front(), s.min_inner, s.argmin_inner};
}

// feasibility of a prescribed excess c(y) = d_in(y) - d_out(y) over strong
// orientations of a two-edge-connected host: total zero, degree parity, and
// c(X) strictly below the boundary size of every proper nonempty X
inline bool excess_feasible(const Multigraph& g, const std::vector<Int>& c,
                            const Caps& caps = Caps{}) {
  if (static_cast<int>(c.size()) != g.n) throw input_error("excess_feasible: host mismatch");
  if (!bridges(g).empty()) throw input_error("excess_feasible: host is not two-edge-connected");
  if (g.n > caps.max_edges || g.n > 31)
    throw resource_error("excess_feasible: " + std::to_string(g.n) +
                         " vertices exceeds the subset-scan limit");
  Int total(0);
  for (const Int& t : c) total += t;
  if (total != 0) return false;
  std::vector<int> deg(g.n, 0);
  for (const Edge& e : g.edges) {
    deg[e.u] += 1;
    deg[e.v] += 1;
  }
  for (int y = 0; y < g.n; ++y)
    if ((c[y] - deg[y]) % 2 != 0) return false;
  std::uint32_t full = (1u << g.n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Int cx(0);
    for (int y = 0; y < g.n; ++y)
      if (mask & (1u << y)) cx += c[y];
    Int boundary(0);
    for (const Edge& e : g.edges) {
      bool iu = (mask >> e.u) & 1u, iv = (mask >> e.v) & 1u;
      if (iu != iv) boundary += 1;
    }
    if (cx >= boundary) return false;
  }
  return true;
}

struct CutCoveringReport {
  Rat value;                                // max over acyclic orientations of q(nu^D)
  OrientedSubgraph argmax;                  // first maximizer in arc-key order
  std::vector<OrientedSubgraph> argmax_set;
  Rat oracle_value;                         // max of q over the cell's polytope vertices
  bool closed_form_applies = false;         // bipartite host
  Rat closed_form;                          // |E|/4
  bool closed_form_matches = false;
  Rat uncorrected_closed_form;              // |E|/2: before the factor-2 correction
  bool uncorrected_closed_form_matches = false;
};

inline CutCoveringReport covering_number_cut(const Multigraph& g, const Caps& caps = Caps{}) {
  CutCoveringReport rep;
  std::vector<OrientedSubgraph> all = acyclic_orientations(g, caps);
  check(!all.empty(), "covering: no acyclic orientation found");
  bool first = true;
  for (const OrientedSubgraph& d : all) {
    CutVertex cv = vertex_of_acyclic(g, d, caps);
    VertexFn lap = laplacian_apply(g, cv.f);
    Rat inner(0);
    for (int y = 0; y < g.n; ++y) inner += cv.f[y] * lap[y];
    Rat qv = q_form(cv.nu);
    check(qv == inner, "covering: q(d(f)) = <f, Delta f> fails at " + arc_key(d));
    if (first || qv > rep.value) {
      rep.value = qv;
      rep.argmax_set.clear();
    }
    if (qv == rep.value) rep.argmax_set.push_back(d);
    first = false;
  }
  rep.argmax = rep.argmax_set.front();

  if (g.n == 1) {
    rep.oracle_value = Rat(0);
  } else {
    CutCell cell = cut_voronoi_halfspaces(g, caps);
    PolytopeResult poly = face_lattice_bruteforce(cell.rows, g.n - 1, caps);
    bool got = false;
    for (const VecQ& vtx : poly.vertices) {
      Rat qv = q_form(cut_embed(g, vtx));
      if (!got || qv > rep.oracle_value) rep.oracle_value = qv;
      got = true;
    }
    check(got, "covering: cut cell polytope has no vertices");
  }
  check(rep.oracle_value == rep.value, "covering: cut covering number disagrees with the oracle");

  rep.closed_form_applies = is_bipartite(g);
  if (rep.closed_form_applies) {
    rep.closed_form = Rat(g.m()) / Rat(4);
    rep.closed_form_matches = rep.closed_form == rep.value;
    rep.uncorrected_closed_form = Rat(g.m()) / Rat(2);
    rep.uncorrected_closed_form_matches = rep.uncorrected_closed_form == rep.value;
  }
  return rep;
}

// optional hill-climbing for hosts too large to enumerate: repeatedly reverse
// the directed cut at a source vertex while q(nu^D) improves. the flow-side
// analogue (reversing directed circuits) provably preserves the excess and
// hence q(v^D) = eps/4 - <f,Df>/4, so no flow walk is offered. never used for
// acceptance values.
inline OrientedSubgraph well_unbalanced_local_search(const Multigraph& g, OrientedSubgraph d,
                                                     int max_steps = 1000) {
  validate_orientation(g, d);
  if (!is_acyclic(g, d)) throw input_error("local search: orientation has a directed cycle");
  auto objective = [&](const OrientedSubgraph& o) {
    VertexFn excess(g.n, Rat(0));
    for (int e = 0; e < g.m(); ++e)
      if (o.dir[e] != 0) {
        excess[arc_head(g, e, o.dir[e])] += Rat(1);
        excess[arc_tail(g, e, o.dir[e])] -= Rat(1);
      }
    VertexFn f = solve_laplacian(g, excess, Rat(2));
    return q_form(coboundary(g, f));
  };
  Rat best = objective(d);
  for (int step = 0; step < max_steps; ++step) {
    bool improved = false;
    for (int y = 0; y < g.n && !improved; ++y) {
      bool is_source = false;
      OrientedSubgraph cand = d;
      for (int e = 0; e < g.m(); ++e) {
        if (g.is_loop(e) || d.dir[e] == 0) continue;
        if (arc_tail(g, e, d.dir[e]) == y) {
          cand.dir[e] = -cand.dir[e];
          is_source = true;
        } else if (arc_head(g, e, d.dir[e]) == y) {
          is_source = false;
          break;
        }
      }
      if (!is_source) continue;
      Rat qc = objective(cand);
      if (qc > best) {
        best = qc;
        d = cand;
        improved = true;
      }
    }
    if (!improved) break;
  }
  return d;
}

}  // namespace latflow
