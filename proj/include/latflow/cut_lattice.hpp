#pragma once

#include <cstdint>
#include <vector>

#include "edge_vector.hpp"
#include "laplacian.hpp"
#include "linalg.hpp"
#include "multigraph.hpp"

namespace latflow {

// tension of a potential: d(f)(e) = f(head) - f(tail); loops map to zero
inline VecQ coboundary(const Multigraph& g, const VertexFn& f) {
  if (static_cast<int>(f.size()) != g.n) throw input_error("coboundary: host mismatch");
  VecQ out(g.m(), Rat(0));
  for (int e = 0; e < g.m(); ++e) out[e] = f[g.edges[e].v] - f[g.edges[e].u];
  return out;
}

inline std::vector<int> subset_vertices(const Multigraph& g, std::uint32_t mask) {
  std::vector<int> vs;
  for (int v = 0; v < g.n; ++v)
    if (mask & (1u << v)) vs.push_back(v);
  return vs;
}

// +1 on arcs from C to its complement, -1 on the reverse, 0 elsewhere (and on loops)
inline VecZ cut_element(const Multigraph& g, std::uint32_t c_mask) {
  if (g.n > 31) throw input_error("cut_element: vertex count too large for subset masks");
  if (c_mask >= (1u << g.n)) throw input_error("cut_element: unknown vertices in subset");
  VecZ out(g.m(), Int(0));
  for (int e = 0; e < g.m(); ++e) {
    bool u_in = c_mask & (1u << g.edges[e].u), v_in = c_mask & (1u << g.edges[e].v);
    if (u_in && !v_in) out[e] = 1;
    else if (!u_in && v_in) out[e] = -1;
  }
  return out;
}

namespace detail {

inline int induced_components(const Multigraph& g, std::uint32_t mask) {
  UnionFind uf(g.n);
  for (const Edge& e : g.edges)
    if ((mask & (1u << e.u)) && (mask & (1u << e.v))) uf.unite(e.u, e.v);
  int count = 0;
  std::vector<char> seen(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (!(mask & (1u << v))) continue;
    int r = uf.find(v);
    if (!seen[r]) {
      seen[r] = 1;
      ++count;
    }
  }
  return count;
}

}  // namespace detail

// kappa(C, V\C) = components of G[C] + components of G[V\C] - 1; bonds have kappa 1
inline int cut_rank(const Multigraph& g, std::uint32_t c_mask) {
  std::uint32_t full = (1u << g.n) - 1;
  if (c_mask == 0 || (c_mask & ~full) != 0 || c_mask == full)
    throw input_error("cut_rank: subset must be proper and nonempty");
  return detail::induced_components(g, c_mask) +
         detail::induced_components(g, full & ~c_mask) - 1;
}

struct Bond {
  std::uint32_t c_mask;
  VecZ vec;
};

// all bond vectors d(chi) with kappa = 1, both signs (C and its complement both listed)
inline std::vector<Bond> bonds(const Multigraph& g, const Caps& caps = Caps{}) {
  if (g.n > caps.max_edges)
    throw resource_error("bonds: " + std::to_string(g.n) +
                         " vertices exceeds max_edges=" + std::to_string(caps.max_edges));
  std::vector<Bond> out;
  std::uint32_t full = (1u << g.n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask)
    if (cut_rank(g, mask) == 1) out.push_back({mask, cut_element(g, mask)});
  return out;
}

// membership in K = im(d): sum around every circuit vanishes
inline bool in_cut_space(const Multigraph& g, const VecQ& x) {
  for (const Circuit& c : cycle_basis(g))
    if (inner_product(x, to_vecq(circuit_flow(c))) != Rat(0)) return false;
  return true;
}

// +-1-valued element of the cut lattice; its support is a coherent orientation
// of an oriented cut subgraph (the cut-side mirror of an Eulerian flow element)
inline bool is_cut_element(const Multigraph& g, const VecZ& x) {
  if (static_cast<int>(x.size()) != g.m()) throw input_error("is_cut_element: host mismatch");
  for (const Int& v : x)
    if (v < -1 || v > 1) return false;
  return in_cut_space(g, to_vecq(x));
}

/// working coordinates for K: d(chi_v) for v = 1..n-1 (vertex 0 grounded);
// coordinates of d(f) with f(0) = 0 are just the remaining f values
struct CutBasis {
  std::vector<VecZ> vecs;  // d(chi_v), v = 1..n-1
  Mat gram;                // equals the reduced Laplacian

  int dim() const { return static_cast<int>(vecs.size()); }
};

inline CutBasis cut_basis_of(const Multigraph& g) {
  CutBasis b;
  for (int v = 1; v < g.n; ++v) {
    VertexFn chi(g.n, Rat(0));
    chi[v] = Rat(1);
    VecQ col = coboundary(g, chi);
    VecZ colz(g.m());
    for (int e = 0; e < g.m(); ++e) colz[e] = col[e].numerator();
    b.vecs.push_back(colz);
  }
  b.gram.assign(b.dim(), std::vector<Rat>(b.dim(), Rat(0)));
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) b.gram[i][j] = Rat(inner_product(b.vecs[i], b.vecs[j]));
  return b;
}

// recover the grounded potential of a cut-space vector by tree integration
inline VertexFn potential_of(const Multigraph& g, const VecQ& x) {
  if (static_cast<int>(x.size()) != g.m()) throw input_error("potential_of: host mismatch");
  VertexFn f(g.n, Rat(0));
  std::vector<char> known(g.n, 0);
  known[0] = 1;
  detail::UnionFind uf(g.n);
  std::vector<std::vector<std::pair<int, int>>> tree_adj(g.n);
  for (int e = 0; e < g.m(); ++e)
    if (!g.is_loop(e) && uf.unite(g.edges[e].u, g.edges[e].v)) {
      tree_adj[g.edges[e].u].push_back({g.edges[e].v, e});
      tree_adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : tree_adj[v])
      if (!known[w]) {
        known[w] = 1;
        f[w] = g.edges[e].v == w ? f[v] + x[e] : f[v] - x[e];
        stack.push_back(w);
      }
  }
  if (coboundary(g, f) != x) throw input_error("potential_of: vector is not in the cut space");
  return f;
}

inline std::vector<Rat> cut_coords(const Multigraph& g, const VecQ& x) {
  VertexFn f = potential_of(g, x);
  return std::vector<Rat>(f.begin() + 1, f.end());
}

inline VecQ cut_embed(const Multigraph& g, const std::vector<Rat>& coords) {
  if (static_cast<int>(coords.size()) != g.n - 1) throw input_error("cut_embed: bad dimension");
  VertexFn f(g.n, Rat(0));
  for (int v = 1; v < g.n; ++v) f[v] = coords[v - 1];
  return coboundary(g, f);
}

struct CutVertex {
  VecQ nu;       // edge coordinates of the Voronoi-cell vertex
  VertexFn f;    // the grounded potential, nu = d(f)
};

// the cell vertex of a full acyclic orientation, solved two independent ways:
// the Laplacian route 2*Delta(f) = d_in - d_out with nu = d(f), and the linear
// system of bond equalities 2<x, lambda> = q(lambda) over bonds inside d
inline CutVertex vertex_of_acyclic(const Multigraph& g, const OrientedSubgraph& d,
                                   const Caps& caps = Caps{}) {
  validate_orientation(g, d);
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e) && d.dir[e] != 0)
      throw input_error("vertex_of_acyclic: orientation contains a loop arc");
    if (!g.is_loop(e) && d.dir[e] == 0)
      throw input_error("vertex_of_acyclic: orientation must cover every non-loop edge");
  }
  if (!is_acyclic(g, d)) throw input_error("vertex_of_acyclic: orientation has a directed cycle");

  VertexFn excess(g.n, Rat(0));  // d_in - d_out
  for (int e = 0; e < g.m(); ++e)
    if (d.dir[e] != 0) {
      excess[arc_head(g, e, d.dir[e])] += Rat(1);
      excess[arc_tail(g, e, d.dir[e])] -= Rat(1);
    }
  VertexFn f = solve_laplacian(g, excess, Rat(2));
  VecQ nu = coboundary(g, f);

  // independent route: bond equalities, solved in cut coordinates
  CutBasis basis = cut_basis_of(g);
  std::vector<Bond> all_bonds = bonds(g, caps);
  Mat rows;
  std::vector<Rat> rhs;
  for (const Bond& b : all_bonds) {
    if (!arcs_contained(support(g, b.vec), d)) continue;
    std::vector<Rat> lam_coords = cut_coords(g, to_vecq(b.vec));
    std::vector<Rat> normal = mat_vec(basis.gram, lam_coords);
    for (Rat& v : normal) v *= Rat(2);
    rows.push_back(normal);
    rhs.push_back(Rat(q_form(b.vec)));
  }
  if (g.n > 1) {
    SolveResult res = linear_solve(rows, rhs);
    check(res.status == SolveStatus::unique,
          "vertex_of_acyclic: bond equalities do not pin a unique point for " + arc_key(d));
    check(cut_embed(g, res.x) == nu,
          "vertex_of_acyclic: Laplacian route and bond-equality route disagree for " +
              arc_key(d));
  }

  // feasibility and the equality pattern against every bond
  for (const Bond& b : all_bonds) {
    Rat lhs = Rat(2) * inner_product(nu, to_vecq(b.vec));
    Rat qb = Rat(q_form(b.vec));
    check(lhs <= qb, "vertex_of_acyclic: bond inequality violated at " + arc_key(d));
    bool inside = arcs_contained(support(g, b.vec), d);
    check((lhs == qb) == inside,
          "vertex_of_acyclic: bond equality pattern mismatch at " + arc_key(d));
  }
  return {nu, f};
}

}  // namespace latflow
