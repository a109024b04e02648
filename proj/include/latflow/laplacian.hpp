#pragma once

#include <vector>

#include "linalg.hpp"
#include "multigraph.hpp"
#include "rational.hpp"

namespace latflow {

// exact rational function on vertices
using VertexFn = std::vector<Rat>;

// (Delta f)(y) = sum over edges {y,z} of (f(y) - f(z)); loops contribute zero,
// parallel edges count with multiplicity
inline VertexFn laplacian_apply(const Multigraph& g, const VertexFn& f) {
  if (static_cast<int>(f.size()) != g.n) throw input_error("laplacian_apply: host mismatch");
  VertexFn out(g.n, Rat(0));
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    int u = g.edges[e].u, v = g.edges[e].v;
    out[u] += f[u] - f[v];
    out[v] += f[v] - f[u];
  }
  return out;
}

// reduced Laplacian with vertex `ground` deleted (order: remaining vertices ascending)
inline Mat reduced_laplacian(const Multigraph& g, int ground = 0) {
  std::vector<int> idx(g.n, -1);
  int k = 0;
  for (int v = 0; v < g.n; ++v)
    if (v != ground) idx[v] = k++;
  Mat l(k, std::vector<Rat>(k, Rat(0)));
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    int u = g.edges[e].u, v = g.edges[e].v;
    if (idx[u] >= 0) l[idx[u]][idx[u]] += Rat(1);
    if (idx[v] >= 0) l[idx[v]][idx[v]] += Rat(1);
    if (idx[u] >= 0 && idx[v] >= 0) {
      l[idx[u]][idx[v]] -= Rat(1);
      l[idx[v]][idx[u]] -= Rat(1);
    }
  }
  return l;
}

// exact f with scale * (Delta f) = c, normalized f(vertex 0) = 0;
// unique for connected hosts; requires sum(c) = 0
inline VertexFn solve_laplacian(const Multigraph& g, const VertexFn& c, const Rat& scale) {
  if (static_cast<int>(c.size()) != g.n) throw input_error("solve_laplacian: host mismatch");
  if (scale == Rat(0)) throw input_error("solve_laplacian: zero scale");
  Rat total(0);
  for (const Rat& x : c) total += x;
  if (total != Rat(0)) throw input_error("solve_laplacian: right side does not sum to zero");
  if (g.n == 1) return {Rat(0)};
  std::vector<Rat> rhs;
  for (int v = 1; v < g.n; ++v) rhs.push_back(c[v] / scale);
  SolveResult res = linear_solve(reduced_laplacian(g, 0), rhs);
  check(res.status == SolveStatus::unique, "solve_laplacian: reduced Laplacian singular");
  VertexFn f(g.n, Rat(0));
  for (int v = 1; v < g.n; ++v) f[v] = res.x[v - 1];
  return f;
}

}  // namespace latflow
