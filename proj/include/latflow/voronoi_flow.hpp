#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "edge_vector.hpp"
#include "laplacian.hpp"
#include "linalg.hpp"
#include "multigraph.hpp"
#include "orientations.hpp"
#include "polytope.hpp"

namespace latflow {

// fundamental-cycle basis of the flow space: one circuit per non-tree edge,
// carrying +1 on its chord and 0 on every other chord
struct FlowBasis {
  std::vector<VecZ> basis;
  std::vector<int> chords;  // ascending edge ids of the non-tree edges
  Mat gram;                 // gram[i][j] = <basis_i, basis_j>
  int dim() const { return static_cast<int>(basis.size()); }
};

inline FlowBasis flow_basis_of(const Multigraph& g) {
  FlowBasis fb;
  fb.basis = flow_basis(g);
  detail::UnionFind uf(g.n);
  std::vector<char> in_tree(g.m(), 0);
  for (int e = 0; e < g.m(); ++e)
    if (!g.is_loop(e) && uf.unite(g.edges[e].u, g.edges[e].v)) in_tree[e] = 1;
  for (int e = 0; e < g.m(); ++e)
    if (!in_tree[e]) fb.chords.push_back(e);
  check(fb.chords.size() == fb.basis.size(), "flow_basis_of: chord/basis mismatch");
  for (size_t i = 0; i < fb.chords.size(); ++i)
    check(fb.basis[i][fb.chords[i]] == 1, "flow_basis_of: chord not normalized to +1");
  int d = fb.dim();
  fb.gram.assign(d, VecQ(d, Rat(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) fb.gram[i][j] = Rat(inner_product(fb.basis[i], fb.basis[j]));
  return fb;
}

// coordinates of x in the fundamental-cycle basis, read off the chord entries;
// rejects vectors outside the span (= outside the flow space)
inline VecQ flow_coords(const Multigraph& g, const FlowBasis& fb, const VecQ& x) {
  if (static_cast<int>(x.size()) != g.m()) throw input_error("flow_coords: host mismatch");
  VecQ c;
  c.reserve(fb.chords.size());
  for (int e : fb.chords) c.push_back(x[e]);
  VecQ rebuilt(g.m(), Rat(0));
  for (int i = 0; i < fb.dim(); ++i)
    for (int e = 0; e < g.m(); ++e) rebuilt[e] += c[i] * Rat(fb.basis[i][e]);
  if (rebuilt != x) throw input_error("flow_coords: vector is not in the flow space");
  return c;
}

inline VecQ flow_embed(const Multigraph& g, const FlowBasis& fb, const VecQ& coords) {
  if (static_cast<int>(coords.size()) != fb.dim())
    throw input_error("flow_embed: coordinate size mismatch");
  VecQ x(g.m(), Rat(0));
  for (int i = 0; i < fb.dim(); ++i)
    for (int e = 0; e < g.m(); ++e) x[e] += coords[i] * Rat(fb.basis[i][e]);
  return x;
}

// the Eulerian lattice elements of genus 1: circuit flows, both directions
inline std::vector<VecZ> xi1(const Multigraph& g, const Caps& caps = Caps{}) {
  std::vector<VecZ> out;
  for (const Circuit& c : enumerate_circuits(g, caps)) out.push_back(circuit_flow(c));
  return out;
}

// H-representation of the flow Voronoi cell in basis coordinates, one row
// 2<x, lambda> <= q(lambda) per circuit flow lambda
struct FlowCell {
  FlowBasis fb;
  std::vector<Circuit> circuits;  // row i comes from circuits[i]
  std::vector<Halfspace> rows;
};

inline FlowCell voronoi_halfspaces(const Multigraph& g, const Caps& caps = Caps{}) {
  FlowCell cell;
  cell.fb = flow_basis_of(g);
  cell.circuits = enumerate_circuits(g, caps);
  for (const Circuit& c : cell.circuits) {
    VecZ lam = circuit_flow(c);
    VecQ a(cell.fb.dim());
    for (int i = 0; i < cell.fb.dim(); ++i)
      a[i] = Rat(2 * inner_product(cell.fb.basis[i], lam));
    cell.rows.push_back({a, Rat(circuit_length(c))});
  }
  return cell;
}

// the unique point with 2<v, x^C> = length(C) for every circuit C inside d,
// computed from the full circuit equation system and cross-checked against the
// potential route f = solve_laplacian(d_out - d_in, 1), v_arc = (f(head)-f(tail)+1)/2
inline VecQ vertex_of_orientation(const Multigraph& g, const OrientedSubgraph& d,
                                  const Caps& caps = Caps{}) {
  validate_orientation(g, d);
  std::vector<int> nonbridge_missing;
  std::vector<char> is_bridge(g.m(), 0);
  for (int e : bridges(g)) is_bridge[e] = 1;
  for (int e = 0; e < g.m(); ++e) {
    bool oriented = d.dir[e] != 0;
    if (oriented && is_bridge[e])
      throw input_error("vertex_of_orientation: orientation includes a bridge");
    if (!oriented && !is_bridge[e])
      throw input_error("vertex_of_orientation: non-bridge edge left unoriented");
  }
  if (!is_strongly_connected(g, d))
    throw input_error("vertex_of_orientation: orientation is not strongly connected");

  FlowBasis fb = flow_basis_of(g);
  int dim = fb.dim();
  VecQ v(g.m(), Rat(0));
  std::vector<Circuit> circuits = enumerate_circuits(g, caps);
  if (dim > 0) {
    Mat A;
    VecQ b;
    for (const Circuit& c : circuits) {
      if (!arcs_contained(c, d)) continue;
      VecZ lam = circuit_flow(c);
      VecQ row(dim);
      for (int i = 0; i < dim; ++i) row[i] = Rat(2 * inner_product(fb.basis[i], lam));
      A.push_back(row);
      b.push_back(Rat(circuit_length(c)));
    }
    SolveResult res = linear_solve(A, b);
    check(res.status == SolveStatus::unique,
          "vertex_of_orientation: circuit equation system not uniquely solvable for " +
              arc_key(d));
    v = flow_embed(g, fb, res.x);
  }

  // independent potential route
  {
    VertexFn excess(g.n, Rat(0));
    for (int e = 0; e < g.m(); ++e)
      if (d.dir[e] != 0) {
        excess[arc_tail(g, e, d.dir[e])] += 1;
        excess[arc_head(g, e, d.dir[e])] -= 1;
      }
    VertexFn f = solve_laplacian(g, excess, Rat(1));
    VecQ w(g.m(), Rat(0));
    for (int e = 0; e < g.m(); ++e)
      if (d.dir[e] != 0) {
        Rat varc = (f[arc_head(g, e, d.dir[e])] - f[arc_tail(g, e, d.dir[e])] + 1) / 2;
        w[e] = Rat(d.dir[e]) * varc;
      }
    check(w == v, "vertex_of_orientation: circuit-system and potential routes disagree for " +
                      arc_key(d));
  }

  // defining inequalities: tight exactly on the circuits inside d
  for (const Circuit& c : circuits) {
    Rat lhs = 2 * inner_product(v, to_vecq(circuit_flow(c)));
    Rat rhs{circuit_length(c)};
    check(lhs <= rhs, "vertex_of_orientation: halfspace violated at " + arc_key(d));
    check((lhs == rhs) == arcs_contained(c, d),
          "vertex_of_orientation: tightness pattern wrong at " + arc_key(d));
  }
  return v;
}

// combinatorial face data: for each strongly connected element D, the face is
// spanned by the vertices v^{D'} of its full strong extensions D'
struct CombFacePoset {
  OrientPoset sc;
  std::vector<VecQ> verts;           // sorted vertex points, edge coordinates
  std::vector<int> vert_elem;        // verts[i] belongs to sc element vert_elem[i]
  std::vector<Bitset> face_verts;    // per sc element
  std::vector<std::vector<int>> active_circuits;  // per sc element, circuit row ids
  std::vector<Circuit> circuits;
  GradedPoset poset;                 // rebuilt from vertex sets and affine ranks
};

inline CombFacePoset face_poset_combinatorial(const Multigraph& g, const Caps& caps = Caps{}) {
  CombFacePoset fp;
  fp.sc = enumerate_sc(g, caps);
  fp.circuits = enumerate_circuits(g, caps);
  int n = fp.sc.poset.n;
  int gg = genus(g);

  std::vector<int> full_ids;
  for (int i = 0; i < n; ++i)
    if (fp.sc.poset.grade[i] == 0) full_ids.push_back(i);
  std::map<VecQ, int> vert_elem_of;
  for (int i : full_ids) {
    VecQ v = vertex_of_orientation(g, fp.sc.elems[i], caps);
    check(!vert_elem_of.count(v), "face_poset_combinatorial: two orientations share a vertex");
    vert_elem_of[v] = i;
  }
  std::map<int, int> vert_id_of_elem;
  for (auto& [pt, elem] : vert_elem_of) {
    vert_id_of_elem[elem] = static_cast<int>(fp.verts.size());
    fp.verts.push_back(pt);
    fp.vert_elem.push_back(elem);
  }
  int nv = static_cast<int>(fp.verts.size());

  std::vector<int> grades(n);
  std::vector<std::string> keys(n);
  fp.face_verts.assign(n, Bitset(nv));
  fp.active_circuits.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int full : full_ids)
      if (arcs_contained(fp.sc.elems[i], fp.sc.elems[full]))
        fp.face_verts[i].set(vert_id_of_elem[full]);
    check(fp.face_verts[i].any(),
          "face_poset_combinatorial: element with no strong extension: " + fp.sc.poset.key[i]);
    for (size_t c = 0; c < fp.circuits.size(); ++c)
      if (arcs_contained(fp.circuits[c], fp.sc.elems[i]))
        fp.active_circuits[i].push_back(static_cast<int>(c));
    std::vector<VecQ> pts;
    for (size_t b = fp.face_verts[i].find_first(); b != Bitset::npos;
         b = fp.face_verts[i].find_next(b))
      pts.push_back(fp.verts[b]);
    grades[i] = affine_rank(pts);
    // codimension law: codim of the face = genus of the support subgraph
    check(gg - grades[i] == subgraph_genus(g, oriented_edges(fp.sc.elems[i])),
          "face_poset_combinatorial: codimension law fails at " + fp.sc.poset.key[i]);
    check(grades[i] == fp.sc.poset.grade[i],
          "face_poset_combinatorial: geometric grade disagrees with poset grade at " +
              fp.sc.poset.key[i]);
    keys[i] = fp.sc.poset.key[i];
  }

  // vertex-set inclusion must mirror reverse arc containment, pairwise
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      bool geo = fp.face_verts[a] != fp.face_verts[b] &&
                 fp.face_verts[a].is_subset_of(fp.face_verts[b]);
      bool comb = fp.sc.poset.less(a, b);
      check(geo == comb, "face_poset_combinatorial: order mismatch between " + keys[a] +
                             " and " + keys[b]);
      if (fp.face_verts[a] == fp.face_verts[b])
        check(false, "face_poset_combinatorial: injectivity fails: " + keys[a] + " vs " +
                         keys[b]);
    }

  auto less = [&](int a, int b) {
    return fp.face_verts[a] != fp.face_verts[b] &&
           fp.face_verts[a].is_subset_of(fp.face_verts[b]);
  };
  fp.poset = build_poset(grades, keys, less, caps);
  check(fp.poset.covers == fp.sc.poset.covers,
        "face_poset_combinatorial: cover relation differs from the orientation poset");
  return fp;
}

// exact nearest lattice points and squared distance, by complete enumeration in
// an ellipsoid box certified by the covering radius bound max_D q(v^D)
struct ClosestPointResult {
  std::vector<VecZ> minimizers;  // edge coordinates, sorted
  Rat dist_sq;
};

inline Int floor_rat(const Rat& r) {
  Int f = r.numerator() / r.denominator();
  if (r < Rat(f)) f -= 1;
  return f;
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline ClosestPointResult closest_lattice_point(const Multigraph& g, const VecQ& x,
                                                const Caps& caps = Caps{}) {
  FlowBasis fb = flow_basis_of(g);
  VecQ c = flow_coords(g, fb, x);  // validates x in the flow space
  int dim = fb.dim();
  ClosestPointResult res;
  if (dim == 0) {
    res.minimizers.push_back(VecZ(g.m(), Int(0)));
    res.dist_sq = Rat(0);
    return res;
  }
  Rat rho_sq(0);
  for (const OrientedSubgraph& d : strong_orientations(g, caps))
    rho_sq = std::max(rho_sq, q_form(vertex_of_orientation(g, d, caps)));

  // axis bounds of the ellipsoid (c-n)^T G (c-n) <= rho^2: |c_i - n_i| <= sqrt(rho^2 Ginv_ii)
  std::vector<Int> lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    VecQ e(dim, Rat(0));
    e[i] = Rat(1);
    SolveResult inv = linear_solve(fb.gram, e);
    check(inv.status == SolveStatus::unique, "closest_lattice_point: singular Gram matrix");
    Int s = ceil_isqrt(rho_sq * inv.x[i]);
    lo[i] = ceil_rat(c[i]) - s;
    hi[i] = floor_rat(c[i]) + s;
  }

  std::vector<Int> n_vec(lo);
  std::vector<std::pair<VecQ, VecZ>> best;  // (coords diff is implicit) store point
  bool first = true;
  while (true) {
    VecQ diff(dim);
    for (int i = 0; i < dim; ++i) diff[i] = c[i] - Rat(n_vec[i]);
    Rat qq(0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) qq += diff[i] * fb.gram[i][j] * diff[j];
    if (first || qq < res.dist_sq) {
      res.dist_sq = qq;
      best.clear();
      first = false;
    }
    if (qq == res.dist_sq) {
      VecQ coords(dim);
      for (int i = 0; i < dim; ++i) coords[i] = Rat(n_vec[i]);
      VecQ pt = flow_embed(g, fb, coords);
      VecZ ipt;
      for (const Rat& t : pt) {
        check(t.denominator() == 1, "closest_lattice_point: non-integer lattice point");
        ipt.push_back(t.numerator());
      }
      best.push_back({pt, ipt});
    }
    int k = 0;
    while (k < dim && n_vec[k] == hi[k]) {
      n_vec[k] = lo[k];
      ++k;
    }
    if (k == dim) break;
    n_vec[k] += 1;
  }
  std::sort(best.begin(), best.end());
  for (auto& [pt, ipt] : best) res.minimizers.push_back(ipt);
  return res;
}

// box scan over lattice elements: midpoint criterion vs Eulerian characterization,
// plus codimension and facet laws for the intersecting pairs
struct DelaunayReport {
  int checked = 0;
  int eulerian = 0;
  bool pass = true;
  std::vector<std::string> failures;
};

inline DelaunayReport delaunay_adjacency_check(const Multigraph& g, const Caps& caps = Caps{},
                                               int box = 2) {
  DelaunayReport rep;
  FlowCell cell = voronoi_halfspaces(g, caps);
  int dim = cell.fb.dim();
  if (dim == 0) return rep;
  PolytopeResult poly = face_lattice_bruteforce(cell.rows, dim, caps);
  std::vector<VecZ> xi = xi1(g, caps);
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.failures.push_back(msg);
  };

  // row-vertex dots precomputed once; inside the box loop only offsets vary
  size_t nr = cell.rows.size(), nv = poly.vertices.size();
  std::vector<std::vector<Rat>> vdots(nv, std::vector<Rat>(nr, Rat(0)));
  for (size_t vi = 0; vi < nv; ++vi)
    for (size_t r = 0; r < nr; ++r)
      for (int i = 0; i < dim; ++i) vdots[vi][r] += cell.rows[r].a[i] * poly.vertices[vi][i];

  std::vector<Int> n_vec(dim, Int(-box));
  while (true) {
    bool all_zero = true;
    for (const Int& t : n_vec)
      if (t != 0) all_zero = false;
    if (!all_zero) {
      ++rep.checked;
      VecZ lam(g.m(), Int(0));
      for (int i = 0; i < dim; ++i)
        for (int e = 0; e < g.m(); ++e) lam[e] += n_vec[i] * cell.fb.basis[i][e];
      std::vector<Rat> offs(nr, Rat(0));
      for (size_t r = 0; r < nr; ++r)
        for (int i = 0; i < dim; ++i) offs[r] += cell.rows[r].a[i] * Rat(n_vec[i]);

      bool midpoint_in = true;
      for (size_t r = 0; r < nr; ++r)
        if (offs[r] > 2 * cell.rows[r].b) {
          midpoint_in = false;
          break;
        }
      bool eulerian = is_eulerian_element(g, lam);
      if (midpoint_in != eulerian)
        fail("midpoint/Eulerian disagreement at lattice point " + vec_to_string(lam));

      // common vertices of the two cells
      Bitset common(nv);
      for (size_t vi = 0; vi < nv; ++vi) {
        bool inside = true;
        for (size_t r = 0; r < nr; ++r)
          if (vdots[vi][r] - offs[r] > cell.rows[r].b) {
            inside = false;
            break;
          }
        if (inside) common.set(vi);
      }
      if (!eulerian) {
        if (common.any()) fail("disjoint cells share a vertex at " + vec_to_string(lam));
      } else {
        ++rep.eulerian;
        if (!common.any()) {
          fail("Eulerian translate shares no vertex at " + vec_to_string(lam));
        } else {
          if (face_index(poly, common) < 0)
            fail("cell intersection is not a face at " + vec_to_string(lam));
          std::vector<VecQ> pts;
          for (size_t b = common.find_first(); b != Bitset::npos; b = common.find_next(b))
            pts.push_back(poly.vertices[b]);
          int codim = dim - affine_rank(pts);
          int want = subgraph_genus(g, oriented_edges(support(g, lam)));
          if (codim != want)
            fail("codimension law fails at " + vec_to_string(lam) + ": codim " +
                 std::to_string(codim) + " vs genus " + std::to_string(want));
          bool in_xi = std::find(xi.begin(), xi.end(), lam) != xi.end();
          if ((codim == 1) != in_xi)
            fail("facet criterion fails at " + vec_to_string(lam));
        }
      }
    }
    int k = 0;
    while (k < dim && n_vec[k] == Int(box)) {
      n_vec[k] = Int(-box);
      ++k;
    }
    if (k == dim) break;
    n_vec[k] += 1;
  }
  return rep;
}

// translation quotient of the combinatorial face poset: faces identified when one
// is an exact lattice translate of the other; the matched translations must be
// Eulerian and act by reversing the disagreement arcs
inline QuotientPoset quotient_face_poset(const Multigraph& g, const CombFacePoset& fp,
                                         const Caps& caps = Caps{}) {
  auto face_points = [&](int i) {
    std::vector<VecQ> pts;
    for (size_t b = fp.face_verts[i].find_first(); b != Bitset::npos;
         b = fp.face_verts[i].find_next(b))
      pts.push_back(fp.verts[b]);
    return pts;
  };
  auto related = [&](int a, int b) {
    if (fp.poset.grade[a] != fp.poset.grade[b]) return false;
    std::vector<VecQ> pa = face_points(a), pb = face_points(b);
    if (pa.size() != pb.size()) return false;
    VecQ lam = vec_sub(pb.front(), pa.front());  // lex-min to lex-min
    std::vector<VecQ> shifted;
    for (const VecQ& p : pa) shifted.push_back(vec_add(p, lam));
    if (shifted != pb) return false;
    // the shift must be a lattice element
    VecZ ilam(g.m());
    for (int e = 0; e < g.m(); ++e) {
      if (lam[e].denominator() != 1) return false;
      ilam[e] = lam[e].numerator();
    }
    if (!is_flow(g, to_vecq(ilam))) return false;
    bool nonzero = false;
    for (const Int& t : ilam)
      if (t != 0) nonzero = true;
    if (nonzero) {
      check(is_eulerian_element(g, ilam),
            "quotient_face_poset: face translation by a non-Eulerian lattice element");
      // reversal rule: the two orientations agree off supp(lam), flip on it
      const OrientedSubgraph& da = fp.sc.elems[a];
      const OrientedSubgraph& db = fp.sc.elems[b];
      for (int e = 0; e < g.m(); ++e) {
        if (ilam[e] == 0)
          check(da.dir[e] == db.dir[e],
                "quotient_face_poset: translated faces differ off the translation support");
        else
          check(da.dir[e] == -db.dir[e],
                "quotient_face_poset: translated faces fail the reversal rule");
      }
    }
    return true;
  };
  return detail::quotient_generic(fp.poset, related, caps);
}

}  // namespace latflow
