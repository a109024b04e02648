#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cut_lattice.hpp"
#include "orientations.hpp"
#include "polytope.hpp"
#include "voronoi_flow.hpp"  // DelaunayReport, floor_rat/ceil_rat

namespace latflow {

// bond vectors of the cut lattice, both signs (C and its complement both occur)
inline std::vector<VecZ> upsilon1(const Multigraph& g, const Caps& caps = Caps{}) {
  std::vector<VecZ> out;
  for (const Bond& b : bonds(g, caps)) out.push_back(b.vec);
  return out;
}

// H-representation of the cut Voronoi cell in the d(chi_v) basis, one row
// 2<x, lambda> <= q(lambda) per bond lambda
struct CutCell {
  CutBasis cb;
  std::vector<Bond> bond_list;  // row i comes from bond_list[i]
  std::vector<Halfspace> rows;
};

inline CutCell cut_voronoi_halfspaces(const Multigraph& g, const Caps& caps = Caps{}) {
  CutCell cell;
  cell.cb = cut_basis_of(g);
  cell.bond_list = bonds(g, caps);
  for (const Bond& b : cell.bond_list) {
    VecQ a(cell.cb.dim());
    for (int i = 0; i < cell.cb.dim(); ++i)
      a[i] = Rat(2 * inner_product(cell.cb.vecs[i], b.vec));
    cell.rows.push_back({a, Rat(q_form(b.vec))});
  }
  return cell;
}

// combinatorial cut-side face data: for each coherent acyclic element D, the face
// is spanned by the vertices nu^{D'} of its full acyclic extensions D'
struct CombCutFacePoset {
  OrientPoset cac;
  std::vector<VecQ> verts;         // sorted vertex points, edge coordinates
  std::vector<int> vert_elem;      // verts[i] belongs to cac element vert_elem[i]
  std::vector<Bitset> face_verts;  // per cac element
  std::vector<std::vector<int>> active_bonds;  // per cac element, bond row ids
  std::vector<Bond> bond_list;
  GradedPoset poset;  // rebuilt from vertex sets and affine ranks
};

inline CombCutFacePoset cut_face_poset_combinatorial(const Multigraph& g,
                                                     const Caps& caps = Caps{}) {
  CombCutFacePoset fp;
  fp.cac = enumerate_cac(g, caps);
  fp.bond_list = bonds(g, caps);
  int n = fp.cac.poset.n;
  int top = g.n - 1;

  std::vector<OrientedSubgraph> acyc = acyclic_orientations(g, caps);
  std::vector<int> full_ids;
  for (int i = 0; i < n; ++i)
    if (fp.cac.poset.grade[i] == 0) full_ids.push_back(i);
  check(full_ids.size() == acyc.size(),
        "cut_face_poset_combinatorial: grade-0 elements do not match acyclic orientations");
  for (int i : full_ids)
    check(std::find(acyc.begin(), acyc.end(), fp.cac.elems[i]) != acyc.end(),
          "cut_face_poset_combinatorial: grade-0 element is not a full acyclic orientation");

  std::map<VecQ, int> vert_elem_of;
  for (int i : full_ids) {
    CutVertex cv = vertex_of_acyclic(g, fp.cac.elems[i], caps);
    check(!vert_elem_of.count(cv.nu),
          "cut_face_poset_combinatorial: two acyclic orientations share a vertex");
    vert_elem_of[cv.nu] = i;
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
  fp.active_bonds.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int full : full_ids)
      if (arcs_contained(fp.cac.elems[i], fp.cac.elems[full]))
        fp.face_verts[i].set(vert_id_of_elem[full]);
    check(fp.face_verts[i].any(),
          "cut_face_poset_combinatorial: element with no acyclic extension: " +
              fp.cac.poset.key[i]);
    for (size_t b = 0; b < fp.bond_list.size(); ++b)
      if (arcs_contained(support(g, fp.bond_list[b].vec), fp.cac.elems[i]))
        fp.active_bonds[i].push_back(static_cast<int>(b));
    std::vector<VecQ> pts;
    for (size_t b = fp.face_verts[i].find_first(); b != Bitset::npos;
         b = fp.face_verts[i].find_next(b))
      pts.push_back(fp.verts[b]);
    grades[i] = affine_rank(pts);
    check(grades[i] == fp.cac.poset.grade[i],
          "cut_face_poset_combinatorial: geometric grade disagrees with bond-rank grade at " +
              fp.cac.poset.key[i]);
    check(top - grades[i] >= 0, "cut_face_poset_combinatorial: negative codimension");
    keys[i] = fp.cac.poset.key[i];
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      check(fp.face_verts[a] != fp.face_verts[b],
            "cut_face_poset_combinatorial: injectivity fails: " + keys[a] + " vs " + keys[b]);
      bool geo = fp.face_verts[a].is_subset_of(fp.face_verts[b]);
      bool comb = fp.cac.poset.less(a, b);
      check(geo == comb, "cut_face_poset_combinatorial: order mismatch between " + keys[a] +
                             " and " + keys[b]);
    }

  auto less = [&](int a, int b) {
    return fp.face_verts[a] != fp.face_verts[b] &&
           fp.face_verts[a].is_subset_of(fp.face_verts[b]);
  };
  fp.poset = build_poset(grades, keys, less, caps);
  check(fp.poset.covers == fp.cac.poset.covers,
        "cut_face_poset_combinatorial: cover relation differs from the orientation poset");
  return fp;
}

// rank of the bond vectors lying inside an oriented support; the cut-side
// codimension invariant, and kappa(C, V-C) when the support is a single cut
inline int bond_rank_inside(const Multigraph& g, const std::vector<Bond>& bond_list,
                            const OrientedSubgraph& supp) {
  Mat rows;
  for (const Bond& b : bond_list)
    if (arcs_contained(support(g, b.vec), supp)) rows.push_back(to_vecq(b.vec));
  return rows.empty() ? 0 : rank(rows);
}

// box scan over cut-lattice elements: midpoint criterion vs the +-1 cut-element
// characterization, plus codimension (= kappa for genuine cuts) and facet laws
inline DelaunayReport cut_adjacency_check(const Multigraph& g, const Caps& caps = Caps{},
                                          int box = 2) {
  DelaunayReport rep;
  CutCell cell = cut_voronoi_halfspaces(g, caps);
  int dim = cell.cb.dim();
  if (dim == 0) return rep;
  PolytopeResult poly = face_lattice_bruteforce(cell.rows, dim, caps);
  std::vector<VecZ> ups = upsilon1(g, caps);
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.failures.push_back(msg);
  };

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
        for (int e = 0; e < g.m(); ++e) lam[e] += n_vec[i] * cell.cb.vecs[i][e];
      std::vector<Rat> offs(nr, Rat(0));
      for (size_t r = 0; r < nr; ++r)
        for (int i = 0; i < dim; ++i) offs[r] += cell.rows[r].a[i] * Rat(n_vec[i]);

      bool midpoint_in = true;
      for (size_t r = 0; r < nr; ++r)
        if (offs[r] > 2 * cell.rows[r].b) {
          midpoint_in = false;
          break;
        }
      bool cut_elem = is_cut_element(g, lam);
      if (midpoint_in != cut_elem)
        fail("midpoint/cut-element disagreement at lattice point " + vec_to_string(lam));

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
      if (!cut_elem) {
        if (common.any()) fail("disjoint cells share a vertex at " + vec_to_string(lam));
      } else {
        ++rep.eulerian;
        if (!common.any()) {
          fail("cut-element translate shares no vertex at " + vec_to_string(lam));
        } else {
          if (face_index(poly, common) < 0)
            fail("cell intersection is not a face at " + vec_to_string(lam));
          std::vector<VecQ> pts;
          for (size_t b = common.find_first(); b != Bitset::npos; b = common.find_next(b))
            pts.push_back(poly.vertices[b]);
          int codim = dim - affine_rank(pts);
          int want = bond_rank_inside(g, cell.bond_list, support(g, lam));
          if (codim != want)
            fail("cut codimension law fails at " + vec_to_string(lam) + ": codim " +
                 std::to_string(codim) + " vs bond rank " + std::to_string(want));
          // when the support is a genuine cut, the bond rank must equal kappa
          if (g.n <= 31) {
            std::uint32_t full_mask = (1u << g.n) - 1;
            for (std::uint32_t c = 1; c < full_mask; ++c)
              if (cut_element(g, c) == lam) {
                if (want != cut_rank(g, c))
                  fail("kappa mismatch at " + vec_to_string(lam));
                break;
              }
          }
          bool in_ups = std::find(ups.begin(), ups.end(), lam) != ups.end();
          if ((codim == 1) != in_ups) fail("bond facet criterion fails at " + vec_to_string(lam));
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

// translation quotient of the cut-side face poset: faces identified when one is an
// exact lattice translate of the other; translations must be +-1 cut elements and
// act by reversing the disagreement arcs
inline QuotientPoset quotient_cut_face_poset(const Multigraph& g, const CombCutFacePoset& fp,
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
    VecQ lam = vec_sub(pb.front(), pa.front());
    std::vector<VecQ> shifted;
    for (const VecQ& p : pa) shifted.push_back(vec_add(p, lam));
    if (shifted != pb) return false;
    VecZ ilam(g.m());
    for (int e = 0; e < g.m(); ++e) {
      if (lam[e].denominator() != 1) return false;
      ilam[e] = lam[e].numerator();
    }
    if (!in_cut_space(g, to_vecq(ilam))) return false;
    bool nonzero = false;
    for (const Int& t : ilam)
      if (t != 0) nonzero = true;
    if (nonzero) {
      check(is_cut_element(g, ilam),
            "quotient_cut_face_poset: face translation is not a +-1 cut element");
      const OrientedSubgraph& da = fp.cac.elems[a];
      const OrientedSubgraph& db = fp.cac.elems[b];
      for (int e = 0; e < g.m(); ++e) {
        if (ilam[e] == 0)
          check(da.dir[e] == db.dir[e],
                "quotient_cut_face_poset: translated faces differ off the translation support");
        else
          check(da.dir[e] == -db.dir[e],
                "quotient_cut_face_poset: translated faces fail the reversal rule");
      }
    }
    return true;
  };
  return detail::quotient_generic(fp.poset, related, caps);
}

}  // namespace latflow
