#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "caps.hpp"
#include "edge_vector.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "poset.hpp"
#include "rational.hpp"

namespace latflow {

// closed halfspace a.x <= b
struct Halfspace {
  VecQ a;
  Rat b;
};

struct Face {
  Bitset verts;
  int dim = 0;
  std::vector<int> active_rows;  // input rows tight on the whole face
};

struct PolytopeResult {
  std::vector<VecQ> vertices;       // sorted lexicographically
  int dim = -1;                     // -1 for the empty intersection
  std::vector<Face> faces;          // every nonempty face, sorted by (dim, verts)
  GradedPoset lattice;              // graded by face dimension; top = whole polytope
  std::vector<Bitset> row_active_vertices;  // per input row, over final vertices
};

namespace detail {

// primitive integer form of a row (a, b), scaled by the lcm of denominators
// and divided by the gcd of entries; keeps halfspace membership unchanged
inline void normalize_row(VecQ& a, Rat& b) {
  Int l = 1;
  for (const Rat& x : a) l = boost::multiprecision::lcm(l, x.denominator());
  l = boost::multiprecision::lcm(l, b.denominator());
  Int g = 0;
  auto scaled = [&](const Rat& x) { return x.numerator() * (l / x.denominator()); };
  for (const Rat& x : a) g = boost::multiprecision::gcd(g, abs_int(scaled(x)));
  g = boost::multiprecision::gcd(g, abs_int(scaled(b)));
  if (g == 0) g = 1;
  for (Rat& x : a) x = Rat(scaled(x) / g);
  b = Rat(scaled(b) / g);
}

inline int rank_of_rows(const std::vector<const VecQ*>& rows, int d) {
  Mat m;
  m.reserve(rows.size());
  for (const VecQ* r : rows) m.push_back(*r);
  int r = m.empty() ? 0 : rank(m);
  return std::min(r, d);
}

}  // namespace detail

// exact vertex/face enumeration of the intersection of halfspaces in Q^d by
// incremental cutting of a bounding box whose radius exceeds every possible
// vertex coordinate (Cramer + Hadamard on the integer-normalized rows).
// Assumes the feasible region, if nonempty, meets that box; this holds whenever
// some feasible point is known a priori to be small — in particular when all
// offsets b are >= 0, so the origin is feasible. Unbounded regions are detected
// via vertices pinned to the box and rejected.
inline PolytopeResult face_lattice_bruteforce(std::vector<Halfspace> rows, int d,
                                              const Caps& caps = Caps{}) {
  if (d < 1) throw input_error("face_lattice_bruteforce: dimension must be >= 1");
  if (d > caps.max_dim)
    throw resource_error("face_lattice_bruteforce: dimension " + std::to_string(d) +
                         " exceeds max_dim=" + std::to_string(caps.max_dim));
  if (static_cast<int>(rows.size()) > caps.max_halfspaces)
    throw resource_error("face_lattice_bruteforce: " + std::to_string(rows.size()) +
                         " halfspaces exceed max_halfspaces=" +
                         std::to_string(caps.max_halfspaces));
  int m = static_cast<int>(rows.size());
  for (Halfspace& h : rows) {
    if (static_cast<int>(h.a.size()) != d)
      throw input_error("face_lattice_bruteforce: row dimension mismatch");
    detail::normalize_row(h.a, h.b);
  }

  // box radius: product of the d largest augmented row norms, strictly exceeding
  // the Cramer bound |det(A_i)| / |det(A)| with |det(A)| >= 1 on integer rows
  std::vector<Int> norms;
  for (const Halfspace& h : rows) {
    Rat s = h.b * h.b;
    for (const Rat& x : h.a) s += x * x;
    norms.push_back(ceil_isqrt(s));
  }
  std::sort(norms.begin(), norms.end(), std::greater<Int>());
  Int radius = 1;
  for (int i = 0; i < d && i < static_cast<int>(norms.size()); ++i) radius *= norms[i];
  radius += 1;
  Rat box_r{radius};

  // rows m..m+2d-1 are the box facets x_i <= R, -x_i <= R
  for (int i = 0; i < d; ++i) {
    VecQ a(d, Rat(0));
    a[i] = Rat(1);
    rows.push_back({a, box_r});
    a[i] = Rat(-1);
    rows.push_back({a, box_r});
  }
  int total_rows = static_cast<int>(rows.size());

  auto eval = [&](int r, const VecQ& p) {
    Rat s(0);
    for (int i = 0; i < d; ++i) s += rows[r].a[i] * p[i];
    return s;
  };

  // start from the box corners; cut one input halfspace at a time
  std::vector<VecQ> verts;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    VecQ p(d);
    for (int i = 0; i < d; ++i) p[i] = (mask & (1u << i)) ? box_r : -box_r;
    verts.push_back(p);
  }

  for (int cut = 0; cut < m; ++cut) {
    std::vector<Rat> val(verts.size());
    bool any_out = false;
    for (size_t i = 0; i < verts.size(); ++i) {
      val[i] = eval(cut, verts[i]);
      if (val[i] > rows[cut].b) any_out = true;
    }
    if (!any_out) continue;

    std::set<VecQ> candidates;
    for (size_t i = 0; i < verts.size(); ++i)
      if (val[i] <= rows[cut].b) candidates.insert(verts[i]);
    for (size_t i = 0; i < verts.size(); ++i) {
      if (val[i] >= rows[cut].b) continue;  // need strictly inside
      for (size_t j = 0; j < verts.size(); ++j) {
        if (val[j] <= rows[cut].b) continue;  // need strictly outside
        Rat t = (rows[cut].b - val[i]) / (val[j] - val[i]);
        VecQ p(d);
        for (int k = 0; k < d; ++k) p[k] = verts[i][k] + t * (verts[j][k] - verts[i][k]);
        candidates.insert(p);
      }
    }

    // keep exactly the vertices of the refined region: feasible for all rows
    // processed so far, and with active rows of full rank d
    std::vector<VecQ> next;
    for (const VecQ& p : candidates) {
      bool feasible = true;
      std::vector<const VecQ*> active;
      for (int r = 0; r < total_rows && feasible; ++r) {
        if (r >= m && r < m + 2 * d) {
        } else if (r > cut && r < m) {
          continue;  // not processed yet
        }
        Rat v = eval(r, p);
        if (v > rows[r].b) feasible = false;
        else if (v == rows[r].b) active.push_back(&rows[r].a);
      }
      if (!feasible) continue;
      if (detail::rank_of_rows(active, d) == d) next.push_back(p);
    }
    verts = std::move(next);
    if (verts.empty()) break;
  }

  PolytopeResult res;
  if (verts.empty()) {
    res.dim = -1;
    res.lattice = build_poset({}, {}, [](int, int) { return false; }, caps);
    res.row_active_vertices.assign(m, Bitset(0));
    return res;
  }

  // a surviving vertex pinned to the box certifies an unbounded input region
  for (const VecQ& p : verts)
    for (const Rat& x : p)
      if (abs_rat(x) >= box_r)
        throw input_error("face_lattice_bruteforce: unbounded region");

  std::sort(verts.begin(), verts.end());
  res.vertices = verts;
  int nv = static_cast<int>(verts.size());

  res.row_active_vertices.assign(m, Bitset(nv));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i < nv; ++i)
      if (eval(r, verts[i]) == rows[r].b) res.row_active_vertices[r].set(i);

  // faces = closure of the facet vertex sets and the full set under intersection
  std::set<Bitset> closed;
  Bitset full(nv);
  full.set();
  closed.insert(full);
  for (int r = 0; r < m; ++r)
    if (res.row_active_vertices[r].any()) closed.insert(res.row_active_vertices[r]);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bitset> snapshot(closed.begin(), closed.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        Bitset inter = snapshot[i] & snapshot[j];
        if (inter.any() && closed.insert(inter).second) grew = true;
      }
  }

  for (const Bitset& vs : closed) {
    Face f;
    f.verts = vs;
    std::vector<VecQ> pts;
    for (size_t i = vs.find_first(); i != Bitset::npos; i = vs.find_next(i))
      pts.push_back(verts[i]);
    f.dim = affine_rank(pts);
    for (int r = 0; r < m; ++r)
      if (vs.is_subset_of(res.row_active_vertices[r])) f.active_rows.push_back(r);
    res.faces.push_back(std::move(f));
  }
  std::sort(res.faces.begin(), res.faces.end(), [](const Face& x, const Face& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.verts < y.verts;
  });
  res.dim = res.faces.back().dim;

  std::vector<int> grades;
  std::vector<std::string> keys;
  for (const Face& f : res.faces) {
    grades.push_back(f.dim);
    std::string k = "{";
    for (size_t i = f.verts.find_first(); i != Bitset::npos; i = f.verts.find_next(i)) {
      if (k.size() > 1) k += ",";
      k += std::to_string(i);
    }
    keys.push_back(k + "}");
  }
  auto face_less = [&](int x, int y) {
    return res.faces[x].verts != res.faces[y].verts &&
           res.faces[x].verts.is_subset_of(res.faces[y].verts);
  };
  res.lattice = build_poset(grades, keys, face_less, caps);
  return res;
}

// index of the face with exactly this vertex set, or -1
inline int face_index(const PolytopeResult& p, const Bitset& verts) {
  for (size_t i = 0; i < p.faces.size(); ++i)
    if (p.faces[i].verts == verts) return static_cast<int>(i);
  return -1;
}

}  // namespace latflow
