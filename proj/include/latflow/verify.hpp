#pragma once
// end-to-end verification for one host graph: combinatorial face posets
// against the geometric oracle with an explicit witness, quotients, lattice
// adjacency scans, covering numbers and the structural identities

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "covering.hpp"
#include "cut_lattice.hpp"
#include "edge_vector.hpp"
#include "errors.hpp"
#include "laplacian.hpp"
#include "multigraph.hpp"
#include "orientations.hpp"
#include "polytope.hpp"
#include "poset.hpp"
#include "rational.hpp"
#include "voronoi_cut.hpp"
#include "voronoi_flow.hpp"

namespace latflow {

struct PhaseResult {
  std::string name;
  bool ran = false;
  bool pass = false;
  bool capped = false;
  std::string message;
};

struct SideMatch {
  std::vector<int> f_vector;  // counts by face dimension, top face included
  int vertex_count = 0;
  int facet_count = 0;
  std::vector<std::pair<std::string, std::string>> witness;  // arc key <-> vertex-set key
};

namespace detail {

struct skip_phase {
  std::string why;
};

// the 0-dimensional cell of a trivial lattice: a single point, a single face
inline PolytopeResult trivial_point_polytope(const Caps& caps) {
  PolytopeResult res;
  res.vertices = {VecQ{}};
  res.dim = 0;
  Face f;
  f.verts = Bitset(1);
  f.verts.set(0);
  f.dim = 0;
  res.faces = {f};
  res.lattice = build_poset({0}, {"{0}"}, [](int, int) { return false; }, caps);
  return res;
}

// match a combinatorially built face poset against the oracle's face lattice:
// equal vertex point sets, a face-by-face bijection through vertex sets that
// preserves grades and order both ways, active rows recovering the element's
// arcs, facet count, and a generic isomorphism pass on top
inline SideMatch match_face_posets(const Multigraph& g, const GradedPoset& comb_poset,
                                   const std::vector<Bitset>& face_verts,
                                   const std::vector<VecQ>& comb_verts,
                                   const std::vector<OrientedSubgraph>& elems,
                                   const std::vector<OrientedSubgraph>& row_support,
                                   const PolytopeResult& geo,
                                   const std::vector<VecQ>& geo_verts_embedded,
                                   const Caps& caps) {
  SideMatch sm;
  check(comb_verts.size() == geo_verts_embedded.size(),
        "face match: vertex counts differ (" + std::to_string(comb_verts.size()) + " vs " +
            std::to_string(geo_verts_embedded.size()) + ")");
  std::map<VecQ, int> geo_index;
  for (size_t i = 0; i < geo_verts_embedded.size(); ++i)
    geo_index[geo_verts_embedded[i]] = static_cast<int>(i);
  check(geo_index.size() == geo_verts_embedded.size(), "face match: oracle vertices repeat");
  std::vector<int> comb_to_geo(comb_verts.size());
  for (size_t k = 0; k < comb_verts.size(); ++k) {
    auto it = geo_index.find(comb_verts[k]);
    check(it != geo_index.end(),
          "face match: vertex " + vec_to_string(comb_verts[k]) + " is missing from the oracle");
    comb_to_geo[k] = it->second;
  }
  sm.vertex_count = static_cast<int>(comb_verts.size());

  check(comb_poset.n == static_cast<int>(geo.faces.size()),
        "face match: face counts differ (" + std::to_string(comb_poset.n) + " vs " +
            std::to_string(geo.faces.size()) + ")");
  std::vector<int> to_face(comb_poset.n);
  std::vector<char> used(geo.faces.size(), 0);
  for (int i = 0; i < comb_poset.n; ++i) {
    Bitset bits(geo.vertices.size());
    for (size_t k = 0; k < comb_verts.size(); ++k)
      if (face_verts[i].test(k)) bits.set(comb_to_geo[k]);
    int fid = face_index(geo, bits);
    check(fid >= 0, "face match: vertex set of " + comb_poset.key[i] + " is not an oracle face");
    check(!used[fid], "face match: two elements map to one oracle face");
    used[fid] = 1;
    to_face[i] = fid;
    check(comb_poset.grade[i] == geo.faces[fid].dim,
          "face match: grade/dimension mismatch at " + comb_poset.key[i]);

    // the rows tight on the whole oracle face must reassemble the element
    OrientedSubgraph uni = empty_orientation(g);
    for (int r : geo.faces[fid].active_rows)
      for (int e = 0; e < g.m(); ++e) {
        int8_t de = row_support[r].dir[e];
        if (de == 0) continue;
        check(uni.dir[e] == 0 || uni.dir[e] == de,
              "face match: active rows orient an edge both ways at " + comb_poset.key[i]);
        uni.dir[e] = de;
      }
    check(arc_key(uni) == arc_key(elems[i]),
          "face match: active rows rebuild " + arc_key(uni) + " instead of " + arc_key(elems[i]));
    sm.witness.push_back({comb_poset.key[i], geo.lattice.key[fid]});
  }
  for (int a = 0; a < comb_poset.n; ++a)
    for (int b = 0; b < comb_poset.n; ++b)
      check(comb_poset.less(a, b) == geo.lattice.less(to_face[a], to_face[b]),
            "face match: order disagrees between " + comb_poset.key[a] + " and " +
                comb_poset.key[b]);

  if (geo.dim >= 1) {
    for (const Face& f : geo.faces)
      if (f.dim == geo.dim - 1) ++sm.facet_count;
    check(sm.facet_count == static_cast<int>(row_support.size()),
          "face match: facet count " + std::to_string(sm.facet_count) + " differs from " +
              std::to_string(row_support.size()) + " defining rows");
  }

  check(poset_isomorphic(comb_poset, geo.lattice, nullptr, caps),
        "face match: posets fail the generic isomorphism test");
  sm.f_vector = grade_counts(comb_poset);
  return sm;
}

}  // namespace detail

struct VerifyReport {
  std::vector<PhaseResult> phases;
  std::vector<int> flow_f_vector, cut_f_vector;
  std::vector<int> flow_quotient_counts, cut_quotient_counts;
  std::vector<std::pair<std::string, std::string>> flow_witness, cut_witness;
  Rat flow_covering, cut_covering;
  int flow_points_checked = 0, cut_points_checked = 0;

  bool all_pass() const {
    for (const PhaseResult& p : phases)
      if (p.ran && !p.pass) return false;
    return true;
  }
  bool any_capped() const {
    for (const PhaseResult& p : phases)
      if (p.capped) return true;
    return false;
  }
};

inline VerifyReport run_verify(const Multigraph& g, const Caps& caps = Caps{}) {
  VerifyReport rep;
  auto run_phase = [&](const std::string& name, auto&& body) {
    PhaseResult pr;
    pr.name = name;
    try {
      body();
      pr.ran = true;
      pr.pass = true;
    } catch (const check_error& e) {
      pr.ran = true;
      pr.message = e.what();
    } catch (const resource_error& e) {
      pr.capped = true;
      pr.message = e.what();
    } catch (const detail::skip_phase& s) {
      pr.message = s.why;
    }
    rep.phases.push_back(pr);
  };

  std::optional<CombFacePoset> fp;
  std::optional<CombCutFacePoset> cfp;
  Rat flow_oracle_max;
  bool have_flow_oracle = false;

  run_phase("flow-face-lattice", [&] {
    CombFacePoset comb = face_poset_combinatorial(g, caps);
    FlowCell cell = voronoi_halfspaces(g, caps);
    int dim = genus(g);
    PolytopeResult geo;
    std::vector<VecQ> embedded;
    if (dim == 0) {
      geo = detail::trivial_point_polytope(caps);
      embedded = {VecQ(g.m(), Rat(0))};
    } else {
      geo = face_lattice_bruteforce(cell.rows, dim, caps);
      for (const VecQ& v : geo.vertices) embedded.push_back(flow_embed(g, cell.fb, v));
    }
    std::vector<OrientedSubgraph> rowsup(cell.circuits.begin(), cell.circuits.end());
    SideMatch sm = detail::match_face_posets(g, comb.poset, comb.face_verts, comb.verts,
                                             comb.sc.elems, rowsup, geo, embedded, caps);
    rep.flow_f_vector = sm.f_vector;
    rep.flow_witness = sm.witness;
    flow_oracle_max = Rat(0);
    for (const VecQ& v : embedded) flow_oracle_max = std::max(flow_oracle_max, q_form(v));
    have_flow_oracle = true;
    fp = std::move(comb);
  });

  run_phase("flow-quotient", [&] {
    if (!fp) throw detail::skip_phase{"skipped: flow face lattice unavailable"};
    QuotientPoset qgeo = quotient_face_poset(g, *fp, caps);
    QuotientPoset qcomb = quotient_sc(g, fp->sc, caps);
    check(qgeo.class_of == qcomb.class_of,
          "flow quotient: translation classes differ from the equivalence classes");
    check(poset_isomorphic(qgeo.poset, qcomb.poset, nullptr, caps),
          "flow quotient: posets are not isomorphic");
    rep.flow_quotient_counts = grade_counts(qcomb.poset);
  });

  run_phase("flow-adjacency", [&] {
    DelaunayReport dr = delaunay_adjacency_check(g, caps, 2);
    rep.flow_points_checked = dr.checked;
    check(dr.pass, "flow adjacency: " + (dr.failures.empty() ? "failed" : dr.failures.front()));
  });

  run_phase("flow-covering", [&] {
    FlowCoveringReport fc = covering_number_flow(g, caps);
    rep.flow_covering = fc.value;
    if (fc.lower_bound_only) throw detail::skip_phase{"skipped: enumeration capped, lower bound only"};
    if (have_flow_oracle)
      check(fc.value == flow_oracle_max,
            "flow covering: value " + to_string(fc.value) + " differs from oracle maximum " +
                to_string(flow_oracle_max));
    WellBalancedResult wb = well_balanced_search(g, caps);
    check(wb.minimizers == fc.argmax_set,
          "flow covering: well-balanced set differs from the q-maximizing set");
  });

  run_phase("cut-face-lattice", [&] {
    CombCutFacePoset comb = cut_face_poset_combinatorial(g, caps);
    CutCell cell = cut_voronoi_halfspaces(g, caps);
    int dim = g.n - 1;
    PolytopeResult geo;
    std::vector<VecQ> embedded;
    if (dim == 0) {
      geo = detail::trivial_point_polytope(caps);
      embedded = {VecQ(g.m(), Rat(0))};
    } else {
      geo = face_lattice_bruteforce(cell.rows, dim, caps);
      for (const VecQ& v : geo.vertices) embedded.push_back(cut_embed(g, v));
    }
    std::vector<OrientedSubgraph> rowsup;
    for (const Bond& b : cell.bond_list) rowsup.push_back(support(g, b.vec));
    SideMatch sm = detail::match_face_posets(g, comb.poset, comb.face_verts, comb.verts,
                                             comb.cac.elems, rowsup, geo, embedded, caps);
    rep.cut_f_vector = sm.f_vector;
    rep.cut_witness = sm.witness;
    cfp = std::move(comb);
  });

  run_phase("cut-quotient", [&] {
    if (!cfp) throw detail::skip_phase{"skipped: cut face lattice unavailable"};
    QuotientPoset qgeo = quotient_cut_face_poset(g, *cfp, caps);
    QuotientPoset qcomb = quotient_cac(g, cfp->cac, caps);
    check(qgeo.class_of == qcomb.class_of,
          "cut quotient: translation classes differ from the equivalence classes");
    check(poset_isomorphic(qgeo.poset, qcomb.poset, nullptr, caps),
          "cut quotient: posets are not isomorphic");
    rep.cut_quotient_counts = grade_counts(qcomb.poset);
  });

  run_phase("cut-adjacency", [&] {
    DelaunayReport dr = cut_adjacency_check(g, caps, 2);
    rep.cut_points_checked = dr.checked;
    check(dr.pass, "cut adjacency: " + (dr.failures.empty() ? "failed" : dr.failures.front()));
  });

  run_phase("cut-covering", [&] {
    CutCoveringReport cc = covering_number_cut(g, caps);
    rep.cut_covering = cc.value;
  });

  run_phase("identities", [&] {
    std::vector<VertexFn> tests;
    tests.push_back(VertexFn(g.n, Rat(0)));
    for (int v = 0; v < g.n; ++v) {
      VertexFn chi(g.n, Rat(0));
      chi[v] = Rat(1);
      tests.push_back(chi);
    }
    VertexFn ramp(g.n), mixed(g.n);
    for (int v = 0; v < g.n; ++v) {
      ramp[v] = Rat(v + 1, 3);
      mixed[v] = Rat((v * v) % 7, 5) - Rat(v, 2);
    }
    tests.push_back(ramp);
    tests.push_back(mixed);
    for (const VertexFn& f : tests) {
      VertexFn lap = laplacian_apply(g, f);
      Rat total(0), inner(0);
      for (int y = 0; y < g.n; ++y) {
        total += lap[y];
        inner += f[y] * lap[y];
      }
      check(total == Rat(0), "identities: Laplacian values do not sum to zero");
      check(q_form(coboundary(g, f)) == inner, "identities: q(d(f)) differs from <f, Delta f>");
    }
  });

  return rep;
}

}  // namespace latflow
