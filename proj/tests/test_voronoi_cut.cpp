#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "latflow/voronoi_cut.hpp"

using namespace latflow;
namespace fx = latflow::fixtures;

TEST_CASE("genus-one cut elements") {
  CHECK(upsilon1(fx::complete(3)).size() == 6);
  CHECK(upsilon1(fx::cycle(4)).size() == 12);
  CHECK(upsilon1(fx::path(3)).size() == 4);
  CHECK(upsilon1(fx::complete(4)).size() == 14);
  for (const VecZ& lam : upsilon1(fx::complete(3)))
    CHECK(is_cut_element(fx::complete(3), lam));
}

TEST_CASE("halfspace representation of the cut cell") {
  Multigraph k3 = fx::complete(3);
  CutCell cell = cut_voronoi_halfspaces(k3);
  REQUIRE(cell.rows.size() == 6);
  for (size_t i = 0; i < cell.rows.size(); ++i) {
    CHECK(cell.rows[i].b == Rat(q_form(cell.bond_list[i].vec)));
    for (int j = 0; j < cell.cb.dim(); ++j)
      CHECK(cell.rows[i].a[j] ==
            Rat(2 * inner_product(cell.cb.vecs[j], cell.bond_list[i].vec)));
  }
  PolytopeResult hexagon = face_lattice_bruteforce(cell.rows, 2);
  CHECK(grade_counts(hexagon.lattice) == std::vector<int>{6, 6, 1});
}

TEST_CASE("combinatorial cut face poset matches frozen shapes") {
  CombCutFacePoset k3 = cut_face_poset_combinatorial(fx::complete(3));
  CHECK(grade_counts(k3.poset) == std::vector<int>{6, 6, 1});
  CHECK(k3.verts.size() == 6);

  CombCutFacePoset k2 = cut_face_poset_combinatorial(fx::path(2));
  CHECK(grade_counts(k2.poset) == std::vector<int>{2, 1});
  CHECK(k2.verts[0] == VecQ{rat(-1, 2)});
  CHECK(k2.verts[1] == VecQ{rat(1, 2)});

  CombCutFacePoset p3 = cut_face_poset_combinatorial(fx::path(3));
  CHECK(grade_counts(p3.poset) == std::vector<int>{4, 4, 1});

  CombCutFacePoset th = cut_face_poset_combinatorial(fx::theta());
  CHECK(grade_counts(th.poset) == std::vector<int>{2, 1});
  CHECK(th.verts[0] == VecQ{rat(-1, 2), rat(-1, 2), rat(-1, 2)});
  CHECK(th.verts[1] == VecQ{rat(1, 2), rat(1, 2), rat(1, 2)});

  // permutohedron shape: 24 linear orders, 36 edges, 14 bond facets
  CombCutFacePoset k4 = cut_face_poset_combinatorial(fx::complete(4));
  CHECK(grade_counts(k4.poset) == std::vector<int>{24, 36, 14, 1});
  CHECK(k4.verts.size() == 24);
}

TEST_CASE("bond rank inside an oriented support") {
  Multigraph k3 = fx::complete(3);
  std::vector<Bond> bl = bonds(k3);
  OrientedSubgraph full = empty_orientation(k3);
  full.dir = {1, 1, 1};
  CHECK(bond_rank_inside(k3, bl, full) == 2);
  OrientedSubgraph none = empty_orientation(k3);
  CHECK(bond_rank_inside(k3, bl, none) == 0);
  // a single bond inside: rank one
  OrientedSubgraph one = support(k3, bl[0].vec);
  CHECK(bond_rank_inside(k3, bl, one) >= 1);
}

TEST_CASE("cut lattice adjacency scan") {
  DelaunayReport k3 = cut_adjacency_check(fx::complete(3));
  CHECK(k3.pass);
  CHECK(k3.failures.empty());
  CHECK(k3.checked == 24);
  CHECK(k3.eulerian == 6);

  DelaunayReport k2 = cut_adjacency_check(fx::path(2));
  CHECK(k2.pass);
  CHECK(k2.checked == 4);
  CHECK(k2.eulerian == 2);

  DelaunayReport lp = cut_adjacency_check(fx::loop_graph());
  CHECK(lp.pass);
  CHECK(lp.checked == 0);

  DelaunayReport c4 = cut_adjacency_check(fx::cycle(4));
  CHECK(c4.pass);
  CHECK(c4.checked == 124);
}

TEST_CASE("translation quotient of the cut face poset") {
  Multigraph p3 = fx::path(3);
  QuotientPoset q = quotient_cut_face_poset(p3, cut_face_poset_combinatorial(p3));
  CHECK(grade_counts(q.poset) == std::vector<int>{1, 2, 1});

  Multigraph k2 = fx::path(2);
  QuotientPoset qk2 = quotient_cut_face_poset(k2, cut_face_poset_combinatorial(k2));
  CHECK(grade_counts(qk2.poset) == std::vector<int>{1, 1});

  Multigraph th = fx::theta();
  QuotientPoset qth = quotient_cut_face_poset(th, cut_face_poset_combinatorial(th));
  CHECK(grade_counts(qth.poset) == std::vector<int>{1, 1});
}
