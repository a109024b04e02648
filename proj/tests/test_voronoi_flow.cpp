#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "latflow/voronoi_flow.hpp"

using namespace latflow;
namespace fx = latflow::fixtures;

TEST_CASE("flow basis of the theta graph") {
  Multigraph th = fx::theta();
  FlowBasis fb = flow_basis_of(th);
  REQUIRE(fb.dim() == 2);
  CHECK(fb.chords == std::vector<int>{1, 2});
  CHECK(fb.basis[0] == VecZ{-1, 1, 0});
  CHECK(fb.basis[1] == VecZ{-1, 0, 1});
  CHECK(fb.gram == Mat{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}});
}

TEST_CASE("flow coordinates round-trip") {
  Multigraph th = fx::theta();
  FlowBasis fb = flow_basis_of(th);
  VecQ x{rat(1, 2), rat(1, 3), rat(1, 6)};
  CHECK_FALSE(is_flow(th, x));
  CHECK_THROWS_AS(flow_coords(th, fb, x), input_error);
  VecQ y{rat(-1, 2), rat(1, 3), rat(1, 6)};
  REQUIRE(is_flow(th, y));
  VecQ c = flow_coords(th, fb, y);
  CHECK(c == VecQ{rat(1, 3), rat(1, 6)});
  CHECK(flow_embed(th, fb, c) == y);
}

TEST_CASE("genus-one eulerian elements") {
  CHECK(xi1(fx::theta()).size() == 6);
  CHECK(xi1(fx::complete(4)).size() == 14);
  CHECK(xi1(fx::loop_graph()).size() == 2);
  for (const VecZ& lam : xi1(fx::theta())) CHECK(is_eulerian_element(fx::theta(), lam));
}

TEST_CASE("halfspace representation of the flow cell") {
  Multigraph th = fx::theta();
  FlowCell cell = voronoi_halfspaces(th);
  REQUIRE(cell.rows.size() == 6);
  for (size_t i = 0; i < cell.rows.size(); ++i) {
    CHECK(cell.rows[i].b == Rat(circuit_length(cell.circuits[i])));
    // row entries are 2 * <basis_j, circuit flow>
    VecZ lam = circuit_flow(cell.circuits[i]);
    for (int j = 0; j < cell.fb.dim(); ++j)
      CHECK(cell.rows[i].a[j] == Rat(2 * inner_product(cell.fb.basis[j], lam)));
  }
}

TEST_CASE("cell vertex of a strong orientation") {
  Multigraph th = fx::theta();
  OrientedSubgraph d = empty_orientation(th);
  d.dir = {1, 1, -1};
  VecQ v = vertex_of_orientation(th, d);
  CHECK(v == VecQ{rat(1, 3), rat(1, 3), rat(-2, 3)});
  CHECK(q_form(v) == rat(2, 3));
  // reversal maps the vertex to its negative
  CHECK(vertex_of_orientation(th, reversed(d)) == vec_scale(Rat(-1), v));

  OrientedSubgraph all_fwd = empty_orientation(th);
  all_fwd.dir = {1, 1, 1};
  CHECK_THROWS_AS(vertex_of_orientation(th, all_fwd), input_error);
  OrientedSubgraph partial = empty_orientation(th);
  partial.dir = {1, -1, 0};
  CHECK_THROWS_AS(vertex_of_orientation(th, partial), input_error);

  Multigraph tp = fx::theta_pendant();
  OrientedSubgraph with_bridge = empty_orientation(tp);
  with_bridge.dir = {1, 1, -1, 1};
  CHECK_THROWS_AS(vertex_of_orientation(tp, with_bridge), input_error);
}

TEST_CASE("combinatorial face poset matches frozen shapes") {
  CombFacePoset th = face_poset_combinatorial(fx::theta());
  CHECK(grade_counts(th.poset) == std::vector<int>{6, 6, 1});
  CHECK(th.verts.size() == 6);

  CombFacePoset c3 = face_poset_combinatorial(fx::cycle(3));
  CHECK(grade_counts(c3.poset) == std::vector<int>{2, 1});
  CHECK(c3.verts.size() == 2);
  CHECK(c3.verts[0] == VecQ{rat(-1, 2), rat(-1, 2), rat(-1, 2)});
  CHECK(c3.verts[1] == VecQ{rat(1, 2), rat(1, 2), rat(1, 2)});

  CombFacePoset k4 = face_poset_combinatorial(fx::complete(4));
  CHECK(grade_counts(k4.poset) == std::vector<int>{24, 36, 14, 1});
  CHECK(k4.verts.size() == 24);
}

TEST_CASE("closest lattice point") {
  Multigraph c3 = fx::cycle(3);
  ClosestPointResult r = closest_lattice_point(c3, VecQ{rat(1, 2), rat(1, 2), rat(1, 2)});
  CHECK(r.dist_sq == rat(3, 4));
  REQUIRE(r.minimizers.size() == 2);
  CHECK(r.minimizers[0] == VecZ{0, 0, 0});
  CHECK(r.minimizers[1] == VecZ{1, 1, 1});

  r = closest_lattice_point(c3, VecQ{rat(1, 3), rat(1, 3), rat(1, 3)});
  CHECK(r.dist_sq == rat(1, 3));
  REQUIRE(r.minimizers.size() == 1);
  CHECK(r.minimizers[0] == VecZ{0, 0, 0});

  // a hexagon corner of the theta cell is equidistant from three lattice points
  Multigraph th = fx::theta();
  r = closest_lattice_point(th, VecQ{rat(1, 3), rat(1, 3), rat(-2, 3)});
  CHECK(r.dist_sq == rat(2, 3));
  REQUIRE(r.minimizers.size() == 3);
  CHECK(r.minimizers[0] == VecZ{0, 0, 0});
  CHECK(r.minimizers[1] == VecZ{0, 1, -1});
  CHECK(r.minimizers[2] == VecZ{1, 0, -1});

  // genus zero: the lattice is trivial
  r = closest_lattice_point(fx::path(3), VecQ{Rat(0), Rat(0)});
  CHECK(r.dist_sq == Rat(0));
  CHECK(r.minimizers == std::vector<VecZ>{VecZ{0, 0}});
  CHECK_THROWS_AS(closest_lattice_point(c3, VecQ{Rat(1), Rat(0), Rat(0)}), input_error);
}

TEST_CASE("lattice adjacency scan") {
  DelaunayReport th = delaunay_adjacency_check(fx::theta());
  CHECK(th.pass);
  CHECK(th.failures.empty());
  CHECK(th.checked == 24);
  CHECK(th.eulerian == 6);

  DelaunayReport c3 = delaunay_adjacency_check(fx::cycle(3));
  CHECK(c3.pass);
  CHECK(c3.checked == 4);
  CHECK(c3.eulerian == 2);

  DelaunayReport tree = delaunay_adjacency_check(fx::path(3));
  CHECK(tree.pass);
  CHECK(tree.checked == 0);
}

TEST_CASE("translation quotient of the face poset") {
  Multigraph th = fx::theta();
  CombFacePoset fp = face_poset_combinatorial(th);
  QuotientPoset q = quotient_face_poset(th, fp);
  CHECK(grade_counts(q.poset) == std::vector<int>{2, 3, 1});

  Multigraph c3 = fx::cycle(3);
  QuotientPoset qc3 = quotient_face_poset(c3, face_poset_combinatorial(c3));
  CHECK(grade_counts(qc3.poset) == std::vector<int>{1, 1});
}
