#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "latflow/cut_lattice.hpp"

using namespace latflow;
namespace fx = latflow::fixtures;

TEST_CASE("coboundary") {
  Multigraph k2 = fx::path(2);
  CHECK(coboundary(k2, {Rat(0), Rat(1)}) == VecQ{Rat(1)});
  CHECK(coboundary(fx::loop_graph(), {Rat(5)}) == VecQ{Rat(0)});
  Multigraph th = fx::theta();
  CHECK(coboundary(th, {Rat(0), rat(1, 2)}) == VecQ{rat(1, 2), rat(1, 2), rat(1, 2)});
  CHECK_THROWS_AS(coboundary(k2, {Rat(0)}), input_error);
}

TEST_CASE("cut elements of vertex subsets") {
  Multigraph c4 = fx::cycle(4);
  CHECK(cut_element(c4, 0b0011) == VecZ{0, 1, 0, -1});
  CHECK(cut_element(c4, 0b0001) == VecZ{1, 0, 0, -1});
  CHECK(cut_element(c4, 0b1110) == VecZ{-1, 0, 0, 1});
  CHECK_THROWS_AS(cut_element(c4, 1u << 5), input_error);
}

TEST_CASE("cut rank") {
  Multigraph c4 = fx::cycle(4);
  CHECK(cut_rank(c4, 0b0001) == 1);
  CHECK(cut_rank(c4, 0b0011) == 1);
  CHECK(cut_rank(c4, 0b0101) == 3);  // both sides split in two
  CHECK(cut_rank(fx::path(3), 0b010) == 2);
  CHECK_THROWS_AS(cut_rank(c4, 0), input_error);
  CHECK_THROWS_AS(cut_rank(c4, 0b1111), input_error);
}

TEST_CASE("bond enumeration") {
  CHECK(bonds(fx::complete(3)).size() == 6);
  CHECK(bonds(fx::path(2)).size() == 2);
  CHECK(bonds(fx::path(3)).size() == 4);
  CHECK(bonds(fx::complete(4)).size() == 14);
  CHECK(bonds(fx::cycle(4)).size() == 12);
  CHECK(bonds(fx::loop_graph()).empty());
  for (const Bond& b : bonds(fx::cycle(4))) {
    CHECK(cut_rank(fx::cycle(4), b.c_mask) == 1);
    CHECK(is_cut_element(fx::cycle(4), b.vec));
  }
}

TEST_CASE("cut space membership") {
  Multigraph th = fx::theta();
  CHECK(in_cut_space(th, coboundary(th, {Rat(0), rat(2, 7)})));
  CHECK_FALSE(in_cut_space(th, VecQ{Rat(1), Rat(-1), Rat(0)}));
  CHECK(is_cut_element(fx::cycle(4), cut_element(fx::cycle(4), 0b0001)));
  VecZ doubled{2, 0, 0, -2};
  CHECK_FALSE(is_cut_element(fx::cycle(4), doubled));
}

TEST_CASE("cut basis and coordinates") {
  Multigraph c4 = fx::cycle(4);
  CutBasis cb = cut_basis_of(c4);
  REQUIRE(cb.dim() == 3);
  CHECK(cb.gram == reduced_laplacian(c4, 0));
  VertexFn f{Rat(0), Rat(1), Rat(3), Rat(2)};
  VecQ x = coboundary(c4, f);
  CHECK(x == VecQ{Rat(1), Rat(2), Rat(-1), Rat(-2)});
  CHECK(potential_of(c4, x) == f);
  std::vector<Rat> coords = cut_coords(c4, x);
  CHECK(coords == std::vector<Rat>{Rat(1), Rat(3), Rat(2)});
  CHECK(cut_embed(c4, coords) == x);
  CHECK_THROWS_AS(potential_of(c4, VecQ{Rat(1), Rat(1), Rat(1), Rat(1)}), input_error);
  CHECK_THROWS_AS(cut_embed(c4, {Rat(1)}), input_error);
}

TEST_CASE("vertex of an acyclic orientation") {
  Multigraph k3 = fx::complete(3);
  OrientedSubgraph d = empty_orientation(k3);
  d.dir = {1, 1, 1};  // the linear order 0 < 1 < 2
  CutVertex cv = vertex_of_acyclic(k3, d);
  CHECK(cv.f == VertexFn{Rat(0), rat(1, 3), rat(2, 3)});
  CHECK(cv.nu == VecQ{rat(1, 3), rat(2, 3), rat(1, 3)});
  // exact covering radius of the triangle's cut lattice
  CHECK(q_form(cv.nu) == rat(2, 3));

  Multigraph k2 = fx::path(2);
  OrientedSubgraph d2 = empty_orientation(k2);
  d2.dir = {1};
  CHECK(vertex_of_acyclic(k2, d2).nu == VecQ{rat(1, 2)});

  // the empty orientation of a bouquet is the only acyclic one
  CutVertex lp = vertex_of_acyclic(fx::loop_graph(), empty_orientation(fx::loop_graph()));
  CHECK(lp.nu == VecQ{Rat(0)});
}

TEST_CASE("vertex of acyclic rejects bad orientations") {
  Multigraph k3 = fx::complete(3);
  OrientedSubgraph cyc = empty_orientation(k3);
  cyc.dir = {1, -1, 1};  // 0 -> 1 -> 2 -> 0
  CHECK_THROWS_AS(vertex_of_acyclic(k3, cyc), input_error);
  OrientedSubgraph partial = empty_orientation(k3);
  partial.dir = {1, 1, 0};
  CHECK_THROWS_AS(vertex_of_acyclic(k3, partial), input_error);
  Multigraph lp = fx::loop_graph();
  OrientedSubgraph looped = empty_orientation(lp);
  looped.dir = {1};
  CHECK_THROWS_AS(vertex_of_acyclic(lp, looped), input_error);
}
