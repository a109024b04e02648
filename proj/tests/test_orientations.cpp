#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "latflow/orientations.hpp"

using namespace latflow;
namespace fx = latflow::fixtures;

TEST_CASE("strong orientation counts") {
  CHECK(strong_orientations(fx::cycle(3)).size() == 2);
  CHECK(strong_orientations(fx::cycle(4)).size() == 2);
  CHECK(strong_orientations(fx::theta()).size() == 6);
  CHECK(strong_orientations(fx::complete(4)).size() == 24);
  CHECK(strong_orientations(fx::loop_graph()).size() == 2);
  CHECK(strong_orientations(fx::bowtie()).size() == 4);
  // a tree keeps only the empty orientation: every edge is a bridge
  std::vector<OrientedSubgraph> tree = strong_orientations(fx::path(3));
  REQUIRE(tree.size() == 1);
  CHECK(arc_count(tree[0]) == 0);
  // bridges stay unoriented, the rest is fully oriented
  for (const OrientedSubgraph& d : strong_orientations(fx::theta_pendant())) {
    CHECK(d.dir[3] == 0);
    CHECK(arc_count(d) == 3);
  }
  CHECK(strong_orientations(fx::theta_pendant()).size() == 6);
}

TEST_CASE("acyclic orientation counts") {
  CHECK(acyclic_orientations(fx::cycle(3)).size() == 6);
  CHECK(acyclic_orientations(fx::cycle(4)).size() == 14);
  CHECK(acyclic_orientations(fx::theta()).size() == 2);
  CHECK(acyclic_orientations(fx::complete(4)).size() == 24);
  CHECK(acyclic_orientations(fx::path(3)).size() == 4);
  // loops are never part of an acyclic orientation
  std::vector<OrientedSubgraph> lp = acyclic_orientations(fx::loop_graph());
  REQUIRE(lp.size() == 1);
  CHECK(arc_count(lp[0]) == 0);
}

TEST_CASE("orientation caps") {
  Caps tight;
  tight.max_orient_edges = 2;
  CHECK_THROWS_AS(strong_orientations(fx::theta(), tight), resource_error);
  CHECK_THROWS_AS(acyclic_orientations(fx::theta(), tight), resource_error);
  CHECK_THROWS_AS(enumerate_sc(fx::theta(), tight), resource_error);
  Caps few_vertices;
  few_vertices.max_orient_edges = 3;
  CHECK_THROWS_AS(enumerate_cac(fx::complete(4), few_vertices), resource_error);
}

TEST_CASE("strongly connected orientation poset") {
  OrientPoset sc = enumerate_sc(fx::theta());
  CHECK(grade_counts(sc.poset) == std::vector<int>{6, 6, 1});
  // top element is the empty orientation at grade = genus
  int top = -1;
  for (int i = 0; i < sc.poset.n; ++i)
    if (sc.poset.grade[i] == 2) top = i;
  REQUIRE(top >= 0);
  CHECK(arc_count(sc.elems[top]) == 0);
  for (int i = 0; i < sc.poset.n; ++i)
    if (i != top) CHECK(sc.poset.less(i, top));
  CHECK(sc.index.at("...") == top);

  CHECK(grade_counts(enumerate_sc(fx::cycle(3)).poset) == std::vector<int>{2, 1});
  CHECK(grade_counts(enumerate_sc(fx::loop_graph()).poset) == std::vector<int>{2, 1});
  CHECK(grade_counts(enumerate_sc(fx::complete(4)).poset) ==
        std::vector<int>{24, 36, 14, 1});
}

TEST_CASE("ordered partition orientation poset") {
  OrientPoset cac = enumerate_cac(fx::complete(3));
  CHECK(grade_counts(cac.poset) == std::vector<int>{6, 6, 1});
  CHECK(grade_counts(enumerate_cac(fx::path(2)).poset) == std::vector<int>{2, 1});
  CHECK(grade_counts(enumerate_cac(fx::path(3)).poset) == std::vector<int>{4, 4, 1});
  CHECK(grade_counts(enumerate_cac(fx::complete(4)).poset) ==
        std::vector<int>{24, 36, 14, 1});
  // grade-0 elements are exactly the full acyclic orientations
  std::vector<OrientedSubgraph> acyc = acyclic_orientations(fx::complete(3));
  for (int i = 0; i < cac.poset.n; ++i)
    if (cac.poset.grade[i] == 0)
      CHECK(std::find(acyc.begin(), acyc.end(), cac.elems[i]) != acyc.end());
}

TEST_CASE("degree and disagreement helpers") {
  Multigraph th = fx::theta();
  OrientedSubgraph d1 = empty_orientation(th), d2 = empty_orientation(th);
  d1.dir = {1, 1, -1};
  d2.dir = {1, -1, 1};
  CHECK(out_degree_function(th, d1) == std::vector<int>{2, 1});
  CHECK(out_degree_function(th, d2) == std::vector<int>{2, 1});
  OrientedSubgraph dis = disagreement(d1, d2);
  CHECK(dis.dir == std::vector<int8_t>{0, 1, -1});
  CHECK(same_edge_set(d1, d2));
  CHECK(is_eulerian_orientation(th, dis));
  OrientedSubgraph partial = empty_orientation(th);
  partial.dir = {1, 0, 0};
  CHECK_FALSE(same_edge_set(d1, partial));
}

TEST_CASE("sc equivalence") {
  Multigraph th = fx::theta();
  OrientedSubgraph a = empty_orientation(th), b = empty_orientation(th),
                   c = empty_orientation(th);
  a.dir = {1, 1, -1};
  b.dir = {1, -1, 1};
  c.dir = {-1, -1, 1};
  CHECK(sc_equivalent(th, a, b));
  CHECK_FALSE(sc_equivalent(th, a, c));
  OrientedSubgraph all_fwd = empty_orientation(th);
  all_fwd.dir = {1, 1, 1};
  CHECK_THROWS_AS(sc_equivalent(th, a, all_fwd), input_error);
}

TEST_CASE("cac equivalence") {
  Multigraph k2 = fx::path(2);
  OrientedSubgraph fwd = empty_orientation(k2), bwd = empty_orientation(k2);
  fwd.dir = {1};
  bwd.dir = {-1};
  CHECK(cac_equivalent(k2, fwd, bwd));
  CHECK(cac_equivalent(k2, fwd, fwd));

  // triangle: single-edge disagreement is never a full directed cut
  Multigraph k3 = fx::complete(3);
  OrientedSubgraph x = empty_orientation(k3), y = empty_orientation(k3);
  x.dir = {1, 1, 1};
  y.dir = {-1, 1, 1};
  CHECK_FALSE(cac_equivalent(k3, x, y));
  // reversing both arcs at the source vertex 0 is a one-step move
  OrientedSubgraph z = empty_orientation(k3);
  z.dir = {-1, -1, 1};
  CHECK(cac_equivalent(k3, x, z));
}

TEST_CASE("sc quotient of the theta graph") {
  Multigraph th = fx::theta();
  OrientPoset sc = enumerate_sc(th);
  QuotientPoset q = quotient_sc(th, sc);
  CHECK(grade_counts(q.poset) == std::vector<int>{2, 3, 1});
  for (int i = 0; i < sc.poset.n; ++i) CHECK(q.class_of[i] >= 0);
  // the two grade-0 classes split by out-degree at vertex 0
  for (const std::vector<int>& cls : q.members)
    for (int x : cls)
      CHECK(out_degree_function(th, sc.elems[x]) ==
            out_degree_function(th, sc.elems[cls[0]]));
}

TEST_CASE("cac quotients of small hosts") {
  Multigraph k2 = fx::path(2);
  QuotientPoset qk2 = quotient_cac(k2, enumerate_cac(k2));
  CHECK(grade_counts(qk2.poset) == std::vector<int>{1, 1});

  Multigraph p3 = fx::path(3);
  QuotientPoset qp3 = quotient_cac(p3, enumerate_cac(p3));
  CHECK(grade_counts(qp3.poset) == std::vector<int>{1, 2, 1});

  Multigraph k3 = fx::complete(3);
  QuotientPoset qk3 = quotient_cac(k3, enumerate_cac(k3));
  CHECK(grade_counts(qk3.poset) == std::vector<int>{2, 3, 1});
}
