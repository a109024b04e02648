#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "latflow/cut_lattice.hpp"
#include "latflow/linalg.hpp"
#include "latflow/voronoi_flow.hpp"

using namespace latflow;
namespace fx = latflow::fixtures;

TEST_CASE("matrix-vector product") {
  Mat a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  CHECK(mat_vec(a, {Rat(1), Rat(1)}) == std::vector<Rat>{Rat(3), Rat(7)});
  CHECK(mat_vec(Mat{}, {}).empty());
}

TEST_CASE("rank") {
  CHECK(rank(Mat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
  CHECK(rank(Mat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rank(Mat{{Rat(0), Rat(0)}}) == 0);
  CHECK(rank(Mat{}) == 0);
  CHECK(rank(Mat{{rat(1, 7), rat(2, 7)}, {Rat(5), Rat(3)}}) == 2);
}

TEST_CASE("linear solve") {
  SolveResult r = linear_solve({{Rat(2), Rat(1)}, {Rat(1), Rat(3)}}, {Rat(5), Rat(10)});
  REQUIRE(r.status == SolveStatus::unique);
  CHECK(r.x == std::vector<Rat>{Rat(1), Rat(3)});

  r = linear_solve({{Rat(1)}, {Rat(1)}}, {Rat(0), Rat(1)});
  CHECK(r.status == SolveStatus::inconsistent);

  r = linear_solve({{Rat(1), Rat(1)}}, {Rat(2)});
  CHECK(r.status == SolveStatus::underdetermined);

  // consistent overdetermined system still resolves uniquely
  r = linear_solve({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}},
                   {rat(1, 2), rat(1, 3), rat(5, 6)});
  REQUIRE(r.status == SolveStatus::unique);
  CHECK(r.x == std::vector<Rat>{rat(1, 2), rat(1, 3)});
}

TEST_CASE("affine rank") {
  CHECK(affine_rank({}) == -1);
  CHECK(affine_rank({{Rat(3), Rat(4)}}) == 0);
  CHECK(affine_rank({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}) == 1);
  CHECK(affine_rank({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}) == 1);
  CHECK(affine_rank({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite({{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}}));
  CHECK_FALSE(is_positive_definite({{Rat(1), Rat(2)}, {Rat(2), Rat(1)}}));
  CHECK_FALSE(is_positive_definite({{Rat(0)}}));
  CHECK_FALSE(is_positive_definite({{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}));
  CHECK(is_positive_definite(Mat{}));
}

TEST_CASE("gram matrices of the working bases are positive definite") {
  for (const Multigraph& g : {fx::theta(), fx::complete(4), fx::bowtie(), fx::k23()}) {
    FlowBasis fb = flow_basis_of(g);
    if (fb.dim() > 0) CHECK(is_positive_definite(fb.gram));
    CutBasis cb = cut_basis_of(g);
    if (cb.dim() > 0) CHECK(is_positive_definite(cb.gram));
    CHECK(cb.gram == reduced_laplacian(g, 0));
  }
}
