#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "fixtures.hpp"
#include "latflow/poset.hpp"

using namespace latflow;

namespace {

// strict order from an explicit relation matrix
GradedPoset from_matrix(const std::vector<int>& grades, const std::vector<std::string>& keys,
                        const std::vector<std::pair<int, int>>& rel, const Caps& caps = Caps{}) {
  auto less = [rel](int a, int b) {
    for (auto [x, y] : rel)
      if (x == a && y == b) return true;
    return false;
  };
  return build_poset(grades, keys, less, caps);
}

// boolean lattice on `bits` atoms; element i stands for the subset mask perm[i]
GradedPoset boolean_lattice(int bits, const std::vector<int>& perm) {
  int n = 1 << bits;
  std::vector<int> grades(n);
  std::vector<std::string> keys(n);
  for (int i = 0; i < n; ++i) {
    grades[i] = __builtin_popcount(static_cast<unsigned>(perm[i]));
    keys[i] = "s" + std::to_string(perm[i]);
  }
  auto less = [perm](int a, int b) {
    return perm[a] != perm[b] && (perm[a] & perm[b]) == perm[a];
  };
  return build_poset(grades, keys, less);
}

std::vector<int> iota_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

TEST_CASE("build_poset computes covers") {
  // diamond: bottom < a,b < top
  GradedPoset d = from_matrix({0, 1, 1, 2}, {"bot", "a", "b", "top"},
                              {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  CHECK(d.n == 4);
  CHECK(d.covers == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(d.less(0, 3));
  CHECK_FALSE(d.less(1, 2));
  CHECK(d.leq(1, 1));
  CHECK(grade_counts(d) == std::vector<int>{1, 2, 1});

  // a comparability across a grade gap with a witness in between is not a cover
  GradedPoset chain = from_matrix({0, 1, 2}, {"x", "y", "z"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chain.covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  // a grade gap with no witness stays a cover
  GradedPoset gap = from_matrix({0, 2}, {"x", "z"}, {{0, 1}});
  CHECK(gap.covers == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("build_poset rejects bad input") {
  CHECK_THROWS_AS(from_matrix({1, 0}, {"a", "b"}, {{0, 1}}), check_error);
  Caps tight;
  tight.max_poset = 2;
  CHECK_THROWS_AS(from_matrix({0, 1, 2}, {"a", "b", "c"}, {}, tight), resource_error);
}

TEST_CASE("isomorphism on small posets") {
  GradedPoset d1 = from_matrix({0, 1, 1, 2}, {"bot", "a", "b", "top"},
                               {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  GradedPoset d2 = from_matrix({2, 1, 1, 0}, {"TOP", "B", "A", "BOT"},
                               {{3, 2}, {3, 1}, {3, 0}, {2, 0}, {1, 0}});
  std::vector<int> w;
  REQUIRE(poset_isomorphic(d1, d2, &w));
  REQUIRE(w.size() == 4);
  std::vector<char> hit(4, 0);
  for (int y : w) hit[y] = 1;
  for (char h : hit) CHECK(h == 1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(d1.less(a, b) == d2.less(w[a], w[b]));

  GradedPoset chain4 =
      from_matrix({0, 1, 2, 3}, {"0", "1", "2", "3"},
                  {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(poset_isomorphic(d1, chain4));

  // same size and cover count, different height profile
  GradedPoset k22 = from_matrix({0, 0, 1, 1}, {"a", "b", "c", "d"},
                                {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_FALSE(poset_isomorphic(d1, k22));

  GradedPoset empty1 = from_matrix({}, {}, {});
  GradedPoset empty2 = from_matrix({}, {}, {});
  CHECK(poset_isomorphic(empty1, empty2));
  CHECK_FALSE(poset_isomorphic(empty1, d1));
}

TEST_CASE("isomorphism on shuffled boolean lattices") {
  GradedPoset b1 = boolean_lattice(3, iota_perm(8));
  GradedPoset b2 = boolean_lattice(3, {5, 2, 7, 0, 3, 6, 1, 4});
  std::vector<int> w;
  REQUIRE(poset_isomorphic(b1, b2, &w));
  for (int a = 0; a < b1.n; ++a)
    for (int b = 0; b < b1.n; ++b) CHECK(b1.less(a, b) == b2.less(w[a], w[b]));
  GradedPoset b4 = boolean_lattice(4, iota_perm(16));
  CHECK_FALSE(poset_isomorphic(b1, b4));
}

TEST_CASE("isomorphism respects caps") {
  GradedPoset d = from_matrix({0, 1, 1, 2}, {"bot", "a", "b", "top"},
                              {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  Caps tight;
  tight.max_poset = 3;
  CHECK_THROWS_AS(poset_isomorphic(d, d, nullptr, tight), resource_error);
}
