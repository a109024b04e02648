#pragma once
// seeded random connected multigraphs for corpus runs; mt19937_64 with a
// rejection-sampled bounded draw so streams are identical across platforms

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multigraph.hpp"

namespace latflow {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  // uniform draw from [0, bound) without modulo bias
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw input_error("rng: zero bound");
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = eng();
      if (r >= threshold) return r % bound;
    }
  }

  int range(int lo, int hi) {  // inclusive
    if (lo > hi) throw input_error("rng: empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
};

struct RandomGraphOptions {
  int min_vertices = 1;
  int max_vertices = 5;
  int max_edges = 8;
  int max_genus = 6;       // keeps the flow cell inside the oracle's dimension cap
  int loop_percent = 10;   // chance an edge is drawn as a loop
  int parallel_percent = 20;  // chance an edge duplicates an existing one
};

// endpoints drawn uniformly with configurable loop/parallel bias; connectivity
// by rejection
inline Multigraph random_connected_multigraph(Rng& rng, const RandomGraphOptions& opt = {}) {
  if (opt.min_vertices < 1 || opt.max_vertices < opt.min_vertices)
    throw input_error("random graph: bad vertex bounds");
  for (;;) {
    int n = rng.range(opt.min_vertices, opt.max_vertices);
    int lo = n - 1, hi = std::min(opt.max_edges, n - 1 + opt.max_genus);
    if (hi < lo) continue;
    int m = rng.range(lo, hi);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
      int roll = rng.range(0, 99);
      if (roll < opt.loop_percent) {
        int v = rng.range(0, n - 1);
        edges.push_back({v, v});
      } else if (roll < opt.loop_percent + opt.parallel_percent && !edges.empty()) {
        edges.push_back(edges[rng.range(0, static_cast<int>(edges.size()) - 1)]);
      } else {
        // uniform endpoints, but loops only through the explicit branch above
        int u = rng.range(0, n - 1), v = rng.range(0, n - 1);
        while (n > 1 && v == u) v = rng.range(0, n - 1);
        edges.push_back({u, v});
      }
    }
    detail::UnionFind uf(n);
    int parts = n;
    for (auto [u, v] : edges)
      if (uf.unite(u, v)) --parts;
    if (parts > 1) continue;
    return make_graph(n, edges);
  }
}

}  // namespace latflow
