#pragma once
// shared small hosts for the test suite

#include "latflow/multigraph.hpp"

namespace latflow::fixtures {

inline Multigraph loop_graph() { return make_graph(1, {{0, 0}}); }

inline Multigraph path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return make_graph(n, es);
}

inline Multigraph cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
  return make_graph(n, es);
}

inline Multigraph theta() { return make_graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline Multigraph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return make_graph(n, es);
}

inline Multigraph k23() {
  return make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

inline Multigraph theta_pendant() { return make_graph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}}); }

inline Multigraph bowtie() {
  return make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

}  // namespace latflow::fixtures
