#pragma once

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "errors.hpp"

namespace latflow {

using Bitset = boost::dynamic_bitset<>;

struct GradedPoset {
  int n = 0;
  std::vector<int> grade;
  std::vector<std::string> key;               // canonical payload key per element
  std::vector<std::pair<int, int>> covers;    // (lower, upper)
  std::vector<Bitset> above;                  // above[a][b] == true iff a < b strictly

  bool less(int a, int b) const { return above[a].test(b); }
  bool leq(int a, int b) const { return a == b || above[a].test(b); }
};

// builds covers from an arbitrary strict-order predicate. Grade must be strictly
// monotone along < (true for all posets in this project: removing arcs strictly
// drops subgraph genus, faces strictly gain dimension); that makes grade-gap-1
// comparabilities covers outright, and larger gaps get an explicit betweenness test,
// so the construction never assumes the face-lattice theorems it is used to check.
inline GradedPoset build_poset(const std::vector<int>& grades,
                               const std::vector<std::string>& keys,
                               const std::function<bool(int, int)>& less,
                               const Caps& caps = Caps{}) {
  int n = static_cast<int>(grades.size());
  if (n > caps.max_poset)
    throw resource_error("build_poset: " + std::to_string(n) +
                         " elements exceeds max_poset=" + std::to_string(caps.max_poset));
  GradedPoset p;
  p.n = n;
  p.grade = grades;
  p.key = keys;
  p.above.assign(n, Bitset(n));
  std::vector<Bitset> below(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && less(a, b)) {
        check(grades[a] < grades[b], "build_poset: grade not strictly monotone along <");
        p.above[a].set(b);
        below[b].set(a);
      }
  for (int a = 0; a < n; ++a)
    for (size_t b = p.above[a].find_first(); b != Bitset::npos; b = p.above[a].find_next(b)) {
      if (grades[b] - grades[a] > 1 && p.above[a].intersects(below[b])) continue;
      p.covers.push_back({a, static_cast<int>(b)});
    }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

inline std::vector<int> grade_counts(const GradedPoset& p) {
  int top = 0;
  for (int g : p.grade) top = std::max(top, g);
  std::vector<int> counts(top + 1, 0);
  for (int g : p.grade) {
    if (g < 0) throw input_error("grade_counts: negative grade");
    ++counts[g];
  }
  return counts;
}

namespace detail {

struct HasseView {
  std::vector<std::vector<int>> up, down;
  std::vector<int> height;  // longest chain below, order-invariant refinement seed

  explicit HasseView(const GradedPoset& p) : up(p.n), down(p.n), height(p.n, 0) {
    for (auto [lo, hi] : p.covers) {
      up[lo].push_back(hi);
      down[hi].push_back(lo);
    }
    std::vector<int> indeg(p.n), order;
    for (int v = 0; v < p.n; ++v) indeg[v] = static_cast<int>(down[v].size());
    for (int v = 0; v < p.n; ++v)
      if (indeg[v] == 0) order.push_back(v);
    for (size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      for (int w : up[v]) {
        height[w] = std::max(height[w], height[v] + 1);
        if (--indeg[w] == 0) order.push_back(w);
      }
    }
    check(order.size() == up.size(), "poset covers contain a cycle");
  }
};

// Weisfeiler-Lehman style refinement over the two Hasse digraphs jointly
inline std::vector<int> refine_colors(const HasseView& a, const HasseView& b) {
  int total = static_cast<int>(a.up.size() + b.up.size());
  auto view = [&](int x) -> const HasseView& {
    return x < static_cast<int>(a.up.size()) ? a : b;
  };
  auto local = [&](int x) {
    return x < static_cast<int>(a.up.size()) ? x : x - static_cast<int>(a.up.size());
  };
  std::vector<int> color(total);
  for (int x = 0; x < total; ++x) color[x] = view(x).height[local(x)];
  for (int round = 0; round < total; ++round) {
    std::map<std::vector<int>, int> table;
    std::vector<int> next(total);
    for (int x = 0; x < total; ++x) {
      const HasseView& h = view(x);
      int v = local(x);
      int base = x < static_cast<int>(a.up.size()) ? 0 : static_cast<int>(a.up.size());
      std::vector<int> sig{color[x], -1};
      for (int w : h.up[v]) sig.push_back(color[base + w]);
      std::sort(sig.begin() + 2, sig.end());
      sig.push_back(-2);
      size_t mark = sig.size();
      for (int w : h.down[v]) sig.push_back(color[base + w]);
      std::sort(sig.begin() + static_cast<long>(mark), sig.end());
      auto it = table.find(sig);
      if (it == table.end()) it = table.insert({sig, static_cast<int>(table.size())}).first;
      next[x] = it->second;
    }
    if (next == color) break;
    color = next;
  }
  return color;
}

}  // namespace detail

// order isomorphism test with an explicit witness (witness[i] = image of p's element i);
// refinement by height + iterated neighbor colors, then backtracking over full-order
// bitset domains with forward checking: assigning x -> y intersects every open domain
// with the image's above / below / incomparable set, so comparability AND
// incomparability are enforced on both sides at every step
inline bool poset_isomorphic(const GradedPoset& p, const GradedPoset& q,
                             std::vector<int>* witness = nullptr, const Caps& caps = Caps{}) {
  if (p.n > caps.max_poset || q.n > caps.max_poset)
    throw resource_error("poset_isomorphic: size exceeds max_poset=" +
                         std::to_string(caps.max_poset));
  if (p.n != q.n || p.covers.size() != q.covers.size()) return false;
  if (p.n == 0) {
    if (witness) witness->clear();
    return true;
  }
  detail::HasseView hp(p), hq(q);
  std::vector<int> color = detail::refine_colors(hp, hq);
  std::vector<int> pcolor(color.begin(), color.begin() + p.n);
  std::vector<int> qcolor(color.begin() + p.n, color.end());
  int n = p.n;
  std::map<int, Bitset> qclass;
  for (int y = 0; y < n; ++y) {
    auto [it, fresh] = qclass.try_emplace(qcolor[y], Bitset(n));
    it->second.set(y);
  }
  std::vector<Bitset> dom(n);
  for (int x = 0; x < n; ++x) {
    auto it = qclass.find(pcolor[x]);
    if (it == qclass.end()) return false;
    dom[x] = it->second;
  }
  {
    std::map<int, int> pcount;
    for (int c : pcolor) ++pcount[c];
    for (auto& [c, cnt] : pcount)
      if (qclass[c].count() != static_cast<size_t>(cnt)) return false;
  }

  std::vector<Bitset> below_q(n, Bitset(n)), incomp_q(n);
  for (int a = 0; a < n; ++a)
    for (size_t b = q.above[a].find_first(); b != Bitset::npos; b = q.above[a].find_next(b))
      below_q[b].set(a);
  for (int y = 0; y < n; ++y) {
    Bitset cmp = q.above[y] | below_q[y];
    cmp.set(y);
    incomp_q[y] = ~cmp;
  }

  std::vector<int> image(n, -1);
  // node budget: straight descent costs n nodes; symmetric hosts admit many
  // isomorphisms, so propagation-led search finds one with little backtracking
  long long budget = 1000 + 10LL * n * n;
  std::function<bool()> assign = [&]() -> bool {
    int x = -1;
    size_t best = 0;
    for (int z = 0; z < n; ++z) {
      if (image[z] != -1) continue;
      size_t c = dom[z].count();
      if (x == -1 || c < best) {
        x = z;
        best = c;
      }
    }
    if (x == -1) return true;  // everything assigned
    if (best == 0) return false;
    std::vector<std::pair<int, Bitset>> saved;
    for (size_t y = dom[x].find_first(); y != Bitset::npos; y = dom[x].find_next(y)) {
      if (--budget < 0) throw resource_error("poset_isomorphic: search budget exceeded");
      image[x] = static_cast<int>(y);
      bool dead = false;
      for (int z = 0; z < n && !dead; ++z) {
        if (image[z] != -1) continue;
        const Bitset& mask = p.above[z].test(x)   ? below_q[y]
                             : p.above[x].test(z) ? q.above[y]
                                                  : incomp_q[y];
        Bitset shrunk = dom[z] & mask;
        if (shrunk != dom[z]) {
          saved.push_back({z, dom[z]});
          dead = shrunk.none();
          dom[z] = std::move(shrunk);
        }
      }
      if (!dead && assign()) return true;
      for (auto& [z, old] : saved) dom[z] = std::move(old);
      saved.clear();
      image[x] = -1;
    }
    return false;
  };
  if (!assign()) return false;
  if (witness) *witness = image;
  return true;
}

}  // namespace latflow
