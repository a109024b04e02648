#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cut_lattice.hpp"
#include "edge_vector.hpp"
#include "multigraph.hpp"
#include "poset.hpp"

namespace latflow {

struct OrientPoset {
  std::vector<OrientedSubgraph> elems;
  GradedPoset poset;
  std::map<std::string, int> index;  // arc_key -> element id
};

namespace detail {

inline void check_orient_cap(int count, const Caps& caps, const char* who) {
  if (count > caps.max_orient_edges)
    throw resource_error(std::string(who) + ": " + std::to_string(count) +
                         " orientable edges exceeds max_orient_edges=" +
                         std::to_string(caps.max_orient_edges));
}

}  // namespace detail

// all strongly connected orientations of g minus its bridges (the grade-0 layer of SC)
inline std::vector<OrientedSubgraph> strong_orientations(const Multigraph& g,
                                                         const Caps& caps = Caps{}) {
  std::vector<int> bridge = bridges(g);
  std::vector<char> is_bridge(g.m(), 0);
  for (int e : bridge) is_bridge[e] = 1;
  std::vector<int> free_edges;
  for (int e = 0; e < g.m(); ++e)
    if (!is_bridge[e]) free_edges.push_back(e);
  detail::check_orient_cap(static_cast<int>(free_edges.size()), caps, "strong_orientations");
  std::vector<OrientedSubgraph> out;
  for (std::uint32_t mask = 0; mask < (1u << free_edges.size()); ++mask) {
    OrientedSubgraph d = empty_orientation(g);
    for (size_t i = 0; i < free_edges.size(); ++i)
      d.dir[free_edges[i]] = (mask & (1u << i)) ? -1 : 1;
    if (is_strongly_connected(g, d)) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// all acyclic orientations covering every non-loop edge (loops stay absent)
inline std::vector<OrientedSubgraph> acyclic_orientations(const Multigraph& g,
                                                          const Caps& caps = Caps{}) {
  std::vector<int> free_edges;
  for (int e = 0; e < g.m(); ++e)
    if (!g.is_loop(e)) free_edges.push_back(e);
  detail::check_orient_cap(static_cast<int>(free_edges.size()), caps, "acyclic_orientations");
  std::vector<OrientedSubgraph> out;
  for (std::uint32_t mask = 0; mask < (1u << free_edges.size()); ++mask) {
    OrientedSubgraph d = empty_orientation(g);
    for (size_t i = 0; i < free_edges.size(); ++i)
      d.dir[free_edges[i]] = (mask & (1u << i)) ? -1 : 1;
    if (is_acyclic(g, d)) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline OrientPoset finish_orient_poset(const Multigraph& g,
                                       std::vector<OrientedSubgraph> elems,
                                       const std::vector<int>& grades, const Caps& caps) {
  OrientPoset p;
  p.elems = std::move(elems);
  std::vector<std::string> keys;
  keys.reserve(p.elems.size());
  for (size_t i = 0; i < p.elems.size(); ++i) {
    keys.push_back(arc_key(p.elems[i]));
    p.index[keys.back()] = static_cast<int>(i);
  }
  // d is strictly below d' exactly when d carries strictly more arcs, matching faces:
  // more active facets = smaller face
  auto less = [&](int a, int b) {
    return p.elems[a].dir != p.elems[b].dir && arcs_contained(p.elems[b], p.elems[a]);
  };
  p.poset = build_poset(grades, keys, less, caps);
  (void)g;
  return p;
}

}  // namespace detail

// the poset of strongly connected orientations of subgraphs, ordered by reverse
// arc containment; top = empty orientation; grade = genus(g) - subgraph genus
inline OrientPoset enumerate_sc(const Multigraph& g, const Caps& caps = Caps{}) {
  detail::check_orient_cap(g.m(), caps, "enumerate_sc");
  int gg = genus(g);
  std::vector<OrientedSubgraph> elems;
  std::vector<int> grades;
  std::uint64_t total = 1;
  for (int e = 0; e < g.m(); ++e) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    OrientedSubgraph d = empty_orientation(g);
    std::uint64_t c = code;
    for (int e = 0; e < g.m(); ++e) {
      int digit = static_cast<int>(c % 3);
      c /= 3;
      d.dir[e] = digit == 0 ? 0 : (digit == 1 ? 1 : -1);
    }
    if (!is_strongly_connected(g, d)) continue;
    elems.push_back(d);
  }
  std::sort(elems.begin(), elems.end());
  if (static_cast<int>(elems.size()) > caps.max_poset)
    throw resource_error("enumerate_sc: poset size " + std::to_string(elems.size()) +
                         " exceeds max_poset=" + std::to_string(caps.max_poset));
  for (const OrientedSubgraph& d : elems)
    grades.push_back(gg - subgraph_genus(g, oriented_edges(d)));
  return detail::finish_orient_poset(g, std::move(elems), grades, caps);
}

// orientations induced by ordered partitions (V_1,...,V_s): every edge between
// distinct blocks points from the lower block to the higher; loops never appear
inline OrientPoset enumerate_cac(const Multigraph& g, const Caps& caps = Caps{}) {
  detail::check_orient_cap(g.n, caps, "enumerate_cac");
  std::map<std::string, OrientedSubgraph> seen;
  std::vector<int> block_of(g.n, -1);
  auto emit = [&]() {
    OrientedSubgraph d = empty_orientation(g);
    for (int e = 0; e < g.m(); ++e) {
      int bu = block_of[g.edges[e].u], bv = block_of[g.edges[e].v];
      if (bu < bv) d.dir[e] = 1;
      else if (bu > bv) d.dir[e] = -1;
    }
    seen.emplace(arc_key(d), d);
  };
  std::uint32_t full = (1u << g.n) - 1;
  std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t remaining, int depth) {
    if (remaining == 0) {
      emit();
      return;
    }
    // iterate nonempty submasks of `remaining` as the next block
    for (std::uint32_t sub = remaining;; sub = (sub - 1) & remaining) {
      if (sub != 0) {
        for (int v = 0; v < g.n; ++v)
          if (sub & (1u << v)) block_of[v] = depth;
        rec(remaining & ~sub, depth + 1);
      }
      if (sub == 0) break;
    }
  };
  rec(full, 0);

  std::vector<OrientedSubgraph> elems;
  for (auto& [key, d] : seen) elems.push_back(d);
  std::sort(elems.begin(), elems.end());
  if (static_cast<int>(elems.size()) > caps.max_poset)
    throw resource_error("enumerate_cac: poset size " + std::to_string(elems.size()) +
                         " exceeds max_poset=" + std::to_string(caps.max_poset));
  // grade = (n-1) minus the rank of the bond vectors lying inside the orientation
  std::vector<Bond> all_bonds = bonds(g, caps);
  std::vector<int> grades;
  for (const OrientedSubgraph& d : elems) {
    Mat rows;
    for (const Bond& b : all_bonds)
      if (arcs_contained(support(g, b.vec), d)) rows.push_back(to_vecq(b.vec));
    grades.push_back((g.n - 1) - (rows.empty() ? 0 : rank(rows)));
  }
  return detail::finish_orient_poset(g, std::move(elems), grades, caps);
}

inline std::vector<int> out_degree_function(const Multigraph& g, const OrientedSubgraph& d) {
  std::vector<int> out(g.n, 0);
  for (int e = 0; e < g.m(); ++e)
    if (d.dir[e] != 0) ++out[arc_tail(g, e, d.dir[e])];
  return out;
}

// the arcs of d1 on edges where d2 points the other way (same edge set assumed)
inline OrientedSubgraph disagreement(const OrientedSubgraph& d1, const OrientedSubgraph& d2) {
  OrientedSubgraph dis{std::vector<int8_t>(d1.dir.size(), 0)};
  for (size_t e = 0; e < d1.dir.size(); ++e)
    if (d1.dir[e] != 0 && d1.dir[e] == -d2.dir[e]) dis.dir[e] = d1.dir[e];
  return dis;
}

inline bool same_edge_set(const OrientedSubgraph& d1, const OrientedSubgraph& d2) {
  for (size_t e = 0; e < d1.dir.size(); ++e)
    if ((d1.dir[e] != 0) != (d2.dir[e] != 0)) return false;
  return true;
}

inline bool is_eulerian_orientation(const Multigraph& g, const OrientedSubgraph& d) {
  std::vector<int> net(g.n, 0);
  for (int e = 0; e < g.m(); ++e)
    if (d.dir[e] != 0 && !g.is_loop(e)) {
      ++net[arc_head(g, e, d.dir[e])];
      --net[arc_tail(g, e, d.dir[e])];
    }
  for (int v : net)
    if (v != 0) return false;
  return true;
}

// equal out-degree functions on the same edge set; the Eulerian-disagreement
// characterization is computed alongside and the two are asserted to agree
inline bool sc_equivalent(const Multigraph& g, const OrientedSubgraph& d1,
                          const OrientedSubgraph& d2) {
  if (!is_strongly_connected(g, d1) || !is_strongly_connected(g, d2))
    throw input_error("sc_equivalent: inputs must be strongly connected orientations");
  if (!same_edge_set(d1, d2)) return false;
  bool by_degree = out_degree_function(g, d1) == out_degree_function(g, d2);
  bool by_euler = is_eulerian_orientation(g, disagreement(d1, d2));
  check(by_degree == by_euler,
        "sc_equivalent: out-degree and Eulerian-disagreement characterizations disagree for " +
            arc_key(d1) + " vs " + arc_key(d2));
  return by_degree;
}

// one-step relation: d2 is d1 with the whole cut at some vertex subset C
// reversed. every host edge across (C, V-C) must be oriented in d1 and leave C;
// an unoriented edge across C disqualifies C, because translating the face by
// the cut vector of C would shift that free coordinate off the cell.
inline bool cac_equivalent(const Multigraph& g, const OrientedSubgraph& d1,
                           const OrientedSubgraph& d2) {
  validate_orientation(g, d1);
  validate_orientation(g, d2);
  if (!same_edge_set(d1, d2)) return false;
  OrientedSubgraph dis = disagreement(d1, d2);
  if (arc_count(dis) == 0) return true;
  std::uint32_t full = (1u << g.n) - 1;
  for (std::uint32_t c = 1; c < full; ++c) {
    bool ok = true;
    for (int e = 0; e < g.m() && ok; ++e) {
      bool u_in = c & (1u << g.edges[e].u), v_in = c & (1u << g.edges[e].v);
      if (u_in == v_in) {
        ok = dis.dir[e] == 0;
        continue;
      }
      int leaving = u_in ? 1 : -1;
      ok = d1.dir[e] != 0 && dis.dir[e] == leaving;
    }
    if (ok) return true;
  }
  return false;
}

struct QuotientPoset {
  GradedPoset poset;
  std::vector<std::vector<int>> members;  // element ids per class
  std::vector<int> class_of;
};

namespace detail {

// quotient of any graded poset by the transitive closure of a one-step
// relation; classes must sit inside single grades — checked, not assumed.
// (the closure is genuinely needed: on the path with two edges the total
// reversal of a full orientation is two single-cut reversals, not one.)
inline QuotientPoset quotient_generic(const GradedPoset& base,
                                      const std::function<bool(int, int)>& related,
                                      const Caps& caps) {
  int n = base.n;
  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (related(a, b)) uf.unite(a, b);
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < n; ++x) groups[uf.find(x)].push_back(x);
  QuotientPoset q;
  q.class_of.assign(n, -1);
  std::vector<std::pair<std::pair<int, std::string>, std::vector<int>>> ordered;
  for (auto& [root, xs] : groups) {
    for (int x : xs)
      check(base.grade[x] == base.grade[xs[0]], "quotient: class mixes grades");
    ordered.push_back({{base.grade[xs[0]], base.key[xs[0]]}, xs});
  }
  std::sort(ordered.begin(), ordered.end());
  std::vector<int> grades;
  std::vector<std::string> keys;
  for (auto& [tag, xs] : ordered) {
    int id = static_cast<int>(q.members.size());
    for (int x : xs) q.class_of[x] = id;
    q.members.push_back(xs);
    grades.push_back(tag.first);
    keys.push_back("[" + tag.second + "]");
  }
  auto class_less = [&](int a, int b) {
    for (int x : q.members[a])
      for (int y : q.members[b])
        if (base.less(x, y)) return true;
    return false;
  };
  // the induced relation must itself be a strict partial order; build_poset checks
  // grade monotonicity, and we check transitivity explicitly before building
  int k = static_cast<int>(q.members.size());
  std::vector<Bitset> rel(k, Bitset(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && class_less(a, b)) rel[a].set(b);
  for (int a = 0; a < k; ++a)
    for (size_t b = rel[a].find_first(); b != Bitset::npos; b = rel[a].find_next(b)) {
      check(!rel[b].test(a), "quotient: induced relation not antisymmetric");
      Bitset reach = rel[b];
      reach -= rel[a];
      reach.reset(a);
      check(reach.none(), "quotient: induced relation not transitive");
    }
  q.poset = build_poset(grades, keys, class_less, caps);
  return q;
}

}  // namespace detail

inline QuotientPoset quotient_sc(const Multigraph& g, const OrientPoset& p,
                                 const Caps& caps = Caps{}) {
  return detail::quotient_generic(
      p.poset, [&](int a, int b) { return sc_equivalent(g, p.elems[a], p.elems[b]); }, caps);
}

inline QuotientPoset quotient_cac(const Multigraph& g, const OrientPoset& p,
                                  const Caps& caps = Caps{}) {
  QuotientPoset q = detail::quotient_generic(
      p.poset, [&](int a, int b) { return cac_equivalent(g, p.elems[a], p.elems[b]); }, caps);
  // independent algebraic characterization: same edge set and half the difference
  // of the +-1 vectors lies in the cut lattice; must carve out the same classes
  for (int a = 0; a < p.poset.n; ++a)
    for (int b = a + 1; b < p.poset.n; ++b) {
      bool one_step_class = q.class_of[a] == q.class_of[b];
      bool algebraic = false;
      if (same_edge_set(p.elems[a], p.elems[b])) {
        VecQ diff = vec_scale(rat(1, 2), vec_sub(to_vecq(orientation_vector(p.elems[a])),
                                                 to_vecq(orientation_vector(p.elems[b]))));
        algebraic = in_cut_space(g, diff);
      }
      check(one_step_class == algebraic,
            "quotient_cac: cut-reversal classes disagree with lattice-difference classes for " +
                p.poset.key[a] + " vs " + p.poset.key[b]);
    }
  return q;
}

}  // namespace latflow
