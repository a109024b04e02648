#pragma once

#include <optional>
#include <vector>

#include "multigraph.hpp"
#include "rational.hpp"

namespace latflow {

// edge vectors store the value under the reference orientation (tail -> head);
// the value on the reversed oriented edge is the negation, never stored twice
using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

inline VecQ to_vecq(const VecZ& a) {
  VecQ out;
  out.reserve(a.size());
  for (const Int& x : a) out.push_back(Rat(x));
  return out;
}

inline VecQ vec_add(const VecQ& a, const VecQ& b) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline VecQ vec_sub(const VecQ& a, const VecQ& b) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline VecQ vec_scale(const Rat& s, const VecQ& a) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

inline bool vec_is_zero(const VecQ& a) {
  for (const Rat& x : a)
    if (x != Rat(0)) return false;
  return true;
}

// simplicial inner product: sum over edges of a_e * b_e under reference orientation
inline Rat inner_product(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw input_error("inner_product: host mismatch");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int inner_product(const VecZ& a, const VecZ& b) {
  if (a.size() != b.size()) throw input_error("inner_product: host mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat q_form(const VecQ& a) { return inner_product(a, a); }
inline Int q_form(const VecZ& a) { return inner_product(a, a); }

inline Rat l1_norm(const VecQ& a) {
  Rat s(0);
  for (const Rat& x : a) s += abs_rat(x);
  return s;
}

inline std::string vec_to_string(const VecQ& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += to_string(a[i]);
  }
  return s + ")";
}

inline std::string vec_to_string(const VecZ& a) { return vec_to_string(to_vecq(a)); }

// conservation at every vertex; loops contribute zero automatically
inline bool is_flow(const Multigraph& g, const VecQ& x) {
  if (static_cast<int>(x.size()) != g.m()) throw input_error("is_flow: host mismatch");
  VecQ net(g.n, Rat(0));
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e)) continue;
    net[g.edges[e].u] -= x[e];
    net[g.edges[e].v] += x[e];
  }
  for (const Rat& v : net)
    if (v != Rat(0)) return false;
  return true;
}

inline bool is_flow(const Multigraph& g, const VecZ& x) { return is_flow(g, to_vecq(x)); }

// arcs where the value is strictly positive after orienting each edge by sign
inline OrientedSubgraph support(const Multigraph& g, const VecQ& x) {
  if (static_cast<int>(x.size()) != g.m()) throw input_error("support: host mismatch");
  OrientedSubgraph d{std::vector<int8_t>(g.m(), 0)};
  for (int e = 0; e < g.m(); ++e)
    if (x[e] > Rat(0)) d.dir[e] = 1;
    else if (x[e] < Rat(0)) d.dir[e] = -1;
  return d;
}

inline OrientedSubgraph support(const Multigraph& g, const VecZ& x) {
  return support(g, to_vecq(x));
}

// the +-1 flow of a circuit (or of any partial orientation)
inline VecZ orientation_vector(const OrientedSubgraph& d) {
  VecZ x;
  x.reserve(d.dir.size());
  for (int8_t s : d.dir) x.push_back(Int(s));
  return x;
}

inline VecZ circuit_flow(const Circuit& c) { return orientation_vector(c); }

// lattice flow with all entries in {0, +1, -1}; support is then in-degree = out-degree
inline bool is_eulerian_element(const Multigraph& g, const VecZ& x) {
  if (!is_flow(g, x)) throw input_error("is_eulerian_element: input is not a flow");
  for (const Int& v : x)
    if (v < -1 || v > 1) return false;
  return true;
}

inline std::vector<VecZ> flow_basis(const Multigraph& g) {
  std::vector<VecZ> basis;
  for (const Circuit& c : cycle_basis(g)) basis.push_back(circuit_flow(c));
  return basis;
}

// greedy peel: repeatedly subtract the first enumerated circuit whose arcs all sit
// inside the support, as many copies as fit; optionally lead with a designated circuit
inline std::vector<Circuit> circuit_decomposition(const Multigraph& g, const VecZ& x,
                                                  const Circuit* first = nullptr,
                                                  const Caps& caps = Caps{}) {
  if (!is_flow(g, x)) throw input_error("circuit_decomposition: input is not a flow");
  std::vector<Circuit> circuits = enumerate_circuits(g, caps);
  VecZ rest = x;
  std::vector<Circuit> out;
  auto fits = [&](const Circuit& c) {
    for (int e = 0; e < g.m(); ++e) {
      if (c.dir[e] == 0) continue;
      if (c.dir[e] > 0 && rest[e] <= 0) return false;
      if (c.dir[e] < 0 && rest[e] >= 0) return false;
    }
    return true;
  };
  auto subtract_copies = [&](const Circuit& c, const Int& copies) {
    for (int e = 0; e < g.m(); ++e) rest[e] -= copies * Int(c.dir[e]);
    for (Int i = 0; i < copies; ++i) out.push_back(c);
  };
  if (first) {
    if (!fits(*first))
      throw input_error("circuit_decomposition: designated circuit not inside support");
    subtract_copies(*first, 1);
  }
  while (true) {
    bool all_zero = true;
    for (const Int& v : rest)
      if (v != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) break;
    bool found = false;
    for (const Circuit& c : circuits) {
      if (!fits(c)) continue;
      Int copies = -1;
      for (int e = 0; e < g.m(); ++e)
        if (c.dir[e] != 0) {
          Int avail = abs_int(rest[e]);
          if (copies < 0 || avail < copies) copies = avail;
        }
      subtract_copies(c, copies);
      found = true;
      break;
    }
    check(found, "circuit_decomposition: nonzero flow with no circuit in its support");
  }
  return out;
}

}  // namespace latflow
