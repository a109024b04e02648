#pragma once

#include <vector>

#include "rational.hpp"

namespace latflow {

using Mat = std::vector<std::vector<Rat>>;

inline std::vector<Rat> mat_vec(const Mat& a, const std::vector<Rat>& x) {
  std::vector<Rat> out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

namespace detail {

// in-place forward elimination; returns pivot columns
inline std::vector<int> eliminate(Mat& m) {
  std::vector<int> pivots;
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == Rat(0)) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == Rat(0)) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline int rank(Mat m) { return static_cast<int>(detail::eliminate(m).size()); }

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rat> x;
};

// exact solve of A x = b; unique only when A has full column rank and b is consistent
inline SolveResult linear_solve(const Mat& a, const std::vector<Rat>& b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Mat aug(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = detail::eliminate(aug);
  for (int p : pivots)
    if (p == static_cast<int>(cols)) return {SolveStatus::inconsistent, {}};
  if (pivots.size() < cols) return {SolveStatus::underdetermined, {}};
  SolveResult res{SolveStatus::unique, std::vector<Rat>(cols, Rat(0))};
  for (size_t r = 0; r < pivots.size(); ++r) res.x[pivots[r]] = aug[r][cols];
  return res;
}

// rank of the affine span (differences from the first point); empty set -> -1, point -> 0
inline int affine_rank(const std::vector<std::vector<Rat>>& pts) {
  if (pts.empty()) return -1;
  Mat diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(d);
  }
  if (diffs.empty()) return 0;
  return rank(diffs);
}

// positive definiteness via leading principal minors (exact)
inline bool is_positive_definite(const Mat& m) {
  size_t n = m.size();
  for (size_t k = 1; k <= n; ++k) {
    Mat lead(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
    // determinant by elimination with row-swap sign tracking
    Rat det(1);
    int sign = 1;
    for (size_t c = 0; c < k; ++c) {
      size_t p = c;
      while (p < k && lead[p][c] == Rat(0)) ++p;
      if (p == k) {
        det = Rat(0);
        break;
      }
      if (p != c) {
        std::swap(lead[p], lead[c]);
        sign = -sign;
      }
      det *= lead[c][c];
      Rat inv = Rat(1) / lead[c][c];
      for (size_t i = c + 1; i < k; ++i) {
        Rat f = lead[i][c] * inv;
        if (f == Rat(0)) continue;
        for (size_t j = c; j < k; ++j) lead[i][j] -= f * lead[c][j];
      }
    }
    if (sign < 0) det = -det;
    if (det <= Rat(0)) return false;
  }
  return true;
}

}  // namespace latflow
