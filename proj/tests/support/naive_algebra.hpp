// Slow, transform-free integer algebra used only to cross-check the library.
#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace naive {

using Int = boost::multiprecision::cpp_int;
using Mat = std::vector<std::vector<Int>>;

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// x*a + y*b = g
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

// Invariant factors (including 1s, excluding zeros) by repeated 2x2 gcd
// combinations on the first available pivot, then gcd/lcm normalization.
inline std::vector<Int> invariant_factors(Mat d) {
  const std::size_t r = d.size(), c = r ? d[0].size() : 0;
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r && pi == r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (d[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == r) break;
    std::swap(d[t], d[pi]);
    for (auto& row : d) std::swap(row[t], row[pj]);
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d[i][t] == 0) continue;
        Int x = 1, y = 0;
        Int a = d[t][t], b = d[i][t];
        Int g = (b % a == 0) ? a : ext_gcd(a, b, x, y);
        Int ag = a / g, bg = b / g;
        for (std::size_t j = 0; j < c; ++j) {
          Int u = d[t][j], v = d[i][j];
          d[t][j] = x * u + y * v;
          d[i][j] = -bg * u + ag * v;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d[t][j] == 0) continue;
        Int x = 1, y = 0;
        Int a = d[t][t], b = d[t][j];
        Int g = (b % a == 0) ? a : ext_gcd(a, b, x, y);
        Int ag = a / g, bg = b / g;
        for (std::size_t i = 0; i < r; ++i) {
          Int u = d[i][t], v = d[i][j];
          d[i][t] = x * u + y * v;
          d[i][j] = -bg * u + ag * v;
        }
        dirty = true;
      }
      for (std::size_t i = t + 1; i < r; ++i)
        if (d[i][t] != 0) dirty = true;
    }
    diag.push_back(abs(d[t][t]));
  }
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Int g = gcd(diag[i], diag[j]);
      Int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

// Fraction-free (Bareiss) elimination; returns rank, sets det for square input.
inline std::size_t bareiss(Mat a, Int* det = nullptr) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  Int prev = 1;
  std::size_t rank = 0;
  int sign = 1;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t p = rank;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    if (p != rank) {
      std::swap(a[p], a[rank]);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  if (det) *det = (rank == r && r == c) ? Int(sign) * prev : Int(0);
  if (det && r == 0) *det = 1;
  return rank;
}

}  // namespace naive
