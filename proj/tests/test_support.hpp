#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bredonk/exactlinalg/integer_matrix.hpp"

namespace bredonk::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

/// Fraction-free Gaussian elimination; exact for any square matrix.
inline Integer bareiss_det(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Same elimination in 64-bit arithmetic; fine while every minor fits.
inline std::int64_t small_det(std::vector<std::int64_t> a, std::size_t n) {
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = static_cast<std::int64_t>(
            (static_cast<__int128>(a[i * n + j]) * a[k * n + k] - static_cast<__int128>(a[i * n + k]) * a[k * n + j]) /
            prev);
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// Invariant factors as D_k / D_{k−1}, D_k the gcd of all k×k minors.
/// Entries must be small enough for 64-bit minors.
inline std::vector<std::int64_t> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<std::int64_t> d;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.rows(), k, rs);
    subsets(m.cols(), k, cs);
    std::int64_t g = 0;
    std::vector<std::int64_t> buf(k * k);
    for (const auto& r : rs)
      for (const auto& c : cs) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) buf[i * k + j] = m(r[i], c[j]).get_si();
        g = std::gcd(g, small_det(buf, k));
      }
    if (g == 0) break;
    d.push_back(g / prev);
    prev = g;
  }
  return d;
}

/// A random unimodular matrix and its inverse, built from elementary moves.
struct Unimodular {
  IntMatrix u;
  IntMatrix inverse;
};

inline Unimodular random_unimodular(std::mt19937_64& rng, std::size_t n, int moves = 12) {
  Unimodular r{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n < 2) return r;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int t = 0; t < moves; ++t) {
    const std::size_t i = idx(rng), j = idx(rng);
    const int c = coef(rng);
    if (i == j || c == 0) continue;
    IntMatrix e = IntMatrix::identity(n), einv = IntMatrix::identity(n);
    e(i, j) = c;
    einv(i, j) = -c;
    r.u = e * r.u;
    r.inverse = r.inverse * einv;
  }
  return r;
}

}  // namespace bredonk::testing
