#include "bredonk/exactlinalg/smith_normal_form.hpp"

#include <omp.h>

#include <optional>
#include <utility>

namespace bredonk {
namespace {

// Below this many entries per sweep the OpenMP fork costs more than the work.
constexpr std::size_t kParallelSweepThreshold = 4096;

struct Reduction {
  IntMatrix a;
  IntMatrix left;
  IntMatrix right;
  bool track = false;
};

void swap_rows(IntMatrix& m, std::size_t i, std::size_t k) {
  if (i == k) return;
  auto ri = m.row(i);
  auto rk = m.row(k);
  for (std::size_t j = 0; j < ri.size(); ++j) swap(ri[j], rk[j]);
}

void swap_cols(IntMatrix& m, std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < m.rows(); ++i) swap(m(i, j), m(i, k));
}

// row_i -= q * row_t over columns [from, cols).
void row_axpy(IntMatrix& m, std::size_t i, std::size_t t, const Integer& q,
              std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
}

// col_j -= q * col_t over rows [from, rows).
void col_axpy(IntMatrix& m, std::size_t j, std::size_t t, const Integer& q,
              std::size_t from) {
  for (std::size_t i = from; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
}

std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(const IntMatrix& a,
                                                                 std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->first, best->second).get_mpz_t()) < 0) best = {{i, j}};
    }
  }
  return best;
}

// Clears column t below the pivot and row t right of it by one round of
// quotient subtraction. Returns true when both are fully zero afterwards.
bool sweep_pivot(Reduction& w, std::size_t t) {
  IntMatrix& a = w.a;
  const Integer pivot = a(t, t);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  std::vector<Integer> row_q(rows);
  for (std::size_t i = t + 1; i < rows; ++i) row_q[i] = tdiv(a(i, t), pivot);
  const bool par_rows = (rows - t) * (cols - t) >= kParallelSweepThreshold;
#pragma omp parallel for schedule(static) if (par_rows)
  for (std::size_t i = t + 1; i < rows; ++i) {
    if (sgn(row_q[i]) == 0) continue;
    row_axpy(a, i, t, row_q[i], t);
    if (w.track) row_axpy(w.left, i, t, row_q[i], 0);
  }

  std::vector<Integer> col_q(cols);
  for (std::size_t j = t + 1; j < cols; ++j) col_q[j] = tdiv(a(t, j), pivot);
  const bool par_cols = par_rows;
#pragma omp parallel for schedule(static) if (par_cols)
  for (std::size_t j = t + 1; j < cols; ++j) {
    if (sgn(col_q[j]) == 0) continue;
    col_axpy(a, j, t, col_q[j], t);
    if (w.track) col_axpy(w.right, j, t, col_q[j], 0);
  }

  for (std::size_t i = t + 1; i < rows; ++i)
    if (sgn(a(i, t)) != 0) return false;
  for (std::size_t j = t + 1; j < cols; ++j)
    if (sgn(a(t, j)) != 0) return false;
  return true;
}

std::optional<std::size_t> row_with_nondivisible_entry(const IntMatrix& a, std::size_t t) {
  const Integer& pivot = a(t, t);
  for (std::size_t i = t + 1; i < a.rows(); ++i)
    for (std::size_t j = t + 1; j < a.cols(); ++j)
      if (!mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) return i;
  return std::nullopt;
}

std::vector<Integer> reduce(Reduction& w) {
  IntMatrix& a = w.a;
  std::vector<Integer> d;
  const std::size_t diag = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < diag; ++t) {
    bool placed = false;
    while (true) {
      auto pos = min_abs_entry(a, t);
      if (!pos) break;
      swap_rows(a, t, pos->first);
      swap_cols(a, t, pos->second);
      if (w.track) {
        swap_rows(w.left, t, pos->first);
        swap_cols(w.right, t, pos->second);
      }
      if (!sweep_pivot(w, t)) continue;
      if (auto i = row_with_nondivisible_entry(a, t)) {
        // row_t += row_i brings a non-multiple of the pivot into row t.
        row_axpy(a, t, *i, -1, t);
        if (w.track) row_axpy(w.left, t, *i, -1, 0);
        continue;
      }
      placed = true;
      break;
    }
    if (!placed) break;
    if (sgn(a(t, t)) < 0) {
      for (std::size_t j = t; j < a.cols(); ++j) a(t, j) = -a(t, j);
      if (w.track)
        for (std::size_t j = 0; j < w.left.cols(); ++j) w.left(t, j) = -w.left(t, j);
    }
    d.push_back(a(t, t));
  }
  return d;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  Reduction w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), true};
  auto d = reduce(w);
  return SnfResult{std::move(d), std::move(w.left), std::move(w.right)};
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  Reduction w{m, {}, {}, false};
  return reduce(w);
}

}  // namespace bredonk
