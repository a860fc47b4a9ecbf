#include "bredonk/exactlinalg/smith_normal_form.hpp"

namespace bredonk::reference {
namespace {

// rows (t, i) <- [[s, u], [v, w]] * rows (t, i)
void combine_rows(IntMatrix& m, std::size_t t, std::size_t i, const Integer& s,
                  const Integer& u, const Integer& v, const Integer& w) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer top = s * m(t, j) + u * m(i, j);
    Integer bottom = v * m(t, j) + w * m(i, j);
    m(t, j) = std::move(top);
    m(i, j) = std::move(bottom);
  }
}

void combine_cols(IntMatrix& m, std::size_t t, std::size_t j, const Integer& s,
                  const Integer& u, const Integer& v, const Integer& w) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer left = s * m(i, t) + u * m(i, j);
    Integer right = v * m(i, t) + w * m(i, j);
    m(i, t) = std::move(left);
    m(i, j) = std::move(right);
  }
}

// Unimodular 2×2 block [[s, u], [v, w]] sending (x, y) to (g, 0).
struct Elimination {
  Integer s, u, v, w;
};

Elimination eliminate(const Integer& x, const Integer& y) {
  if (mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) {
    return {1, 0, -(y / x), 1};
  }
  Integer g, s, u;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return {s, u, -y / g, x / g};
}

}  // namespace

SnfResult smith_normal_form_serial(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  std::vector<Integer> d;
  const std::size_t diag = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot; this
    // keeps the cofactors of the 2×2 steps small
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j)
        if (sgn(a(i, j)) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (found && pi != t) {
      combine_rows(a, t, pi, 0, 1, 1, 0);
      combine_rows(left, t, pi, 0, 1, 1, 0);
    }
    if (found && pj != t) {
      combine_cols(a, t, pj, 0, 1, 1, 0);
      combine_cols(right, t, pj, 0, 1, 1, 0);
    }
    if (!found) break;

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        const auto e = eliminate(a(t, t), a(i, t));
        combine_rows(a, t, i, e.s, e.u, e.v, e.w);
        combine_rows(left, t, i, e.s, e.u, e.v, e.w);
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        clean = false;
        const auto e = eliminate(a(t, t), a(t, j));
        combine_cols(a, t, j, e.s, e.u, e.v, e.w);
        combine_cols(right, t, j, e.s, e.u, e.v, e.w);
      }
      if (!clean) continue;
      for (std::size_t i = t + 1; i < a.rows() && clean; ++i)
        for (std::size_t j = t + 1; j < a.cols() && clean; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            clean = false;
            for (std::size_t k = 0; k < a.cols(); ++k) a(t, k) += a(i, k);
            for (std::size_t k = 0; k < left.cols(); ++k) left(t, k) += left(i, k);
          }
    }
    if (sgn(a(t, t)) < 0) {
      for (std::size_t k = 0; k < a.cols(); ++k) a(t, k) = -a(t, k);
      for (std::size_t k = 0; k < left.cols(); ++k) left(t, k) = -left(t, k);
    }
    d.push_back(a(t, t));
  }
  return SnfResult{std::move(d), std::move(left), std::move(right)};
}

}  // namespace bredonk::reference
