#pragma once

#include <cstddef>
#include <vector>

#include "bredonk/exactlinalg/integer_matrix.hpp"

namespace bredonk {

/// Smith normal form `left * m * right == diag(d, 0...)` with `left` and
/// `right` unimodular and each d[i] dividing d[i + 1].
struct SnfResult {
  std::vector<Integer> d;
  IntMatrix left;
  IntMatrix right;

  std::size_t rank() const { return d.size(); }
};

/// Unimodular reduction with the minimal-absolute-value pivot rule. Row and
/// column sweeps run under OpenMP once the matrix is large enough for the
/// fork to pay off; results are identical to the serial reference.
SnfResult smith_normal_form(const IntMatrix& m);

/// Invariant factors only. Skips the transform bookkeeping.
std::vector<Integer> invariant_factors(const IntMatrix& m);

namespace reference {

/// Straightforward single-threaded SNF kept as the oracle for the parallel
/// kernel. Same pivot rule, no OpenMP, no transform sharing tricks.
SnfResult smith_normal_form_serial(const IntMatrix& m);

}  // namespace reference

}  // namespace bredonk
