#pragma once

#include <cstddef>
#include <vector>

#include "bredonk/exactlinalg/abelian_group.hpp"
#include "bredonk/exactlinalg/integer_matrix.hpp"

namespace bredonk {

/// Bounded complex of free Z-modules
///   C_{b+k} --boundaries[k-1]--> ... --boundaries[0]--> C_b
/// where b is the bottom degree. boundaries[k] is a rank(C_{b+k}) ×
/// rank(C_{b+k+1}) matrix acting on column vectors.
class IntChainComplex {
 public:
  IntChainComplex() = default;
  /// Throws DomainError on shape mismatch or when some composite of consecutive
  /// boundaries is nonzero.
  IntChainComplex(int bottom_degree, std::vector<std::size_t> ranks,
                  std::vector<IntMatrix> boundaries);

  /// Ranks are read off the matrices; `boundaries` must be nonempty.
  static IntChainComplex from_boundaries(int bottom_degree,
                                         std::vector<IntMatrix> boundaries);

  int bottom_degree() const { return bottom_degree_; }
  int top_degree() const { return bottom_degree_ + static_cast<int>(ranks_.size()) - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::vector<IntMatrix>& boundaries() const { return boundaries_; }

  /// rank of C_n, zero outside the support.
  std::size_t rank(int n) const;
  /// ∂_n : C_n → C_{n-1}; an appropriately shaped empty matrix outside the support.
  IntMatrix boundary(int n) const;

  /// Σ (-1)^n rank C_n.
  long euler_characteristic() const;

 private:
  int bottom_degree_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
};

/// ker ∂_n / im ∂_{n+1}. Zero outside the support.
FinAbGroup homology(const IntChainComplex& c, int n);

/// Homology in every degree of the support, bottom degree first.
std::vector<FinAbGroup> all_homology(const IntChainComplex& c);

}  // namespace bredonk
