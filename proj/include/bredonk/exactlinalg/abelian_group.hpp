#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "bredonk/exactlinalg/integer.hpp"

namespace bredonk {

/// Finitely generated abelian group Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dk in invariant-factor
/// form (every d_i ≥ 2, d_i | d_{i+1}). Two groups are isomorphic exactly when
/// their fields compare equal.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::size_t free_rank) : free_rank_(free_rank) {}

  /// Normalizes an arbitrary list of cyclic orders: 0 means a free Z summand,
  /// 1 and -1 are dropped, signs are ignored.
  static FinAbGroup from_cyclic_orders(std::size_t free_rank,
                                       const std::vector<Integer>& orders);
  static FinAbGroup free(std::size_t rank) { return FinAbGroup(rank); }
  static FinAbGroup cyclic(const Integer& n) { return from_cyclic_orders(0, {n}); }
  /// (Z/n)^k
  static FinAbGroup elementary(const Integer& n, std::size_t k);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  /// Order of the torsion subgroup.
  Integer torsion_order() const;

  /// "0", "Z", "Z^5", "Z/2", "Z^5 + Z/2 + Z/2".
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
/// g ⊕ g ⊕ ... (k copies).
FinAbGroup direct_power(const FinAbGroup& g, std::size_t k);

/// g ⊗ Z/n for n ≥ 1.
FinAbGroup tensor_cyclic(const FinAbGroup& g, const Integer& n);
/// Tor_1(g, Z/n) for n ≥ 1.
FinAbGroup tor_cyclic(const FinAbGroup& g, const Integer& n);

inline FinAbGroup tensor_z2(const FinAbGroup& g) { return tensor_cyclic(g, 2); }
inline FinAbGroup tor_z2(const FinAbGroup& g) { return tor_cyclic(g, 2); }

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g);

}  // namespace bredonk
