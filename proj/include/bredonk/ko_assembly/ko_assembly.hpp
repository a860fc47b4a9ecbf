#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bredonk/exactlinalg/abelian_group.hpp"
#include "bredonk/fuchsian/fuchsian.hpp"

namespace bredonk {

/// A periodic graded abelian group: groups[n mod period]. Degrees in
/// extension_ambiguous are only known up to an extension problem.
struct GradedGroup {
  unsigned period = 8;
  std::vector<FinAbGroup> groups;
  std::set<unsigned> extension_ambiguous;

  GradedGroup() = default;
  GradedGroup(unsigned period, std::vector<FinAbGroup> groups, std::set<unsigned> ambiguous = {});

  /// Any integer degree, reduced mod period.
  const FinAbGroup& at(long n) const;
  bool ambiguous(long n) const;

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;
};

/// KO_q(pt) for q = 0..7: Z, Z/2, Z/2, 0, Z, 0, 0, 0.
const GradedGroup& ko_point();
/// K_q(pt): Z, 0.
const GradedGroup& k_point();

/// E^2_{p,q} with q read mod the period; missing entries are zero.
struct E2Page {
  unsigned period = 8;
  int max_p = -1;
  std::map<std::pair<int, unsigned>, FinAbGroup> entries;

  FinAbGroup at(int p, long q) const;
  /// Columns p holding at least one nonzero entry.
  std::vector<int> nonzero_columns() const;
};

/// K_0 = H_0 ⊕ H_2, K_1 = H_1. Throws DomainError when some H_n with n ≥ 3 is
/// nonzero, since collapse is then not automatic.
KGroups collapse_complex(const std::vector<FinAbGroup>& h);

/// E^2_{p,q} = H_p ⊗ KO_q(pt) ⊕ Tor(H_{p−1}, KO_q(pt)). Valid only when every
/// stabiliser has coinciding real, complex and quaternionic tables; checking
/// that is the caller's job.
E2Page ko_e2_page(const std::vector<FinAbGroup>& h);

/// KO_n = E^2_{0,n}. Throws DomainError when any column p ≠ 0 is nonzero.
GradedGroup ko_column_collapse(const E2Page& page);

/// H_p(X × (Z/2 acting trivially)) for torsion-free H: every rank doubles.
/// Throws DomainError on torsion.
std::vector<FinAbGroup> kunneth_times_z2(const std::vector<FinAbGroup>& h);

}  // namespace bredonk
