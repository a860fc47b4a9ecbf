#pragma once

#include <cstdint>
#include <vector>

#include "bredonk/exactlinalg/abelian_group.hpp"
#include "bredonk/fuchsian/fuchsian.hpp"
#include "bredonk/ko_assembly/ko_assembly.hpp"

namespace bredonk {

/// Conjugacy classes of finite-order elements of PSL_2(Z[1/p]).
struct ClassCount {
  unsigned identity = 1;
  unsigned order2 = 0;
  unsigned order3 = 0;
  unsigned total = 1;

  friend bool operator==(const ClassCount&, const ClassCount&) = default;
};

/// Conjugacy classes of maximal finite subgroups (all Z/2 or Z/3).
struct MaximalSubgroupList {
  unsigned z2_classes = 0;
  unsigned z3_classes = 0;

  friend bool operator==(const MaximalSubgroupList&, const MaximalSubgroupList&) = default;
};

/// PSL_2(Z) = Z/2 * Z/3 has one class of order-2 and two of order-3 elements.
/// Each copy in the amalgam PSL_2(Z) *_{Γ_0(p)} PSL_2(Z) keeps its classes
/// unless Γ_0(p) has torsion of that order, in which case they fuse.
ClassCount class_count_psl(std::uint64_t p);

/// Each Z/3 carries two classes of nontrivial elements.
MaximalSubgroupList maximal_subgroups(std::uint64_t p);

/// {H_0, H_1, H_2} of PSL_2(Z[1/p]) from the Mayer–Vietoris sequence of the
/// amalgam. H_2 ≅ H_1(Γ_0(p)) because H_1(PSL_2(Z)) = 0; H_0 is the colimit
/// over finite subgroups, free on the element classes; the rank of H_1 is then
/// forced by exactness. Throws DomainError if that rank would be negative or
/// any input carried torsion.
std::vector<FinAbGroup> psl_zp_bredon(std::uint64_t p);

/// K_0 = H_0 ⊕ H_2, K_1 = H_1.
KGroups psl_zp_k(std::uint64_t p);

/// Two copies of psl_zp_k.
KGroups sl_zp_k(std::uint64_t p);

/// K-theory of the reduced C*-algebra of PSL_2(Z[1/p]) for p ≡ 11 mod 12,
/// from reduced K of the maximal finite subgroups plus K of the quotient, a
/// wedge of (p+7)/6 two-spheres. Throws DomainError for other p.
KGroups cstar_k_p11(std::uint64_t p);

/// Real counterpart: KO_n = 2·KO_n(pt) ⊕ 2·K_n(pt) ⊕ KO_n(pt) ⊕ KO_{n−2}(pt)^b
/// with b = (p+7)/6. Degrees 1, 3, 4 are flagged as determined only up to
/// extension. Throws DomainError for p ≢ 11 mod 12.
GradedGroup cstar_ko_p11(std::uint64_t p);

}  // namespace bredonk
