#pragma once

#include <cstddef>
#include <string_view>

#include "bredonk/exactlinalg/integer_matrix.hpp"
#include "bredonk/groups/group_id.hpp"

namespace bredonk {

enum class RepFlavor { Complex, Real, Quaternionic };

/// Free Z-module on the irreducible representations of one flavor, in the
/// fixed basis order. For Z/m the complex basis is the characters χ_0..χ_{m-1}
/// indexed by residue; restriction to Z/d ≤ Z/m reduces the index mod d.
struct RepRing {
  GroupId group;
  RepFlavor flavor = RepFlavor::Complex;
  std::size_t rank = 0;

  friend bool operator==(const RepRing&, const RepRing&) = default;
};

RepRing rep_ring(const GroupId& group, RepFlavor flavor = RepFlavor::Complex);

/// A homomorphism between representation rings as a target-rank × source-rank
/// matrix in the fixed bases.
struct InductionMap {
  RepRing source;
  RepRing target;
  IntMatrix matrix;
};

/// Ind from the trivial group to Z/m: the regular representation, one column
/// of m ones.
InductionMap induction_from_trivial(unsigned m);

/// Ind from the unique Z/d ≤ Z/m: χ_j ↦ Σ_{k ≡ j (mod d)} χ_k. Throws
/// DomainError unless d divides m.
InductionMap cyclic_induction(unsigned d, unsigned m);

/// Ind from the trivial group to any catalogue group with an integer
/// character table (or a cyclic group): Σ χ(1)·χ.
InductionMap induction_from_trivial_group(const GroupId& target);

enum class DegreeMapKind {
  Nu,     // complexification R_R → R_C
  Rho,    // realification R_C → R_R
  Sigma,  // symplectification R_C → R_H
  Eta,    // complexification R_H → R_C
};

/// ν, ρ, σ, η on a group all of whose irreducibles have indicator 1: ν and σ
/// are the identity on the common basis, ρ and η are multiplication by 2.
/// Throws DomainError for groups outside that regime.
InductionMap degree_map(DegreeMapKind kind, const GroupId& group);

/// Dimension of each basis element, in basis order. Complex flavor only.
std::vector<long> basis_degrees(const GroupId& group);

/// Σ_i degree_target[i] · column[i] == index · degree_source[j] for every column j.
bool preserves_dimension(const InductionMap& map, long index);

std::string_view flavor_name(RepFlavor f);

}  // namespace bredonk
