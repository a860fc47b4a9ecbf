#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bredonk/groups/finite_group.hpp"
#include "bredonk/groups/group_id.hpp"

namespace bredonk {

/// Integer-valued complex character table. Rows are irreducibles (trivial
/// character first), columns follow the class order of build_group(group).
struct CharacterTable {
  GroupId group;
  std::vector<std::vector<long>> chars;

  std::size_t size() const { return chars.size(); }
  std::vector<long> degrees() const;
};

/// True when the catalogue group has only integer character values, i.e. it
/// is not Cyclic(m) (or Z/2 × Cyclic(m)) with m ≥ 3.
bool has_integer_character_table(const GroupId& id);

/// Hardcoded table data, validated against the group's class data before it
/// is returned. Throws DomainError for groups without an integer table.
CharacterTable character_table(const GroupId& id);

/// Checks both orthogonality relations, Σ χ(1)² = |G|, that products of
/// irreducibles decompose with nonnegative integer multiplicities, and that
/// g ↦ χ(g²) decomposes over Z. Throws DomainError on the first failure.
void validate_character_table(const FiniteGroupData& g, const CharacterTable& table);

/// Frobenius–Schur indicator (1/|G|) Σ_g χ(g²), evaluated through class sizes
/// and the square map. Throws DomainError when the sum is not in {-1, 0, 1}.
int fs_indicator(const FiniteGroupData& g, std::span<const long> chi);

/// Character j of Z/m: generator ↦ exp(2πij/m).
struct CyclicCharacter {
  unsigned modulus;
  unsigned index;
};

/// 1 when m divides 2j (the character is real), else 0.
int cyclic_fs_indicator(const CyclicCharacter& chi);

/// Number of irreducible complex characters of each Frobenius–Schur type.
struct IndicatorCounts {
  std::size_t real = 0;          // ν = 1
  std::size_t complex = 0;       // ν = 0
  std::size_t quaternionic = 0;  // ν = -1

  std::size_t total() const { return real + complex + quaternionic; }
};

IndicatorCounts indicator_counts(const GroupId& id);

/// Whether the real, complex and quaternionic character tables agree, i.e.
/// every irreducible has indicator 1. Groups with integer tables are checked
/// row by row. The remaining catalogue groups are abelian, so every
/// irreducible is linear and the Frobenius–Schur count reduces the question
/// to whether every element squares to the identity.
bool all_tables_coincide(const GroupId& id);

}  // namespace bredonk
