#include "bredonk/reprings/rep_ring.hpp"

#include "bredonk/errors.hpp"
#include "bredonk/groups/character_table.hpp"
#include "bredonk/groups/finite_group.hpp"

namespace bredonk {

std::string_view flavor_name(RepFlavor f) {
  switch (f) {
    case RepFlavor::Complex: return "complex";
    case RepFlavor::Real: return "real";
    case RepFlavor::Quaternionic: return "quaternionic";
  }
  return "?";
}

RepRing rep_ring(const GroupId& group, RepFlavor flavor) {
  if (!in_catalogue(group)) throw DomainError("reprings: " + group_name(group) + " is not in the catalogue");
  const IndicatorCounts n = indicator_counts(group);
  if (flavor == RepFlavor::Complex) return {group, flavor, n.total()};
  // Real irreducibles: χ (ν = 1), χ + χ̄ (ν = 0, one per pair), 2χ (ν = -1).
  // Quaternionic irreducibles are the same count with the roles of ν = ±1 swapped.
  return {group, flavor, n.real + n.complex / 2 + n.quaternionic};
}

std::vector<long> basis_degrees(const GroupId& group) {
  if (has_integer_character_table(group)) return character_table(group).degrees();
  return std::vector<long>(rep_ring(group).rank, 1);
}

InductionMap induction_from_trivial(unsigned m) {
  if (m == 0) throw DomainError("reprings: modulus must be positive");
  return cyclic_induction(1, m);
}

InductionMap cyclic_induction(unsigned d, unsigned m) {
  if (d == 0 || m == 0 || m % d != 0)
    throw DomainError("reprings: Z" + std::to_string(d) + " is not a subgroup of Z" +
                      std::to_string(m));
  IntMatrix mat(m, d);
  for (unsigned k = 0; k < m; ++k) mat(k, k % d) = 1;
  return {rep_ring(GroupId::cyclic(d)), rep_ring(GroupId::cyclic(m)), std::move(mat)};
}

InductionMap induction_from_trivial_group(const GroupId& target) {
  const auto degrees = basis_degrees(target);
  IntMatrix mat(degrees.size(), 1);
  for (std::size_t i = 0; i < degrees.size(); ++i) mat(i, 0) = degrees[i];
  return {rep_ring(GroupId::trivial()), rep_ring(target), std::move(mat)};
}

InductionMap degree_map(DegreeMapKind kind, const GroupId& group) {
  if (!all_tables_coincide(group))
    throw DomainError("reprings: degree maps need every indicator equal to 1; " +
                      group_name(group) + " fails this");
  const std::size_t n = rep_ring(group).rank;
  RepFlavor from = RepFlavor::Complex, to = RepFlavor::Complex;
  long factor = 1;
  switch (kind) {
    case DegreeMapKind::Nu: from = RepFlavor::Real; break;
    case DegreeMapKind::Rho: to = RepFlavor::Real; factor = 2; break;
    case DegreeMapKind::Sigma: to = RepFlavor::Quaternionic; break;
    case DegreeMapKind::Eta: from = RepFlavor::Quaternionic; factor = 2; break;
  }
  return {rep_ring(group, from), rep_ring(group, to), IntMatrix::identity(n).scaled(factor)};
}

bool preserves_dimension(const InductionMap& map, long index) {
  const auto src = basis_degrees(map.source.group);
  const auto dst = basis_degrees(map.target.group);
  if (map.matrix.rows() != dst.size() || map.matrix.cols() != src.size()) return false;
  for (std::size_t j = 0; j < src.size(); ++j) {
    Integer dim = 0;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (sgn(map.matrix(i, j)) < 0) return false;
      dim += map.matrix(i, j) * dst[i];
    }
    if (dim != index * src[j]) return false;
  }
  return true;
}

}  // namespace bredonk
