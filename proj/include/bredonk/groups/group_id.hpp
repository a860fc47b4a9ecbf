#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bredonk {

enum class GroupKind { Trivial, Cyclic, Klein4, Dihedral, Sym4 };

/// Catalogue key for the finite groups that occur as cell stabilisers.
/// `with_z2` marks a direct product with Z/2; nesting is structurally capped
/// at one level.
struct GroupId {
  GroupKind kind = GroupKind::Trivial;
  /// m for Cyclic(m), n for Dihedral(n) (order 2n); unused otherwise.
  unsigned param = 0;
  bool with_z2 = false;

  static GroupId trivial() { return {}; }
  static GroupId cyclic(unsigned m) { return {GroupKind::Cyclic, m, false}; }
  static GroupId klein4() { return {GroupKind::Klein4, 0, false}; }
  static GroupId dihedral(unsigned n) { return {GroupKind::Dihedral, n, false}; }
  static GroupId sym4() { return {GroupKind::Sym4, 0, false}; }
  /// Throws DomainError if `inner` already carries a Z/2 factor. Products
  /// with the trivial group and with Z/2 come back as Cyclic(2) and Klein4.
  static GroupId times_z2(GroupId inner);

  GroupId inner() const { return {kind, param, false}; }
  /// True for the trivial group and Cyclic(1).
  bool is_trivial() const;
  /// Cyclic(m) for m ≥ 1, or the trivial group as Cyclic(1).
  bool is_cyclic() const;
  unsigned cyclic_order() const;

  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

/// In the catalogue: Trivial, Cyclic(m) with m ≥ 1, Klein4, Dihedral(n) with
/// n ∈ {3, 4, 6}, Sym4, and each of these times Z/2.
bool in_catalogue(const GroupId& id);

/// Every catalogue group with cyclic factors of order at most max_cyclic,
/// distinct up to isomorphism, products with Z/2 after their inner groups.
std::vector<GroupId> catalogue_groups(unsigned max_cyclic);

/// Input-file names: "1", "Z2", "Z3", "Zm(7)", "Z2xZ2", "D3", "D4", "D6", "S4",
/// and a "Z2x" prefix for products ("Z2xS4"). Cyclic(m) prints as "Z<m>".
std::string group_name(const GroupId& id);
/// Throws ParseError on unknown names.
GroupId parse_group_name(std::string_view name);

}  // namespace bredonk
