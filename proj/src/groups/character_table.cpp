#include "bredonk/groups/character_table.hpp"

#include <map>
#include <string>

#include "bredonk/errors.hpp"

namespace bredonk {
namespace {

using Table = std::vector<std::vector<long>>;

// Columns in build_group class order; see FiniteGroupData.
Table base_table(const GroupId& id) {
  switch (id.kind) {
    case GroupKind::Trivial:
      return {{1}};
    case GroupKind::Cyclic:
      if (id.param == 1) return {{1}};
      if (id.param == 2) return {{1, 1}, {1, -1}};
      break;
    case GroupKind::Klein4:
      return {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    case GroupKind::Dihedral:
      // classes: e, reflections, rotations
      if (id.param == 3) return {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
      // classes: e, r^2, vertex reflections, edge reflections, r
      if (id.param == 4)
        return {{1, 1, 1, 1, 1},
                {1, 1, -1, -1, 1},
                {1, 1, 1, -1, -1},
                {1, 1, -1, 1, -1},
                {2, -2, 0, 0, 0}};
      // classes: e, r^3, vertex reflections, edge reflections, r^2, r
      if (id.param == 6)
        return {{1, 1, 1, 1, 1, 1},
                {1, 1, -1, -1, 1, 1},
                {1, -1, 1, -1, 1, -1},
                {1, -1, -1, 1, 1, -1},
                {2, -2, 0, 0, -1, 1},
                {2, 2, 0, 0, -1, -1}};
      break;
    case GroupKind::Sym4:
      // classes: e, (01)(23), (01), (012), (0123)
      return {{1, 1, 1, 1, 1},
              {1, 1, -1, 1, -1},
              {2, 2, 0, -1, 0},
              {3, -1, 1, 0, -1},
              {3, -1, -1, 0, 1}};
  }
  throw DomainError("groups: " + group_name(id) + " has no integer character table");
}

// Tensor construction: χ × ε evaluated on product classes, rows ordered with
// all χ × trivial first, then all χ × sign.
Table product_table(const GroupId& id, const FiniteGroupData& g) {
  const GroupId inner_id = id.inner();
  const Table inner = base_table(inner_id);
  const FiniteGroupData h = build_group(inner_id);
  const auto inner_perms = permutation_elements(inner_id);
  const auto perms = permutation_elements(id);
  std::map<std::vector<unsigned>, std::size_t> inner_index;
  for (std::size_t i = 0; i < inner_perms.size(); ++i) inner_index.emplace(inner_perms[i], i);
  const std::size_t d = inner_perms.front().size();

  std::vector<std::size_t> inner_class(g.class_count());
  std::vector<long> sign(g.class_count());
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto& p = perms[g.representative(c)];
    std::vector<unsigned> head(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(d));
    inner_class[c] = h.class_of(static_cast<FiniteGroupData::Element>(inner_index.at(head)));
    sign[c] = p[d] == d ? 1 : -1;
  }
  Table t;
  for (long eps : {1L, -1L}) {
    for (const auto& row : inner) {
      std::vector<long> r(g.class_count());
      for (std::size_t c = 0; c < g.class_count(); ++c)
        r[c] = row[inner_class[c]] * (eps == 1 ? 1 : sign[c]);
      t.push_back(std::move(r));
    }
  }
  return t;
}

long weighted_sum(const FiniteGroupData& g, const std::vector<long>& values) {
  long s = 0;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    s += static_cast<long>(g.class_size(c)) * values[c];
  return s;
}

[[noreturn]] void invalid(const GroupId& id, const std::string& why) {
  throw DomainError("character table of " + group_name(id) + ": " + why);
}

}  // namespace

std::vector<long> CharacterTable::degrees() const {
  std::vector<long> d;
  for (const auto& row : chars) d.push_back(row.front());
  return d;
}

bool has_integer_character_table(const GroupId& id) {
  if (!in_catalogue(id)) return false;
  return !(id.kind == GroupKind::Cyclic && id.param >= 3);
}

void validate_character_table(const FiniteGroupData& g, const CharacterTable& table) {
  const std::size_t k = g.class_count();
  const long order = static_cast<long>(g.order());
  const auto& x = table.chars;
  if (x.size() != k) invalid(table.group, "row count differs from class count");
  for (const auto& row : x)
    if (row.size() != k) invalid(table.group, "row length differs from class count");

  long degree_squares = 0;
  for (const auto& row : x) degree_squares += row[0] * row[0];
  if (degree_squares != order) invalid(table.group, "degree squares do not sum to the order");

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<long> prod(k);
      for (std::size_t c = 0; c < k; ++c) prod[c] = x[i][c] * x[j][c];
      if (weighted_sum(g, prod) != (i == j ? order : 0)) invalid(table.group, "rows not orthonormal");
    }

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      long s = 0;
      for (std::size_t i = 0; i < k; ++i) s += x[i][a] * x[i][b];
      const long expected = a == b ? order / static_cast<long>(g.class_size(a)) : 0;
      if (s != expected) invalid(table.group, "columns not orthogonal");
    }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        std::vector<long> prod(k);
        for (std::size_t c = 0; c < k; ++c) prod[c] = x[i][c] * x[j][c] * x[l][c];
        const long s = weighted_sum(g, prod);
        if (s < 0 || s % order != 0) invalid(table.group, "tensor product does not decompose");
      }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      std::vector<long> prod(k);
      for (std::size_t c = 0; c < k; ++c) prod[c] = x[i][g.square_class(c)] * x[l][c];
      if (weighted_sum(g, prod) % order != 0) invalid(table.group, "square map is not a virtual character");
    }
}

CharacterTable character_table(const GroupId& id) {
  if (!in_catalogue(id)) throw DomainError("groups: " + group_name(id) + " is not in the catalogue");
  if (!has_integer_character_table(id))
    throw DomainError("groups: " + group_name(id) + " has no integer character table");
  const FiniteGroupData g = build_group(id);
  CharacterTable t{id, id.with_z2 ? product_table(id, g) : base_table(id)};
  validate_character_table(g, t);
  return t;
}

int fs_indicator(const FiniteGroupData& g, std::span<const long> chi) {
  if (chi.size() != g.class_count()) throw DomainError("fs_indicator: character has wrong length");
  long s = 0;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    s += static_cast<long>(g.class_size(c)) * chi[g.square_class(c)];
  const long order = static_cast<long>(g.order());
  if (s % order != 0) throw DomainError("fs_indicator: non-integral result, corrupted character data");
  const long nu = s / order;
  if (nu < -1 || nu > 1) throw DomainError("fs_indicator: indicator outside {-1, 0, 1}");
  return static_cast<int>(nu);
}

int cyclic_fs_indicator(const CyclicCharacter& chi) {
  if (chi.modulus == 0 || chi.index >= chi.modulus)
    throw DomainError("cyclic_fs_indicator: index must lie in [0, m)");
  return (2 * static_cast<unsigned long>(chi.index)) % chi.modulus == 0 ? 1 : 0;
}

IndicatorCounts indicator_counts(const GroupId& id) {
  IndicatorCounts n;
  if (has_integer_character_table(id)) {
    const FiniteGroupData g = build_group(id);
    for (const auto& row : character_table(id).chars) {
      switch (fs_indicator(g, row)) {
        case 1: ++n.real; break;
        case 0: ++n.complex; break;
        default: ++n.quaternionic; break;
      }
    }
    return n;
  }
  // Z/m or Z/2 × Z/m: the characters of the Z/2 factor are real, so each
  // character of Z/m contributes its type once or twice.
  const unsigned m = id.param;
  const std::size_t copies = id.with_z2 ? 2 : 1;
  for (unsigned j = 0; j < m; ++j) {
    if (cyclic_fs_indicator({m, j}) == 1) n.real += copies;
    else n.complex += copies;
  }
  return n;
}

bool all_tables_coincide(const GroupId& id) {
  const FiniteGroupData g = build_group(id);
  if (has_integer_character_table(id)) {
    for (const auto& row : character_table(id).chars)
      if (fs_indicator(g, row) != 1) return false;
    return true;
  }
  if (!g.is_abelian()) throw DomainError("groups: expected an abelian group for " + group_name(id));
  return g.involution_count() == g.order();
}

}  // namespace bredonk
