#include "bredonk/groups/group_id.hpp"

#include <algorithm>
#include <charconv>

#include "bredonk/errors.hpp"

namespace bredonk {

GroupId GroupId::times_z2(GroupId inner) {
  if (inner.with_z2) throw DomainError("groups: Z2 products nest at most once");
  if (inner.is_trivial()) return cyclic(2);
  if (inner.kind == GroupKind::Cyclic && inner.param == 2) return klein4();
  inner.with_z2 = true;
  return inner;
}

bool GroupId::is_trivial() const {
  if (with_z2) return false;
  return kind == GroupKind::Trivial || (kind == GroupKind::Cyclic && param == 1);
}

bool GroupId::is_cyclic() const {
  if (with_z2) return false;
  return kind == GroupKind::Trivial || kind == GroupKind::Cyclic;
}

unsigned GroupId::cyclic_order() const {
  if (!is_cyclic()) throw DomainError("groups: " + group_name(*this) + " is not cyclic");
  return kind == GroupKind::Trivial ? 1 : param;
}

bool in_catalogue(const GroupId& id) {
  switch (id.kind) {
    case GroupKind::Trivial:
    case GroupKind::Klein4:
    case GroupKind::Sym4:
      return true;
    case GroupKind::Cyclic:
      return id.param >= 1;
    case GroupKind::Dihedral:
      return id.param == 3 || id.param == 4 || id.param == 6;
  }
  return false;
}

std::vector<GroupId> catalogue_groups(unsigned max_cyclic) {
  std::vector<GroupId> inner{GroupId::trivial()};
  for (unsigned m = 2; m <= max_cyclic; ++m) inner.push_back(GroupId::cyclic(m));
  inner.push_back(GroupId::klein4());
  for (unsigned n : {3u, 4u, 6u}) inner.push_back(GroupId::dihedral(n));
  inner.push_back(GroupId::sym4());
  std::vector<GroupId> out = inner;
  for (const auto& g : inner) {
    const GroupId p = GroupId::times_z2(g);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::string group_name(const GroupId& id) {
  std::string base;
  switch (id.kind) {
    case GroupKind::Trivial: base = "1"; break;
    case GroupKind::Cyclic: base = "Z" + std::to_string(id.param); break;
    case GroupKind::Klein4: base = "Z2xZ2"; break;
    case GroupKind::Dihedral: base = "D" + std::to_string(id.param); break;
    case GroupKind::Sym4: base = "S4"; break;
  }
  return id.with_z2 ? "Z2x" + base : base;
}

namespace {

unsigned parse_unsigned(std::string_view digits, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("unknown group name '" + std::string(whole) + "'");
  }
  return v;
}

GroupId parse_base(std::string_view name, std::string_view whole) {
  if (name == "1") return GroupId::trivial();
  if (name == "Z2xZ2") return GroupId::klein4();
  if (name == "S4") return GroupId::sym4();
  if (name.starts_with("Zm(") && name.ends_with(")")) {
    return GroupId::cyclic(parse_unsigned(name.substr(3, name.size() - 4), whole));
  }
  if (name.starts_with("D")) {
    GroupId id = GroupId::dihedral(parse_unsigned(name.substr(1), whole));
    if (!in_catalogue(id)) throw ParseError("dihedral group '" + std::string(whole) + "' not in catalogue");
    return id;
  }
  if (name.starts_with("Z")) {
    GroupId id = GroupId::cyclic(parse_unsigned(name.substr(1), whole));
    if (!in_catalogue(id)) throw ParseError("cyclic group '" + std::string(whole) + "' not in catalogue");
    return id;
  }
  throw ParseError("unknown group name '" + std::string(whole) + "'");
}

}  // namespace

GroupId parse_group_name(std::string_view name) {
  if (name != "Z2xZ2" && name.starts_with("Z2x")) {
    GroupId inner = parse_base(name.substr(3), name);
    if (inner.with_z2) throw ParseError("nested Z2 product in '" + std::string(name) + "'");
    return GroupId::times_z2(inner);
  }
  return parse_base(name, name);
}

}  // namespace bredonk
