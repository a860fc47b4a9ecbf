#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bredonk/groups/group_id.hpp"

namespace bredonk {

/// A catalogue group as a Cayley table with conjugacy data. Element 0 is the
/// identity. Classes follow a fixed order: identity first, then increasing
/// element order, then increasing class size, then smallest member index.
class FiniteGroupData {
 public:
  using Element = std::uint32_t;

  const GroupId& id() const { return id_; }
  std::size_t order() const { return order_; }
  Element mult(Element a, Element b) const { return mult_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const { return element_order_[a]; }

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<Element>& conjugacy_class(std::size_t c) const { return classes_[c]; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  /// Smallest element index in the class.
  Element representative(std::size_t c) const { return classes_[c].front(); }
  std::size_t class_of(Element a) const { return class_of_[a]; }
  /// Class containing representative(c)².
  std::size_t square_class(std::size_t c) const { return square_class_[c]; }
  std::size_t inverse_class(std::size_t c) const { return class_of_[inverse_[representative(c)]]; }

  bool is_abelian() const;
  /// #{g : g² = 1}, counted from the Cayley table.
  std::size_t involution_count() const;

  /// Construction from a Cayley table; verifies the group axioms.
  FiniteGroupData(GroupId id, std::size_t order, std::vector<Element> mult);

 private:
  GroupId id_;
  std::size_t order_;
  std::vector<Element> mult_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> square_class_;
};

/// Builds the Cayley table of a catalogue group from a faithful permutation
/// representation. Throws DomainError for ids outside the catalogue.
FiniteGroupData build_group(const GroupId& id);

/// Permutation images of each element, in element-index order. The inner
/// factor of a Z/2 product acts on the leading points, the Z/2 on the last two.
std::vector<std::vector<unsigned>> permutation_elements(const GroupId& id);

}  // namespace bredonk
