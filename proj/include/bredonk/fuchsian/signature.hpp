#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bredonk {

/// Fuchsian signature [g, s; m_1, ..., m_r]: genus, number of punctures and
/// cone-point orders. Period order is kept as written but equality compares
/// periods as a multiset.
struct Signature {
  unsigned genus = 0;
  unsigned punctures = 0;
  std::vector<unsigned> periods;

  /// Parses "[g,s;m1,m2,...]" or "[g,s;]". Throws DomainError on malformed or
  /// invalid input.
  static Signature parse(std::string_view text);

  /// Throws DomainError when some period is below 2.
  void validate() const;

  bool cocompact() const { return punctures == 0; }
  std::size_t cone_points() const { return periods.size(); }
  unsigned long period_sum() const;

  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b);
};

}  // namespace bredonk
