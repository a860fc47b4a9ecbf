#include "bredonk/ko_assembly/ko_assembly.hpp"

#include "bredonk/errors.hpp"

namespace bredonk {
namespace {

std::size_t reduce(long n, unsigned period) {
  const long p = static_cast<long>(period);
  return static_cast<std::size_t>(((n % p) + p) % p);
}

const FinAbGroup& zero_group() {
  static const FinAbGroup z;
  return z;
}

}  // namespace

GradedGroup::GradedGroup(unsigned period_, std::vector<FinAbGroup> groups_, std::set<unsigned> ambiguous)
    : period(period_), groups(std::move(groups_)), extension_ambiguous(std::move(ambiguous)) {
  if (period != 2 && period != 8) throw DomainError("graded groups have period 2 or 8");
  if (groups.size() != period)
    throw DomainError("graded group of period " + std::to_string(period) + " given " +
                      std::to_string(groups.size()) + " groups");
  for (auto d : extension_ambiguous)
    if (d >= period) throw DomainError("extension flag on degree outside one period");
}

const FinAbGroup& GradedGroup::at(long n) const { return groups.at(reduce(n, period)); }

bool GradedGroup::ambiguous(long n) const {
  return extension_ambiguous.count(static_cast<unsigned>(reduce(n, period))) > 0;
}

const GradedGroup& ko_point() {
  static const GradedGroup ko(8, {FinAbGroup(1), FinAbGroup::cyclic(2), FinAbGroup::cyclic(2), {}, FinAbGroup(1), {},
                                  {}, {}});
  return ko;
}

const GradedGroup& k_point() {
  static const GradedGroup k(2, {FinAbGroup(1), {}});
  return k;
}

FinAbGroup E2Page::at(int p, long q) const {
  auto it = entries.find({p, static_cast<unsigned>(reduce(q, period))});
  return it == entries.end() ? zero_group() : it->second;
}

std::vector<int> E2Page::nonzero_columns() const {
  std::vector<int> cols;
  for (const auto& [key, g] : entries)
    if (!g.is_zero() && (cols.empty() || cols.back() != key.first)) cols.push_back(key.first);
  return cols;
}

KGroups collapse_complex(const std::vector<FinAbGroup>& h) {
  for (std::size_t n = 3; n < h.size(); ++n)
    if (!h[n].is_zero())
      throw DomainError("H_" + std::to_string(n) + " = " + h[n].to_string() +
                        " is nonzero; the spectral sequence need not collapse");
  auto get = [&](std::size_t n) { return n < h.size() ? h[n] : FinAbGroup(); };
  return {direct_sum(get(0), get(2)), get(1)};
}

E2Page ko_e2_page(const std::vector<FinAbGroup>& h) {
  E2Page page;
  page.period = 8;
  // a Tor term from H_{max} lands in column max + 1
  page.max_p = h.empty() ? -1 : static_cast<int>(h.size());
  const auto& ko = ko_point();
  for (int p = 0; p <= page.max_p; ++p) {
    const FinAbGroup hp = p < static_cast<int>(h.size()) ? h[p] : FinAbGroup();
    const FinAbGroup hprev = p >= 1 ? h[p - 1] : FinAbGroup();
    for (unsigned q = 0; q < 8; ++q) {
      const auto& coeff = ko.at(q);
      FinAbGroup entry;
      if (coeff == FinAbGroup(1)) {
        entry = hp;
      } else if (!coeff.is_zero()) {
        entry = direct_sum(tensor_z2(hp), tor_z2(hprev));
      }
      if (!entry.is_zero()) page.entries[{p, q}] = entry;
    }
  }
  if (page.nonzero_columns().empty()) page.max_p = -1;
  return page;
}

GradedGroup ko_column_collapse(const E2Page& page) {
  if (page.period != 8) throw DomainError("KO pages have period 8");
  for (int p : page.nonzero_columns())
    if (p != 0)
      throw DomainError("E^2 page has a nonzero column at p = " + std::to_string(p) +
                        "; differentials are not determined");
  std::vector<FinAbGroup> groups;
  for (unsigned q = 0; q < 8; ++q) groups.push_back(page.at(0, q));
  return GradedGroup(8, std::move(groups));
}

std::vector<FinAbGroup> kunneth_times_z2(const std::vector<FinAbGroup>& h) {
  std::vector<FinAbGroup> out;
  out.reserve(h.size());
  for (std::size_t n = 0; n < h.size(); ++n) {
    if (!h[n].is_free())
      throw DomainError("H_" + std::to_string(n) + " = " + h[n].to_string() +
                        " has torsion; the Kunneth Tor terms are not handled");
    out.push_back(FinAbGroup(2 * h[n].free_rank()));
  }
  return out;
}

}  // namespace bredonk
