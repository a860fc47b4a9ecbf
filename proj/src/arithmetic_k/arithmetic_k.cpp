#include "bredonk/arithmetic_k/arithmetic_k.hpp"

#include <algorithm>

#include "bredonk/errors.hpp"

namespace bredonk {
namespace {

bool has_period(const Signature& sig, unsigned m) {
  return std::find(sig.periods.begin(), sig.periods.end(), m) != sig.periods.end();
}

void require_free(const FinAbGroup& g, const char* what) {
  if (!g.is_free()) throw DomainError(std::string(what) + " = " + g.to_string() + " has torsion");
}

std::uint64_t wedge_count(std::uint64_t p) {
  if (classify_hecke(p) != HeckeCase::R11)
    throw DomainError("p = " + std::to_string(p) + " is not 11 mod 12");
  return (p + 7) / 6;
}

}  // namespace

ClassCount class_count_psl(std::uint64_t p) {
  const Signature sig = hecke_signature(p);
  ClassCount c;
  c.order2 = has_period(sig, 2) ? 1 : 2;
  c.order3 = has_period(sig, 3) ? 2 : 4;
  c.total = c.identity + c.order2 + c.order3;
  return c;
}

MaximalSubgroupList maximal_subgroups(std::uint64_t p) {
  const ClassCount c = class_count_psl(p);
  return {c.order2, c.order3 / 2};
}

std::vector<FinAbGroup> psl_zp_bredon(std::uint64_t p) {
  const auto gamma0 = hecke_bredon(p);
  const auto modular = fuchsian_bredon_closed_form(modular_group_signature());
  for (const auto& g : gamma0) require_free(g, "H_n(Gamma_0(p))");
  for (const auto& g : modular) require_free(g, "H_n(PSL_2(Z))");
  if (!modular[1].is_zero()) throw DomainError("H_1(PSL_2(Z)) is nonzero; the sequence does not split");

  const long h0 = class_count_psl(p).total;
  const long h1 = static_cast<long>(gamma0[0].free_rank()) - 2 * static_cast<long>(modular[0].free_rank()) + h0;
  if (h1 < 0) throw DomainError("Mayer-Vietoris forces a negative rank for H_1 at p = " + std::to_string(p));
  return {FinAbGroup(static_cast<std::size_t>(h0)), FinAbGroup(static_cast<std::size_t>(h1)), gamma0[1]};
}

KGroups psl_zp_k(std::uint64_t p) { return collapse_complex(psl_zp_bredon(p)); }

KGroups sl_zp_k(std::uint64_t p) {
  const KGroups k = psl_zp_k(p);
  return {direct_power(k.k0, 2), direct_power(k.k1, 2)};
}

KGroups cstar_k_p11(std::uint64_t p) {
  const std::uint64_t b = wedge_count(p);
  const MaximalSubgroupList max = maximal_subgroups(p);
  // reduced K_0 of C*(Z/m) is Z^{m−1}; K of a wedge of b two-spheres is Z^{1+b}, 0
  const std::size_t rank = max.z2_classes * 1 + max.z3_classes * 2 + 1 + b;
  return {FinAbGroup(rank), FinAbGroup()};
}

GradedGroup cstar_ko_p11(std::uint64_t p) {
  const std::uint64_t b = wedge_count(p);
  const MaximalSubgroupList max = maximal_subgroups(p);
  const auto& ko = ko_point();
  const auto& k = k_point();
  std::vector<FinAbGroup> groups;
  for (long n = 0; n < 8; ++n) {
    FinAbGroup g = direct_power(ko.at(n), max.z2_classes);
    g = direct_sum(g, direct_power(k.at(n), max.z3_classes));
    g = direct_sum(g, ko.at(n));
    g = direct_sum(g, direct_power(ko.at(n - 2), b));
    groups.push_back(std::move(g));
  }
  return GradedGroup(8, std::move(groups), {1, 3, 4});
}

}  // namespace bredonk
