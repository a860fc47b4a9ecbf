#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bredonk/exactlinalg/abelian_group.hpp"
#include "bredonk/fuchsian/signature.hpp"

namespace bredonk {

struct KGroups {
  FinAbGroup k0;
  FinAbGroup k1;

  friend bool operator==(const KGroups&, const KGroups&) = default;
};

/// Bredon homology with R_C coefficients in closed form: H_0 free of rank
/// 1 + Σ(m_j − 1); H_1 free of rank 2g (s = 0) or 2g + s − 1 (s > 0);
/// H_2 = Z when s = 0 and absent otherwise.
std::vector<FinAbGroup> fuchsian_bredon_closed_form(const Signature& sig);

/// Equivariant K-homology of the proper classifying space. For s = 0:
/// K_0 = Z^{2 − r + Σm}, K_1 = Z^{2g}; for s > 0: K_0 = Z^{1 − r + Σm},
/// K_1 = Z^{2g+s−1}.
KGroups equivariant_k(const Signature& sig);

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

enum class HeckeCase { P2, P3, R1, R5, R7, R11 };

/// Throws DomainError unless p is prime.
HeckeCase classify_hecke(std::uint64_t p);
std::string hecke_case_name(HeckeCase c);

/// Signature of Γ_0(p) ⊂ PSL_2(Z).
Signature hecke_signature(std::uint64_t p);

/// {H_0, H_1} of Γ_0(p).
std::vector<FinAbGroup> hecke_bredon(std::uint64_t p);

/// [0,1;2,3]
Signature modular_group_signature();

}  // namespace bredonk
