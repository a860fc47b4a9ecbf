#pragma once

#include "bredonk/bredon/datum.hpp"
#include "bredonk/fuchsian/signature.hpp"

namespace bredonk {

/// The SL_3(Z) model: 5 vertex, 8 edge, 5 two-cell and 1 three-cell orbits
/// with their stabilisers, and differentials in Smith-equivalent form arranged
/// so that consecutive composites vanish. Chain ranks (26, 28, 11, 1).
GammaCWDatum sl3_datum();

/// Cocompact Fuchsian group (s = 0): one free vertex z, cone vertices x_j
/// stabilised by Z/m_j, loops a_1..a_2g at z, edges y_j from z to x_j, and a
/// single free 2-cell w. ∂w = 0, ∂a_i = 0, ∂y_j = Σ_l x_{j,l} − z.
GammaCWDatum fuchsian_cocompact_datum(const Signature& sig);

/// Non-cocompact Fuchsian group (s > 0) as a graph of groups: free vertex z
/// carrying 2g + s − 1 loops and one pendant edge to each Z/m_j vertex, all
/// edge groups trivial.
GraphOfGroupsDatum fuchsian_noncocompact_graph(const Signature& sig);
GammaCWDatum fuchsian_noncocompact_datum(const Signature& sig);

/// The same graph lifted along the central Z/2 of SL_2: every edge and the
/// free vertex carry Z/2, cone vertices Z/4 (over m = 2) or Z/6 (over m = 3).
/// Throws DomainError for periods other than 2 and 3.
GraphOfGroupsDatum lifted_fuchsian_graph(const Signature& sig);
GammaCWDatum lifted_fuchsian_datum(const Signature& sig);

/// Either Fuchsian construction, by whether the signature has punctures.
GammaCWDatum fuchsian_datum(const Signature& sig);

}  // namespace bredonk
