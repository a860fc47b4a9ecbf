#include "bredonk/exactlinalg/chain_complex.hpp"

#include "bredonk/errors.hpp"
#include "bredonk/exactlinalg/smith_normal_form.hpp"

namespace bredonk {

IntChainComplex::IntChainComplex(int bottom_degree, std::vector<std::size_t> ranks,
                                 std::vector<IntMatrix> boundaries)
    : bottom_degree_(bottom_degree),
      ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (boundaries_.size() != expected) {
    throw DomainError("chain complex: expected " + std::to_string(expected) +
                      " boundary matrices, got " + std::to_string(boundaries_.size()));
  }
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    const auto& b = boundaries_[k];
    if (b.rows() != ranks_[k] || b.cols() != ranks_[k + 1]) {
      throw DomainError("chain complex: boundary into degree " +
                        std::to_string(bottom_degree_ + static_cast<int>(k)) +
                        " has shape " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()) + ", expected " +
                        std::to_string(ranks_[k]) + "x" + std::to_string(ranks_[k + 1]));
    }
  }
  for (std::size_t k = 0; k + 1 < boundaries_.size(); ++k) {
    if (!(boundaries_[k] * boundaries_[k + 1]).is_zero()) {
      throw DomainError("chain complex: composite of boundaries out of degree " +
                        std::to_string(bottom_degree_ + static_cast<int>(k) + 2) +
                        " is nonzero");
    }
  }
}

IntChainComplex IntChainComplex::from_boundaries(int bottom_degree,
                                                 std::vector<IntMatrix> boundaries) {
  if (boundaries.empty()) throw DomainError("chain complex: no boundary matrices");
  std::vector<std::size_t> ranks;
  ranks.push_back(boundaries.front().rows());
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    if (k > 0 && boundaries[k].rows() != ranks.back()) {
      throw DomainError("chain complex: adjacent boundary shapes disagree");
    }
    ranks.push_back(boundaries[k].cols());
  }
  return IntChainComplex(bottom_degree, std::move(ranks), std::move(boundaries));
}

std::size_t IntChainComplex::rank(int n) const {
  if (n < bottom_degree_ || n > top_degree()) return 0;
  return ranks_[static_cast<std::size_t>(n - bottom_degree_)];
}

IntMatrix IntChainComplex::boundary(int n) const {
  const int k = n - bottom_degree_ - 1;
  if (k >= 0 && static_cast<std::size_t>(k) < boundaries_.size()) {
    return boundaries_[static_cast<std::size_t>(k)];
  }
  return IntMatrix(rank(n - 1), rank(n));
}

long IntChainComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < ranks_.size(); ++k) {
    const int n = bottom_degree_ + static_cast<int>(k);
    const long r = static_cast<long>(ranks_[k]);
    chi += (n % 2 == 0) ? r : -r;
  }
  return chi;
}

FinAbGroup homology(const IntChainComplex& c, int n) {
  const std::size_t dim = c.rank(n);
  if (dim == 0) return {};
  const auto outgoing = invariant_factors(c.boundary(n));
  const auto incoming = invariant_factors(c.boundary(n + 1));
  const std::size_t free_rank = dim - outgoing.size() - incoming.size();
  return FinAbGroup::from_cyclic_orders(free_rank, incoming);
}

std::vector<FinAbGroup> all_homology(const IntChainComplex& c) {
  std::vector<FinAbGroup> h;
  for (int n = c.bottom_degree(); n <= c.top_degree(); ++n) h.push_back(homology(c, n));
  return h;
}

}  // namespace bredonk
