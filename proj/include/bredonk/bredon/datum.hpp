#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bredonk/exactlinalg/abelian_group.hpp"
#include "bredonk/exactlinalg/chain_complex.hpp"
#include "bredonk/groups/group_id.hpp"
#include "bredonk/reprings/rep_ring.hpp"

namespace bredonk {

/// How the representation ring of a cell stabiliser maps into that of a face
/// stabiliser: "id", "triv->G" or "Zd->Zm".
struct InductionSpec {
  enum class Kind { Identity, FromTrivial, Cyclic };
  Kind kind = Kind::Identity;
  /// Target group for FromTrivial.
  GroupId target;
  unsigned from_order = 1;  // d for Cyclic
  unsigned to_order = 1;    // m for Cyclic

  static InductionSpec identity() { return {}; }
  static InductionSpec from_trivial(GroupId target) { return {Kind::FromTrivial, target, 1, 1}; }
  static InductionSpec cyclic(unsigned d, unsigned m) { return {Kind::Cyclic, {}, d, m}; }

  /// Throws ParseError on anything but the three forms above.
  static InductionSpec parse(std::string_view text);
  std::string to_string() const;

  /// The induction matrix from R_C(source) to R_C(target). Throws DomainError
  /// when the spec does not describe a subgroup of `target` isomorphic to `source`.
  IntMatrix resolve(const GroupId& source, const GroupId& target) const;

  friend bool operator==(const InductionSpec&, const InductionSpec&) = default;
};

struct Cell {
  std::string label;
  GroupId stabiliser;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// One summand of a cellular boundary: coefficient · Ind(target cell).
struct BoundaryTerm {
  long coefficient = 1;
  std::string target;
  InductionSpec induction;

  friend bool operator==(const BoundaryTerm&, const BoundaryTerm&) = default;
};

/// Orbit representatives of cells of a proper Γ-CW complex with their
/// stabilisers, plus either symbolic boundaries or explicit matrices.
///
/// cells[n] lists the n-cells. boundaries[n][i] is the boundary of cells[n][i]
/// (boundaries[0] is unused). In raw mode raw_boundaries[k] is the matrix of
/// ∂_{k+1} in the complex-representation-ring bases and symbolic boundaries
/// are ignored.
struct GammaCWDatum {
  std::string name;
  std::vector<std::vector<Cell>> cells;
  std::vector<std::vector<std::vector<BoundaryTerm>>> boundaries;
  std::vector<IntMatrix> raw_boundaries;
  /// The raw matrices are only Smith-equivalent to the geometric ones; the
  /// homology is right, individual chains are not.
  bool snf_equivalent = false;

  bool raw() const { return !raw_boundaries.empty(); }
  /// Highest dimension carrying cells or matrices; -1 for the empty datum.
  int dimension() const;

  friend bool operator==(const GammaCWDatum&, const GammaCWDatum&) = default;
};

/// Bredon chain complex with complex-representation-ring coefficients:
/// C_n = ⊕ over n-cells of R_C(stabiliser), boundary blocks are signed
/// induction matrices. Throws ParseError on unresolved labels and DomainError
/// on unknown groups, bad inductions or nonzero ∂∘∂.
IntChainComplex expand(const GammaCWDatum& datum);

/// H_n for n = 0 .. dimension.
std::vector<FinAbGroup> bredon_homology(const GammaCWDatum& datum);

/// Edge of a graph of finite groups: the edge group embeds into both
/// endpoint vertex groups.
struct GraphEdge {
  std::string label;  // defaults to e<index> when empty
  GroupId group;
  std::size_t source = 0;
  std::size_t target = 0;
  InductionSpec into_source;
  InductionSpec into_target;
};

/// A finite graph of finite groups; its Bass–Serre tree is a one-dimensional
/// model whose cells are the vertices and edges.
struct GraphOfGroupsDatum {
  std::string name;
  std::vector<GroupId> vertices;
  std::vector<std::string> vertex_labels;  // defaults to v<index> when empty
  std::vector<GraphEdge> edges;

  /// Vertices are 0-cells, edges 1-cells with ∂e = Ind(target) − Ind(source).
  GammaCWDatum to_cw_datum() const;
};

}  // namespace bredonk
