#include "bredonk/bredon/constructions.hpp"

#include "bredonk/errors.hpp"

namespace bredonk {

GammaCWDatum sl3_datum() {
  const GroupId s4 = GroupId::sym4(), d6 = GroupId::dihedral(6), d4 = GroupId::dihedral(4),
                d3 = GroupId::dihedral(3), v4 = GroupId::klein4(), z2 = GroupId::cyclic(2),
                one = GroupId::trivial();
  GammaCWDatum d;
  d.name = "SL3(Z)";
  d.cells = {
      {{"v1", s4}, {"v2", d6}, {"v3", s4}, {"v4", d4}, {"v5", s4}},
      {{"e1", v4}, {"e2", d3}, {"e3", d3}, {"e4", z2}, {"e5", z2}, {"e6", v4}, {"e7", d4}, {"e8", d4}},
      {{"t1", z2}, {"t2", one}, {"t3", v4}, {"t4", z2}, {"t5", z2}},
      {{"T1", one}},
  };

  // ∂3 ~ [1 0], ∂2 ~ [I10 0; 0 0], ∂1 ~ [I18 0; 0 0], with the identity blocks
  // placed so that im ∂_{n+1} lies in the columns ∂_n kills.
  IntMatrix d3m(11, 1);
  d3m(10, 0) = 1;
  IntMatrix d2m(28, 11);
  for (std::size_t i = 0; i < 10; ++i) d2m(i, i) = 1;
  IntMatrix d1m(26, 28);
  for (std::size_t i = 0; i < 18; ++i) d1m(i, 10 + i) = 1;
  d.raw_boundaries = {std::move(d1m), std::move(d2m), std::move(d3m)};
  d.snf_equivalent = true;
  return d;
}

GammaCWDatum fuchsian_cocompact_datum(const Signature& sig) {
  sig.validate();
  if (!sig.cocompact()) throw DomainError("cocompact construction needs s = 0, got " + sig.to_string());
  const GroupId one = GroupId::trivial();
  const std::size_t r = sig.cone_points();

  GammaCWDatum d;
  d.name = "Fuchsian " + sig.to_string();
  d.cells.resize(3);
  d.boundaries.resize(3);
  d.cells[0].push_back({"z", one});
  for (std::size_t j = 0; j < r; ++j)
    d.cells[0].push_back({"x" + std::to_string(j + 1), GroupId::cyclic(sig.periods[j])});

  for (unsigned i = 1; i <= 2 * sig.genus; ++i) {
    d.cells[1].push_back({"a" + std::to_string(i), one});
    d.boundaries[1].push_back({{1, "z", InductionSpec::identity()}, {-1, "z", InductionSpec::identity()}});
  }
  for (std::size_t j = 0; j < r; ++j) {
    const std::string x = "x" + std::to_string(j + 1);
    d.cells[1].push_back({"y" + std::to_string(j + 1), one});
    d.boundaries[1].push_back({{1, x, InductionSpec::from_trivial(GroupId::cyclic(sig.periods[j]))},
                               {-1, "z", InductionSpec::identity()}});
  }

  // the polygon word: commutators [a_i, a_{g+i}] then each y_j and its inverse
  std::vector<BoundaryTerm> word;
  for (unsigned i = 1; i <= sig.genus; ++i) {
    const std::string a = "a" + std::to_string(i), b = "a" + std::to_string(sig.genus + i);
    for (auto [c, l] : {std::pair{1L, a}, {1L, b}, {-1L, a}, {-1L, b}})
      word.push_back({c, l, InductionSpec::identity()});
  }
  for (std::size_t j = 0; j < r; ++j) {
    const std::string y = "y" + std::to_string(j + 1);
    word.push_back({1, y, InductionSpec::identity()});
    word.push_back({-1, y, InductionSpec::identity()});
  }
  d.cells[2].push_back({"w", one});
  d.boundaries[2].push_back(std::move(word));
  return d;
}

GraphOfGroupsDatum fuchsian_noncocompact_graph(const Signature& sig) {
  sig.validate();
  if (sig.cocompact()) throw DomainError("graph-of-groups construction needs s > 0, got " + sig.to_string());
  GraphOfGroupsDatum g;
  g.name = "Fuchsian " + sig.to_string();
  g.vertices.push_back(GroupId::trivial());
  g.vertex_labels.push_back("z");
  for (std::size_t j = 0; j < sig.cone_points(); ++j) {
    g.vertices.push_back(GroupId::cyclic(sig.periods[j]));
    g.vertex_labels.push_back("x" + std::to_string(j + 1));
  }
  const unsigned loops = 2 * sig.genus + sig.punctures - 1;
  for (unsigned k = 1; k <= loops; ++k)
    g.edges.push_back({"c" + std::to_string(k), GroupId::trivial(), 0, 0, InductionSpec::identity(),
                       InductionSpec::identity()});
  for (std::size_t j = 0; j < sig.cone_points(); ++j)
    g.edges.push_back({"d" + std::to_string(j + 1), GroupId::trivial(), 0, j + 1, InductionSpec::identity(),
                       InductionSpec::from_trivial(GroupId::cyclic(sig.periods[j]))});
  return g;
}

GammaCWDatum fuchsian_noncocompact_datum(const Signature& sig) {
  return fuchsian_noncocompact_graph(sig).to_cw_datum();
}

GraphOfGroupsDatum lifted_fuchsian_graph(const Signature& sig) {
  for (unsigned m : sig.periods)
    if (m != 2 && m != 3)
      throw DomainError("central Z2 lift needs periods in {2, 3}, got " + sig.to_string());
  GraphOfGroupsDatum g = fuchsian_noncocompact_graph(sig);
  g.name = "lift of " + g.name;
  const GroupId z2 = GroupId::cyclic(2);
  g.vertices[0] = z2;
  for (std::size_t j = 0; j < sig.cone_points(); ++j) g.vertices[j + 1] = GroupId::cyclic(2 * sig.periods[j]);
  for (auto& e : g.edges) {
    e.group = z2;
    e.into_source = InductionSpec::identity();
    e.into_target = e.target == 0 ? InductionSpec::identity()
                                  : InductionSpec::cyclic(2, g.vertices[e.target].cyclic_order());
  }
  return g;
}

GammaCWDatum lifted_fuchsian_datum(const Signature& sig) {
  return lifted_fuchsian_graph(sig).to_cw_datum();
}

GammaCWDatum fuchsian_datum(const Signature& sig) {
  return sig.cocompact() ? fuchsian_cocompact_datum(sig) : fuchsian_noncocompact_datum(sig);
}

}  // namespace bredonk
