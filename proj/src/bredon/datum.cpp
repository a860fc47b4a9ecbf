#include "bredonk/bredon/datum.hpp"

#include <map>

#include "bredonk/errors.hpp"

namespace bredonk {

InductionSpec InductionSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s == "id") return identity();
  const auto arrow = s.find("->");
  if (arrow == std::string::npos) throw ParseError("unknown induction spec '" + std::string(text) + "'");
  const std::string from = s.substr(0, arrow);
  const std::string to = s.substr(arrow + 2);
  const GroupId target = parse_group_name(to);
  if (from == "triv" || from == "1") return from_trivial(target);
  const GroupId source = parse_group_name(from);
  if (!source.is_cyclic() || !target.is_cyclic())
    throw ParseError("induction spec '" + std::string(text) + "': only cyclic pairs are supported");
  if (target.cyclic_order() % source.cyclic_order() != 0)
    throw ParseError("induction spec '" + std::string(text) + "': source order does not divide target order");
  return cyclic(source.cyclic_order(), target.cyclic_order());
}

std::string InductionSpec::to_string() const {
  switch (kind) {
    case Kind::Identity: return "id";
    case Kind::FromTrivial: return "triv->" + group_name(target);
    case Kind::Cyclic:
      return "Z" + std::to_string(from_order) + "->Z" + std::to_string(to_order);
  }
  return "?";
}

IntMatrix InductionSpec::resolve(const GroupId& source, const GroupId& target_group) const {
  switch (kind) {
    case Kind::Identity: {
      const bool same = source == target_group || (source.is_trivial() && target_group.is_trivial());
      if (!same)
        throw DomainError("induction 'id' between different groups " + group_name(source) +
                          " and " + group_name(target_group));
      return IntMatrix::identity(rep_ring(source).rank);
    }
    case Kind::FromTrivial: {
      if (!source.is_trivial())
        throw DomainError("induction '" + to_string() + "' from nontrivial group " + group_name(source));
      const bool same = target == target_group || (target.is_trivial() && target_group.is_trivial());
      if (!same)
        throw DomainError("induction '" + to_string() + "' into " + group_name(target_group));
      return induction_from_trivial_group(target_group).matrix;
    }
    case Kind::Cyclic: {
      if (!source.is_cyclic() || source.cyclic_order() != from_order || !target_group.is_cyclic() ||
          target_group.cyclic_order() != to_order)
        throw DomainError("induction '" + to_string() + "' does not match " + group_name(source) +
                          " -> " + group_name(target_group));
      return cyclic_induction(from_order, to_order).matrix;
    }
  }
  throw DomainError("unknown induction kind");
}

int GammaCWDatum::dimension() const {
  const int by_cells = static_cast<int>(cells.size()) - 1;
  const int by_matrices = static_cast<int>(raw_boundaries.size());
  return std::max(by_cells, raw() ? by_matrices : -1);
}

namespace {

std::vector<std::size_t> cell_ranks(const std::vector<Cell>& cells) {
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& c : cells) {
    if (!in_catalogue(c.stabiliser))
      throw DomainError("cell " + c.label + ": stabiliser not in catalogue");
    offsets.push_back(total);
    total += rep_ring(c.stabiliser).rank;
  }
  offsets.push_back(total);
  return offsets;
}

void check_unique_labels(const GammaCWDatum& d) {
  for (std::size_t n = 0; n < d.cells.size(); ++n) {
    std::map<std::string, int> seen;
    for (const auto& c : d.cells[n])
      if (seen[c.label]++ > 0)
        throw ParseError("duplicate label '" + c.label + "' among " + std::to_string(n) + "-cells");
  }
}

}  // namespace

IntChainComplex expand(const GammaCWDatum& datum) {
  check_unique_labels(datum);
  const int top = datum.dimension();
  if (top < 0) return {};
  const std::size_t dims = static_cast<std::size_t>(top) + 1;

  // offsets[n][i] = first basis index of cell i in C_n; back() = rank C_n
  std::vector<std::vector<std::size_t>> offsets(dims);
  std::vector<bool> known(dims, false);
  for (std::size_t n = 0; n < dims; ++n) {
    if (n < datum.cells.size() && !datum.cells[n].empty()) {
      offsets[n] = cell_ranks(datum.cells[n]);
      known[n] = true;
    } else {
      offsets[n] = {0};
    }
  }

  std::vector<std::size_t> ranks(dims);
  if (datum.raw()) {
    for (std::size_t n = 0; n < dims; ++n) {
      if (known[n]) {
        ranks[n] = offsets[n].back();
      } else if (n < datum.raw_boundaries.size()) {
        ranks[n] = datum.raw_boundaries[n].rows();  // ∂_{n+1} lands in C_n
      } else if (n >= 1 && n - 1 < datum.raw_boundaries.size()) {
        ranks[n] = datum.raw_boundaries[n - 1].cols();
      }
    }
    std::vector<IntMatrix> bd = datum.raw_boundaries;
    bd.resize(dims - 1, IntMatrix());
    for (std::size_t k = 0; k < bd.size(); ++k)
      if (bd[k].rows() == 0 && bd[k].cols() == 0) bd[k] = IntMatrix(ranks[k], ranks[k + 1]);
    return IntChainComplex(0, std::move(ranks), std::move(bd));
  }

  for (std::size_t n = 0; n < dims; ++n) ranks[n] = offsets[n].back();
  std::vector<IntMatrix> bd;
  for (std::size_t n = 1; n < dims; ++n) {
    IntMatrix m(ranks[n - 1], ranks[n]);
    const auto& sources = datum.cells[n];
    const auto& faces = datum.cells[n - 1];
    std::map<std::string, std::size_t> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i].label, i);
    const auto* terms_by_cell = n < datum.boundaries.size() ? &datum.boundaries[n] : nullptr;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (!terms_by_cell || i >= terms_by_cell->size()) continue;
      for (const auto& term : (*terms_by_cell)[i]) {
        const auto it = face_index.find(term.target);
        if (it == face_index.end())
          throw ParseError("boundary of " + sources[i].label + " refers to unknown " +
                           std::to_string(n - 1) + "-cell '" + term.target + "'");
        const Cell& face = faces[it->second];
        const IntMatrix block = term.induction.resolve(sources[i].stabiliser, face.stabiliser);
        m.add_block(offsets[n - 1][it->second], offsets[n][i], block, term.coefficient);
      }
    }
    bd.push_back(std::move(m));
  }
  return IntChainComplex(0, std::move(ranks), std::move(bd));
}

std::vector<FinAbGroup> bredon_homology(const GammaCWDatum& datum) {
  return all_homology(expand(datum));
}

GammaCWDatum GraphOfGroupsDatum::to_cw_datum() const {
  GammaCWDatum d;
  d.name = name;
  d.cells.resize(2);
  auto vlabel = [&](std::size_t i) {
    return i < vertex_labels.size() ? vertex_labels[i] : "v" + std::to_string(i);
  };
  for (std::size_t i = 0; i < vertices.size(); ++i) d.cells[0].push_back({vlabel(i), vertices[i]});
  d.boundaries.resize(2);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    if (e.source >= vertices.size() || e.target >= vertices.size())
      throw DomainError("graph of groups: edge endpoint out of range");
    d.cells[1].push_back({e.label.empty() ? "e" + std::to_string(k) : e.label, e.group});
    d.boundaries[1].push_back({{1, vlabel(e.target), e.into_target}, {-1, vlabel(e.source), e.into_source}});
  }
  return d;
}

}  // namespace bredonk
