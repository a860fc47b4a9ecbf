#include "bredonk/groups/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "bredonk/errors.hpp"

namespace bredonk {
namespace {

using Perm = std::vector<unsigned>;

Perm compose(const Perm& a, const Perm& b) {
  // (a ∘ b)(i) = a(b(i))
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm cycle(unsigned degree, std::initializer_list<unsigned> points) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<unsigned> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

Perm product(const Perm& a, const Perm& b) { return compose(a, b); }

struct Generators {
  unsigned degree;
  std::vector<Perm> gens;
};

Generators base_generators(const GroupId& id) {
  switch (id.kind) {
    case GroupKind::Trivial:
      return {1, {}};
    case GroupKind::Cyclic: {
      const unsigned m = id.param;
      Perm r(m);
      for (unsigned i = 0; i < m; ++i) r[i] = (i + 1) % m;
      return {m, {r}};
    }
    case GroupKind::Klein4:
      return {4, {product(cycle(4, {0, 1}), cycle(4, {2, 3})),
                  product(cycle(4, {0, 2}), cycle(4, {1, 3}))}};
    case GroupKind::Dihedral: {
      const unsigned n = id.param;
      Perm r(n), s(n);
      for (unsigned i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
      }
      return {n, {r, s}};
    }
    case GroupKind::Sym4:
      return {4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})}};
  }
  throw DomainError("groups: unknown kind");
}

Generators generators(const GroupId& id) {
  Generators g = base_generators(id.inner());
  if (!id.with_z2) return g;
  const unsigned d = g.degree;
  for (auto& p : g.gens) {
    p.push_back(d);
    p.push_back(d + 1);
  }
  Perm swap(d + 2);
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[d], swap[d + 1]);
  g.gens.push_back(swap);
  g.degree = d + 2;
  return g;
}

}  // namespace

std::vector<std::vector<unsigned>> permutation_elements(const GroupId& id) {
  if (!in_catalogue(id)) throw DomainError("groups: " + group_name(id) + " is not in the catalogue");
  const Generators g = generators(id);
  Perm e(g.degree);
  std::iota(e.begin(), e.end(), 0u);
  std::set<Perm> seen{e};
  std::vector<Perm> frontier{e};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : g.gens) {
        Perm y = compose(s, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  // lexicographic order puts the identity first
  return {seen.begin(), seen.end()};
}

FiniteGroupData build_group(const GroupId& id) {
  const auto elems = permutation_elements(id);
  const std::size_t n = elems.size();
  std::map<Perm, FiniteGroupData::Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i], static_cast<FiniteGroupData::Element>(i));
  std::vector<FiniteGroupData::Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroupData(id, n, std::move(mult));
}

FiniteGroupData::FiniteGroupData(GroupId id, std::size_t order, std::vector<Element> mult)
    : id_(id), order_(order), mult_(std::move(mult)) {
  const std::size_t n = order_;
  if (n == 0 || mult_.size() != n * n) throw DomainError("groups: malformed Cayley table");
  for (Element x : mult_)
    if (x >= n) throw DomainError("groups: Cayley table entry out of range");
  for (Element a = 0; a < n; ++a)
    if (this->mult(0, a) != a || this->mult(a, 0) != a)
      throw DomainError("groups: element 0 is not the identity");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (this->mult(this->mult(a, b), c) != this->mult(a, this->mult(b, c)))
          throw DomainError("groups: multiplication is not associative");

  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b)
      if (this->mult(a, b) == 0 && this->mult(b, a) == 0) {
        inverse_[a] = b;
        found = true;
      }
    if (!found) throw DomainError("groups: element without a two-sided inverse");
  }

  element_order_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = this->mult(x, a)) ++k;
    element_order_[a] = k;
  }

  std::vector<std::vector<Element>> raw;
  std::vector<bool> done(n, false);
  for (Element a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::set<Element> cls;
    for (Element g = 0; g < n; ++g) cls.insert(this->mult(this->mult(g, a), inverse_[g]));
    for (Element x : cls) done[x] = true;
    raw.emplace_back(cls.begin(), cls.end());
  }
  std::sort(raw.begin(), raw.end(), [&](const auto& x, const auto& y) {
    return std::make_tuple(element_order_[x.front()], x.size(), x.front()) <
           std::make_tuple(element_order_[y.front()], y.size(), y.front());
  });
  classes_ = std::move(raw);

  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (Element x : classes_[c]) class_of_[x] = c;
  square_class_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const Element r = representative(c);
    square_class_[c] = class_of_[this->mult(r, r)];
  }
}

bool FiniteGroupData::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (mult(a, b) != mult(b, a)) return false;
  return true;
}

std::size_t FiniteGroupData::involution_count() const {
  std::size_t k = 0;
  for (Element a = 0; a < order_; ++a)
    if (mult(a, a) == 0) ++k;
  return k;
}

}  // namespace bredonk
