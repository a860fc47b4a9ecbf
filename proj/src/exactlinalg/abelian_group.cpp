#include "bredonk/exactlinalg/abelian_group.hpp"

#include <ostream>

namespace bredonk {

FinAbGroup FinAbGroup::from_cyclic_orders(std::size_t free_rank,
                                          const std::vector<Integer>& orders) {
  FinAbGroup g(free_rank);
  std::vector<Integer> t;
  for (const auto& n : orders) {
    Integer a = abs(n);
    if (a == 0) {
      ++g.free_rank_;
    } else if (a != 1) {
      t.push_back(std::move(a));
    }
  }
  // After pass i, t[i] divides every later entry: (x, y) -> (gcd, lcm) keeps
  // the product and the isomorphism class of Z/x ⊕ Z/y.
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Integer g2 = gcd(t[i], t[j]);
      Integer l2 = lcm(t[i], t[j]);
      t[i] = std::move(g2);
      t[j] = std::move(l2);
    }
  }
  for (auto& x : t)
    if (x != 1) g.torsion_.push_back(std::move(x));
  return g;
}

FinAbGroup FinAbGroup::elementary(const Integer& n, std::size_t k) {
  return from_cyclic_orders(0, std::vector<Integer>(k, n));
}

Integer FinAbGroup::torsion_order() const {
  Integer o = 1;
  for (const auto& t : torsion_) o *= t;
  return o;
}

std::string FinAbGroup::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (free_rank_ == 1) {
    s = "Z";
  } else if (free_rank_ > 1) {
    s = "Z^" + std::to_string(free_rank_);
  }
  for (const auto& t : torsion_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FinAbGroup::from_cyclic_orders(a.free_rank() + b.free_rank(), orders);
}

FinAbGroup direct_power(const FinAbGroup& g, std::size_t k) {
  FinAbGroup s;
  for (std::size_t i = 0; i < k; ++i) s = direct_sum(s, g);
  return s;
}

FinAbGroup tensor_cyclic(const FinAbGroup& g, const Integer& n) {
  std::vector<Integer> orders(g.free_rank(), n);
  for (const auto& t : g.torsion()) orders.push_back(gcd(t, n));
  return FinAbGroup::from_cyclic_orders(0, orders);
}

FinAbGroup tor_cyclic(const FinAbGroup& g, const Integer& n) {
  if (n == 0) return {};
  std::vector<Integer> orders;
  for (const auto& t : g.torsion()) orders.push_back(gcd(t, n));
  return FinAbGroup::from_cyclic_orders(0, orders);
}

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) {
  return os << g.to_string();
}

}  // namespace bredonk
